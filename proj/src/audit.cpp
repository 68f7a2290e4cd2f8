#include "ggt/audit.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ggt/braid_checks.hpp"
#include "ggt/complex.hpp"
#include "ggt/embed.hpp"
#include "ggt/error.hpp"
#include "ggt/fixtures.hpp"

namespace ggt::audit {

namespace {

using nlohmann::ordered_json;

struct Outcome {
    std::string status;
    ordered_json witness;
};

using CheckFn = std::function<Outcome(const Options&)>;

struct Check {
    std::string id;
    std::string claim;
    CheckFn run;
};

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

Word g0(const std::string& text) { return parse_word(text, alphabets::g0()); }
Word b4(const std::string& text) { return parse_word(text, alphabets::b4()); }
Word in_b4(const std::string& text) { return garside::to_b4(text, garside::six_generators(garside::Fixture::right)); }

ordered_json claims_json(const std::vector<garside::Claim>& claims) {
    ordered_json out = ordered_json::array();
    for (const auto& c : claims)
        out.push_back({{"claim", c.claim}, {"status", verdict(c.pass)}, {"lhs_nf", c.lhs_nf}, {"rhs_nf", c.rhs_nf}});
    return out;
}

ordered_json cycle_json(const garside::CycleClaim& c) {
    return {{"claim", c.claim}, {"status", verdict(c.pass)}, {"period", c.period}, {"steps", c.steps}};
}

std::string length_str(const Length& l) { return to_string(l); }

// braid group ---------------------------------------------------------------

Outcome braid_center(const Options&) {
    const auto x4 = garside::normal_form(in_b4("x^4"));
    const auto y3 = garside::normal_form(in_b4("y^3"));
    const garside::NormalForm delta2{2, {}};
    const bool central = garside::is_central(in_b4("x^4"));
    const bool x2_central = garside::is_central(in_b4("x^2"));
    const bool ok = x4 == delta2 && y3 == delta2 && central && !x2_central;
    return {verdict(ok),
            {{"nf(x^4)", x4.str()}, {"nf(y^3)", y3.str()}, {"x^4 central", central}, {"x^2 central", x2_central}}};
}

struct Combination {
    garside::Fixture fixture;
    garside::Convention conjugation;
    int presentation_passes = 0;
    bool orbits = false;
};

std::vector<Combination> conventions_table() {
    std::vector<Combination> out;
    for (auto fx : {garside::Fixture::literal, garside::Fixture::left, garside::Fixture::right}) {
        const auto gens = garside::six_generators(fx);
        int passes = 0;
        for (const auto& c : garside::verify_six_generator_presentation(gens)) passes += c.pass;
        for (auto conv : {garside::Convention::left, garside::Convention::right}) {
            // the orbit claims not involving B^ decide the convention
            auto claims = garside::orbit_claims(gens, conv, garside::to_b4("CCbcc", gens));
            const bool orbits = std::all_of(claims.begin(), claims.begin() + 3, [](const auto& c) { return c.pass; });
            out.push_back({fx, conv, passes, orbits});
        }
    }
    return out;
}

Outcome braid_conventions(const Options&) {
    ordered_json table = ordered_json::array();
    std::vector<const Combination*> winners;
    const auto combos = conventions_table();
    for (const auto& c : combos) {
        table.push_back({{"definitions", garside::to_string(c.fixture)},
                         {"conjugation", garside::to_string(c.conjugation)},
                         {"relations_holding", c.presentation_passes},
                         {"orbits_close", c.orbits}});
        if (c.presentation_passes == 10 && c.orbits) winners.push_back(&c);
    }
    if (winners.size() != 1) return {"fail", {{"combinations", table}, {"consistent", winners.size()}}};
    const auto& w = *winners.front();
    const std::string v = std::string("definitions ") + garside::to_string(w.fixture) + ", conjugation " +
                          garside::to_string(w.conjugation);
    return {"resolved:" + v,
            {{"combinations", table},
             {"d", garside::six_generators(w.fixture).d.str()},
             {"e", garside::six_generators(w.fixture).e.str()},
             {"f", garside::six_generators(w.fixture).f.str()}}};
}

Outcome braid_presentation(const Options&) {
    const auto resolved = garside::verify_six_generator_presentation(garside::six_generators(garside::Fixture::right));
    const auto literal = garside::verify_six_generator_presentation(garside::six_generators(garside::Fixture::literal));
    const bool ok = std::all_of(resolved.begin(), resolved.end(), [](const auto& c) { return c.pass; });
    int literal_passes = 0;
    for (const auto& c : literal) literal_passes += c.pass;
    return {verdict(ok),
            {{"fixture", "e = a^-1 b a, f = c^-1 b c, d = (ac)^-1 b ac"},
             {"relations", claims_json(resolved)},
             {"literal_fixture_relations_holding", literal_passes}}};
}

Outcome braid_orbit_x(const Options& o) {
    const auto gens = garside::six_generators(garside::Fixture::right);
    const auto claims = garside::orbit_claims(gens, o.conjugation, garside::to_b4("CCbcc", gens));
    const bool ok = claims[0].pass && claims[1].pass;
    return {verdict(ok),
            {{"conjugation", garside::to_string(o.conjugation)}, {"cycles", {cycle_json(claims[0]), cycle_json(claims[1])}}}};
}

Outcome braid_orbit_y(const Options& o) {
    const auto gens = garside::six_generators(garside::Fixture::right);
    const auto claims = garside::orbit_claims(gens, o.conjugation, garside::to_b4("CCbcc", gens));
    const bool ok = claims[2].pass && claims[3].pass;
    return {verdict(ok),
            {{"conjugation", garside::to_string(o.conjugation)},
             {"hat_b", "c^-2 b c^2"},
             {"cycles", {cycle_json(claims[2]), cycle_json(claims[3])}}}};
}

Outcome erratum_hat_b(const Options& o) {
    const auto gens = garside::six_generators(garside::Fixture::right);
    ordered_json rows = ordered_json::array();
    std::vector<std::string> closing;
    for (const auto& cand : garside::hat_b_candidates()) {
        const auto claims = garside::orbit_claims(gens, o.conjugation, garside::to_b4(cand.text, gens));
        rows.push_back({{"candidate", cand.label},
                        {"nf", garside::normal_form(garside::to_b4(cand.text, gens)).str()},
                        {"closes_y_orbit", claims[3].pass}});
        if (claims[3].pass) closing.push_back(cand.label);
    }
    const auto same = garside::check_equal("CCbcc", "ffbFF", gens);
    rows.push_back({{"claim", "c^-2 b c^2 = f^2 b f^-2"}, {"status", verdict(same.pass)}});
    if (closing.empty()) return {"fail", {{"candidates", rows}}};
    std::string v;
    for (const auto& c : closing) v += (v.empty() ? "" : " = ") + c;
    return {"resolved:B^ = " + v, {{"candidates", rows}}};
}

Outcome erratum_c(const Options&) {
    const Word c = b4("c");
    const bool printed = garside::equals_mod_center(c, in_b4("xY"));
    const bool swapped = garside::equals_mod_center(c, in_b4("Xy"));
    ordered_json w = {{"c = x y^-1 (mod centre)", printed}, {"c = x^-1 y (mod centre)", swapped},
                      {"nf(x^-1 y)", garside::normal_form(in_b4("Xy")).str()}, {"nf(c)", garside::normal_form(c).str()}};
    if (printed == swapped) return {"fail", w};
    return {std::string("resolved:") + (printed ? "c = x y^-1" : "c = x^-1 y"), w};
}

Outcome identity_a(const Options&) {
    const bool ok = garside::equals_mod_center(b4("a"), in_b4("xyx^-2"));
    return {verdict(ok), {{"nf(x y x^-2)", garside::normal_form(in_b4("xyx^-2")).str()}, {"nf(a)", "D^0 | [2 1 3 4]"}}};
}

Outcome identity_b(const Options&) {
    const Word rhs = in_b4("x") * b4("AC");
    const bool exact = garside::equals_in_b4(b4("b"), rhs);
    const bool mod = garside::equals_mod_center(b4("b"), rhs);
    return {verdict(mod), {{"exact in B4", exact}, {"mod centre", mod}, {"nf(x a^-1 c^-1)", garside::normal_form(rhs).str()}}};
}

Outcome g0_relators_in_b4(const Options&) {
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (const auto& r : coset::g0_presentation().relators) {
        const Word w = substitute(r, g0_to_b4());
        const auto nf = garside::normal_form(w);
        const bool central = nf.is_delta_power() && nf.inf % 2 == 0;
        ok = ok && central;
        rows.push_back({{"relator", r.str()}, {"nf", nf.str()}, {"central", central}});
    }
    return {verdict(ok), {{"relators", rows}}};
}

// coset enumeration ---------------------------------------------------------

Outcome index_check(const coset::Presentation& p, const std::vector<std::string>& subgens, std::size_t expected,
                    const Options& o) {
    std::vector<Word> words;
    ordered_json names = ordered_json::array();
    for (const auto& s : subgens) {
        words.push_back(parse_word(s, p.alphabet));
        names.push_back(s);
    }
    ordered_json w = {{"group", p.name}, {"subgroup", names}, {"expected", expected}, {"cap", o.cap}};
    std::map<std::string, coset::CosetTable> tables;
    for (auto strategy : {coset::Strategy::hlt, coset::Strategy::felsch}) {
        auto t = coset::enumerate(p, words, o.cap, strategy);
        ordered_json row = {{"status", t.status == coset::Status::complete ? "complete" : "overflow"},
                            {"defined", t.defined}};
        if (t.status == coset::Status::complete) {
            row["count"] = t.count;
            row["verified"] = coset::verify_table(p, words, t);
        }
        w[coset::to_string(strategy)] = row;
        tables.emplace(coset::to_string(strategy), std::move(t));
    }
    const auto& hlt = tables.at("HLT");
    const auto& felsch = tables.at("Felsch");
    if (hlt.status != coset::Status::complete || felsch.status != coset::Status::complete) return {"inconclusive", w};
    const bool agree = hlt.count == felsch.count;
    const bool verified = coset::verify_table(p, words, hlt) && coset::verify_table(p, words, felsch);
    const bool small = hlt.defined < 1000 && felsch.defined < 1000;
    w["count"] = hlt.count;
    return {verdict(agree && verified && small && hlt.count == expected), w};
}

Outcome index_g1(const Options& o) { return index_check(coset::g0_presentation(), {"xyx^-2", "y"}, 4, o); }
Outcome index_g0_xy(const Options& o) { return index_check(coset::g0_presentation(), {"x", "y"}, 1, o); }
Outcome index_g0_ax(const Options& o) { return index_check(coset::g0_presentation(), {"xyx^-2", "x"}, 1, o); }

Outcome index_sl2z(const Options& o) {
    Outcome out = index_check(coset::sl2z_presentation(), {"s^2t", "s^3t"}, 4, o);
    // the two generators already produce S
    const Word quotient = parse_word("s^3t", alphabets::sl2()) * parse_word("s^2t", alphabets::sl2()).inverse();
    out.witness["(s^3 t)(s^2 t)^-1"] = quotient.str();
    return out;
}

// representations -----------------------------------------------------------

Outcome pi_relators(const Options&) {
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (const auto& c : reps::verify_matrix_homomorphism(coset::g0_presentation(), reps::pi_assignment())) {
        rows.push_back({{"relator", c.relator}, {"value", c.value.str()}, {"status", verdict(c.pass)}});
        ok = ok && c.pass;
    }
    return {verdict(ok), {{"assignment", "x -> S, y -> -ST"}, {"relators", rows}}};
}

Outcome pi_sl2z(const Options&) {
    const auto s = reps::matrix_s();
    const auto t = reps::matrix_t();
    const auto s4 = s * s * s * s;
    const auto st = s * t;
    const auto st3 = st * st * st;
    const bool ok = s4 == reps::Matrix2::identity() && st3 == s * s;
    return {verdict(ok), {{"S^4", s4.str()}, {"(ST)^3", st3.str()}, {"S^2", (s * s).str()}}};
}

Outcome pi_minus_st(const Options&) {
    const auto lhs = -(reps::matrix_s() * reps::matrix_t());
    const auto rhs = reps::matrix_s().inverse() * reps::matrix_t();
    return {verdict(lhs == rhs), {{"-ST", lhs.str()}, {"S^-1 T", rhs.str()}}};
}

Outcome pi_g1_images(const Options&) {
    const auto assign = reps::pi_assignment();
    const auto a = reps::eval_matrix(g0("xyx^-2"), assign);
    const auto y = reps::eval_matrix(g0("y"), assign);
    const auto minus_t = -reps::matrix_t();
    const auto minus_st = -(reps::matrix_s() * reps::matrix_t());
    return {verdict(a == minus_t && y == minus_st),
            {{"pi(x y x^-2)", a.str()}, {"-T", minus_t.str()}, {"pi(y)", y.str()}, {"-ST", minus_st.str()}}};
}

Outcome perm_stabilizer(const Options& o) {
    const auto assign = reps::standard_perm_assignment();
    const auto a = reps::eval_perm(b4("a"), assign, o.composition);
    const auto y = reps::eval_perm(in_b4("y"), assign, o.composition);
    const auto closure = reps::subgroup_closure({a, y});
    return {verdict(closure.is_point_stabilizer()),
            {{"composition", reps::to_string(o.composition)},
             {"image(a)", a.cycles()},
             {"image(y)", y.cycles()},
             {"order", closure.elements.size()},
             {"fixed_points", closure.common_fixed_points}}};
}

Outcome perm_cycle_types(const Options& o) {
    const auto assign = reps::standard_perm_assignment();
    const auto x = reps::eval_perm(in_b4("x"), assign, o.composition);
    const auto y = reps::eval_perm(in_b4("y"), assign, o.composition);
    const auto p = coset::g0_presentation();
    const auto t = coset::enumerate(p, {g0("xyx^-2"), g0("y")}, o.cap);
    if (t.status != coset::Status::complete) return {"inconclusive", {{"coset_table", "overflow"}}};
    const auto image = coset::permutation_image(t);
    auto as_sizes = [](const std::array<int, 4>& type) {
        std::vector<std::size_t> out;
        for (int len : type)
            if (len > 0) out.push_back(static_cast<std::size_t>(len));
        return out;
    };
    const auto x_s4 = as_sizes(x.cycle_type());
    const auto y_s4 = as_sizes(y.cycle_type());
    const auto x_cos = coset::cycle_type(image[0]);
    const auto y_cos = coset::cycle_type(image[1]);
    const bool ok = x_s4 == std::vector<std::size_t>{4} && y_s4 == std::vector<std::size_t>{3, 1} && x_s4 == x_cos &&
                    y_s4 == y_cos;
    return {verdict(ok),
            {{"image(x)", x.cycles()}, {"image(y)", y.cycles()}, {"x on S4", x_s4}, {"y on S4", y_s4},
             {"x on cosets", x_cos}, {"y on cosets", y_cos}}};
}

// complexes and links -------------------------------------------------------

Outcome link_girth(const Options&) {
    const auto cx = x1bar();
    const auto link = vertex_link(cx, "o");
    const Length by_deletion = girth(link);
    const Length by_cycles = girth_exhaustive(link);
    const auto report = check_link_condition(cx);
    const bool ok = by_deletion && *by_deletion == Angle(2) && by_deletion == by_cycles && report.pass;
    return {verdict(ok),
            {{"girth (arc deletion)", length_str(by_deletion)},
             {"girth (cycle enumeration)", length_str(by_cycles)},
             {"link condition", report.pass}}};
}

Outcome link_shape(const Options&) {
    const auto link = vertex_link(x1bar(), "o");
    std::map<std::size_t, std::size_t> degrees;
    for (std::size_t n = 0; n < link.node_count(); ++n) ++degrees[link.degree(n)];
    const bool lengths = std::all_of(link.arcs().begin(), link.arcs().end(),
                                     [](const auto& a) { return a.length == Angle(1, 3); });
    const bool bipartite = is_bipartite(link);
    const std::map<std::size_t, std::size_t> expected{{2, 6}, {3, 6}, {4, 6}};
    const bool ok = link.node_count() == 18 && link.arc_count() == 27 && lengths && degrees == expected && bipartite;
    ordered_json deg = ordered_json::object();
    for (auto [d, n] : degrees) deg[std::to_string(d)] = n;
    return {verdict(ok),
            {{"nodes", link.node_count()}, {"arcs", link.arc_count()}, {"all arcs pi/3", lengths},
             {"degree multiset", deg}, {"bipartite", bipartite}}};
}

Outcome brady_girth(const Options&) {
    const auto g = brady_link();
    const Length by_deletion = girth(g);
    const Length by_cycles = girth_exhaustive(g);
    bool cubic = true;
    for (std::size_t n = 0; n < g.node_count(); ++n) cubic = cubic && g.degree(n) == 3;
    Angle cycle;
    for (const auto& a : g.arcs())
        if (a.length == Angle(1, 3)) cycle += a.length;
    const bool ok = by_deletion && *by_deletion == Angle(2) && by_deletion == by_cycles && cubic && cycle == Angle(8, 3);
    return {verdict(ok),
            {{"girth (arc deletion)", length_str(by_deletion)},
             {"girth (cycle enumeration)", length_str(by_cycles)},
             {"all nodes of degree 3", cubic},
             {"hamiltonian cycle length", cycle.str()}}};
}

Outcome symmetry_y(const Options&) {
    const auto cx = x1bar();
    const auto relabel = relabel_check(cx, y_relabeling());
    const auto link = vertex_link(cx, "o");
    const auto map = y_link_automorphism(link);
    const bool automorphism = is_automorphism(link, map);
    bool fixed = false;
    std::size_t order = 1;
    for (std::size_t n = 0; n < map.size(); ++n) fixed = fixed || map[n] == n;
    std::vector<std::size_t> power = map;
    while (std::any_of(power.begin(), power.end(), [&, i = std::size_t{0}](std::size_t v) mutable { return v != i++; }) &&
           order < 64) {
        for (auto& v : power) v = map[v];
        ++order;
    }
    const bool ok = relabel.symmetry && relabel.order == 3 && automorphism && order == 3 && !fixed;
    return {verdict(ok),
            {{"relabeling is a symmetry", relabel.symmetry},
             {"relabeling order", relabel.order},
             {"link automorphism", automorphism},
             {"link map order", order},
             {"fixed link nodes", fixed}}};
}

// embeddings ----------------------------------------------------------------

Outcome embed_brady(const Options&) {
    const auto src = brady_link();
    const auto dst = graph_fixture("x1bar-link-smoothed");
    embed::SearchOptions so;
    const auto result = embed::find_embeddings(src, dst, so);
    ordered_json w = {{"certificates", result.certificates.size()}, {"search tree nodes", result.stats.tree_nodes}};
    if (!result.certificates.empty()) {
        const auto& first = result.certificates.front();
        w["first certificate"] = ordered_json::parse(embed::certificate_json(first, src, dst));
        const auto check = embed::verify_certificate(first, src, dst);
        w["independent check"] = check.ok ? "valid" : check.reason;
        embed::SearchOptions reduced;
        reduced.target_automorphisms = {y_link_automorphism(dst)};
        w["certificates modulo y"] = embed::find_embeddings(src, dst, reduced).certificates.size();
    }
    return {verdict(result.certificates.empty()), w};
}

Outcome embed_pinned_case(const Options&) {
    const auto src = brady_link();
    const auto dst = graph_fixture("x1bar-link-smoothed");
    ordered_json cases = ordered_json::array();
    bool all_refuted = true;
    for (const char* two : {"e+", "a+"}) {
        embed::SearchOptions so;
        so.pinned = {{src.node("v1"), dst.node("t1+")}, {src.node("v4"), dst.node("a-")}, {src.node("v2"), dst.node(two)}};
        const auto r = embed::find_embeddings(src, dst, so);
        ordered_json prunes = ordered_json::object();
        for (auto [k, v] : r.stats.prunes) prunes[embed::to_string(k)] = v;
        cases.push_back({{"case", std::string("v1 -> t1+, v4 -> a-, v2 -> ") + two},
                         {"completions", r.certificates.size()},
                         {"prunes", prunes}});
        all_refuted = all_refuted && r.certificates.empty();
    }
    std::map<std::size_t, std::size_t> partial;
    const char* assignment[][2] = {{"v1", "t1+"}, {"v2", "e+"}, {"v3", "t2+"}, {"v5", "t1-"}, {"v6", "e-"}, {"v8", "t2-"}};
    for (const auto& p : assignment) partial[src.node(p[0])] = dst.node(p[1]);
    ordered_json obstructions = ordered_json::array();
    bool has_v1_v8 = false;
    for (const auto& o : embed::distance_obstructions(src, dst, partial)) {
        const auto& a = src.arc(o.src_arc);
        const std::string arc = src.name(a.u) + "-" + src.name(a.v);
        has_v1_v8 = has_v1_v8 || arc == "v8-v1" || arc == "v1-v8";
        obstructions.push_back({{"arc", arc}, {"length", o.arc_length.str()}, {"target distance", length_str(o.target_distance)}});
    }
    return {verdict(all_refuted && has_v1_v8), {{"cases", cases}, {"partial assignment obstructions", obstructions}}};
}

bool has_short_arc_obstruction(const embed::TraceNode& t) {
    if (t.obstruction && t.obstruction->arc_length == Angle(1, 3) && t.obstruction->target_distance &&
        *t.obstruction->target_distance >= Angle(2, 3))
        return true;
    return std::any_of(t.children.begin(), t.children.end(), has_short_arc_obstruction);
}

void count_leaves(const embed::TraceNode& t, std::size_t& pruned, std::size_t& success, std::size_t& open) {
    if (t.children.empty()) {
        if (t.pruned) ++pruned;
        else if (t.success) ++success;
        else ++open;
        return;
    }
    for (const auto& c : t.children) count_leaves(c, pruned, success, open);
}

Outcome embed_obstruction_trace(const Options&) {
    const auto src = brady_link();
    const auto dst = graph_fixture("x1bar-link-smoothed");
    embed::SearchOptions so;
    so.record_trace = true;
    so.target_automorphisms = {y_link_automorphism(dst)};
    const auto r = embed::find_embeddings(src, dst, so);
    std::size_t pruned = 0, success = 0, open = 0;
    count_leaves(r.trace, pruned, success, open);
    const bool found = has_short_arc_obstruction(r.trace);
    ordered_json roots = ordered_json::array();
    for (auto n : r.root_candidates) roots.push_back(dst.name(n));
    return {verdict(found),
            {{"root cases", roots},
             {"pruned leaves", pruned},
             {"success leaves", success},
             {"open leaves", open},
             {"pi/3 arc with images at distance >= 2pi/3", found}}};
}

Outcome embed_controls(const Options&) {
    const auto dst = graph_fixture("x1bar-link-smoothed");
    const auto self = embed::find_embeddings(dst, dst);
    embed::Certificate identity;
    for (std::size_t n = 0; n < dst.node_count(); ++n) identity.node_map.push_back(n);
    for (std::size_t a = 0; a < dst.arc_count(); ++a) identity.arc_paths.push_back({{a, true}});
    const bool has_identity =
        std::find(self.certificates.begin(), self.certificates.end(), identity) != self.certificates.end();
    const auto wing = graph_fixture("ybar1-link-smoothed");
    const auto wings = embed::find_embeddings(wing, dst);
    bool sound = true;
    for (const auto& c : wings.certificates) sound = sound && embed::verify_certificate(c, wing, dst).ok;
    const bool ok = has_identity && !wings.certificates.empty() && sound;
    return {verdict(ok),
            {{"self-embeddings", self.certificates.size()},
             {"identity found", has_identity},
             {"wing embeddings", wings.certificates.size()},
             {"all wing certificates verify", sound}}};
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> v = {
            {"braid-center", "x^4 and y^3 both have normal form D^2, which is central", braid_center},
            {"braid-conventions", "one reading of the auxiliary generators satisfies every relation and orbit", braid_conventions},
            {"braid-presentation", "ba=ae=eb, de=ec=cd, bc=cf=fb, df=fa=ad, ca=ac, ef=fe hold in B4", braid_presentation},
            {"braid-orbit-x", "x permutes (a e c f)(b d) by conjugation", braid_orbit_x},
            {"braid-orbit-y", "y permutes (c f d)(a e B^) by conjugation", braid_orbit_y},
            {"erratum-c", "which of c = x y^-1, c = x^-1 y holds modulo the centre", erratum_c},
            {"erratum-hat-b", "which spelling of B^ closes the y-orbit of a", erratum_hat_b},
            {"g0-relators-b4", "the G0 relators are central in B4", g0_relators_in_b4},
            {"identity-a", "a = x y x^-2 modulo the centre", identity_a},
            {"identity-b", "b = x a^-1 c^-1", identity_b},
            {"index-g0-ax", "[G0 : <x y x^-2, x>] = 1", index_g0_ax},
            {"index-g0-xy", "[G0 : <x, y>] = 1", index_g0_xy},
            {"index-g1", "[G0 : <x y x^-2, y>] = 4", index_g1},
            {"index-sl2z", "[SL2(Z) : <S^2 T, S^3 T>] = 4", index_sl2z},
            {"pi-g1-images", "x y x^-2 -> -T and y -> -ST", pi_g1_images},
            {"pi-minus-st", "-ST = S^-1 T", pi_minus_st},
            {"pi-relators", "x -> S, y -> -ST kills every G0 relator", pi_relators},
            {"pi-sl2z", "S^4 = 1 and (ST)^3 = S^2", pi_sl2z},
            {"perm-cycle-types", "x and y act on {1..4} and on the cosets of G1 with cycle types 4 and 3+1", perm_cycle_types},
            {"perm-stabilizer", "the images of a and y generate a point stabilizer of order 6", perm_stabilizer},
            {"link-girth", "the vertex link of X1 has girth 2 pi", link_girth},
            {"link-shape", "the vertex link of X1 has 18 nodes, 27 arcs of pi/3, degrees 4x6 3x6 2x6, and is bipartite", link_shape},
            {"brady-girth", "the Brady link has girth 2 pi", brady_girth},
            {"symmetry-y", "the y-relabeling is an order-3 symmetry of X1 and of its link, fixing no link node", symmetry_y},
            {"embed-brady", "the Brady link has no locally isometric embedding into the link of X1", embed_brady},
            {"embed-pinned-case", "with 1 -> t1+ and 4 -> a-, both choices for 2 are refuted; the (1,8) arc is obstructed", embed_pinned_case},
            {"embed-obstruction-trace", "the search modulo y meets a pi/3 arc whose ends land at distance >= 2pi/3", embed_obstruction_trace},
            {"embed-controls", "the link of X1 embeds in itself by the identity and each wing link embeds", embed_controls},
        };
        std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
        return v;
    }();
    return checks;
}

const char* composition_str(reps::Composition c) { return reps::to_string(c); }

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.id);
    return out;
}

Report run(const std::vector<std::string>& selection, const Options& options) {
    std::vector<const Check*> chosen;
    const bool all = std::find(selection.begin(), selection.end(), "all") != selection.end();
    for (const auto& c : registry())
        if (all || std::find(selection.begin(), selection.end(), c.id) != selection.end()) chosen.push_back(&c);
    for (const auto& id : selection) {
        if (id == "all") continue;
        if (std::none_of(registry().begin(), registry().end(), [&](const Check& c) { return c.id == id; }))
            throw Error(ErrorCode::unknown_name, "unknown check id '" + id + "'");
    }

    std::vector<std::future<Entry>> futures;
    for (const Check* c : chosen)
        futures.push_back(std::async(std::launch::async, [c, &options] {
            const auto start = std::chrono::steady_clock::now();
            Entry e{c->id, c->claim, "", "", 0};
            try {
                Outcome o = c->run(options);
                e.status = o.status;
                e.witness = o.witness.dump();
            } catch (const std::exception& ex) {
                e.status = "inconclusive";
                e.witness = ordered_json{{"error", ex.what()}}.dump();
            }
            e.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return e;
        }));
    Report report;
    report.options = options;
    for (auto& f : futures) report.entries.push_back(f.get());
    return report;
}

int Report::exit_code() const {
    bool fail = false;
    bool inconclusive = false;
    for (const auto& e : entries) {
        fail = fail || e.status == "fail";
        inconclusive = inconclusive || e.status == "inconclusive";
    }
    return fail ? 1 : inconclusive ? 2 : 0;
}

std::string Report::json(bool timing) const {
    ordered_json j;
    j["header"] = {{"conjugation", garside::to_string(options.conjugation)},
                   {"composition", composition_str(options.composition)},
                   {"cap", options.cap}};
    j["checks"] = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json row = {{"id", e.id}, {"claim", e.claim}, {"status", e.status},
                            {"witness", ordered_json::parse(e.witness)}};
        if (timing) row["wall_ms"] = e.wall_ms;
        j["checks"].push_back(row);
    }
    j["exit_code"] = exit_code();
    return j.dump(2);
}

std::string Report::text() const {
    std::ostringstream out;
    out << "conjugation: " << garside::to_string(options.conjugation)
        << "  composition: " << composition_str(options.composition) << "  cap: " << options.cap << "\n";
    for (const auto& e : entries) {
        std::string status = e.status;
        std::transform(status.begin(), status.end(), status.begin(), ::toupper);
        out << status << "  " << e.id << "  " << e.claim << "\n";
        if (e.status == "fail" || e.status == "inconclusive") out << "    witness: " << e.witness << "\n";
    }
    return out.str();
}

Report parse_report(const std::string& text) {
    const auto j = ordered_json::parse(text);
    Report r;
    const auto& h = j.at("header");
    r.options.conjugation = garside::parse_convention(h.at("conjugation").get<std::string>());
    r.options.composition = h.at("composition").get<std::string>() == reps::to_string(reps::Composition::left_to_right)
                                ? reps::Composition::left_to_right
                                : reps::Composition::right_to_left;
    r.options.cap = h.at("cap").get<std::size_t>();
    for (const auto& row : j.at("checks"))
        r.entries.push_back({row.at("id").get<std::string>(), row.at("claim").get<std::string>(),
                             row.at("status").get<std::string>(), row.at("witness").dump(),
                             row.value("wall_ms", 0.0)});
    return r;
}

std::vector<std::string> export_ids() {
    std::vector<std::string> ids = graph_fixture_names();
    for (const char* extra : {"x1bar", "ybar1", "g1-table", "audit"}) ids.push_back(extra);
    return ids;
}

namespace {

std::string table_export(const std::string& format) {
    const auto p = coset::g0_presentation();
    const auto t = coset::enumerate(p, {g0("xyx^-2"), g0("y")});
    const auto image = coset::permutation_image(t);
    if (format == "json") {
        ordered_json j;
        j["count"] = t.count;
        j["action"] = ordered_json::object();
        for (std::size_t g = 0; g < image.size(); ++g) {
            std::vector<std::size_t> one_based;
            for (auto v : image[g]) one_based.push_back(v + 1);
            j["action"][std::string(1, p.alphabet.symbols()[g])] = one_based;
        }
        return j.dump(2) + "\n";
    }
    if (format == "text") {
        std::ostringstream out;
        out << "coset";
        for (char g : p.alphabet.symbols()) out << " " << g;
        out << "\n";
        for (std::size_t c = 0; c < t.count; ++c) {
            out << c + 1;
            for (const auto& perm : image) out << " " << perm[c] + 1;
            out << "\n";
        }
        return out.str();
    }
    throw Error(ErrorCode::invalid_argument, "g1-table exports as json or text");
}

std::string complex_export(const TriComplex& c, const std::string& format) {
    if (format == "text") return to_text(c);
    if (format == "json") {
        ordered_json j;
        j["vertices"] = c.vertices();
        j["edges"] = ordered_json::array();
        for (const auto& e : c.edges()) j["edges"].push_back({{"label", e.label}, {"from", e.from}, {"to", e.to}});
        j["triangles"] = ordered_json::array();
        for (const auto& t : c.triangles()) {
            ordered_json row = {{"boundary", ordered_json::array()}, {"angles", ordered_json::array()}};
            for (const auto& d : t.boundary) row["boundary"].push_back(d.str());
            for (const auto& a : t.angles) row["angles"].push_back(a.fraction());
            j["triangles"].push_back(row);
        }
        return j.dump(2) + "\n";
    }
    throw Error(ErrorCode::invalid_argument, "complexes export as json or text");
}

}  // namespace

std::string export_object(const std::string& id, const std::string& format) {
    if (format != "dot" && format != "json" && format != "text")
        throw Error(ErrorCode::invalid_argument, "unknown format '" + format + "' (dot, json, text)");
    if (is_graph_fixture(id)) {
        const auto g = graph_fixture(id);
        if (format == "dot") return to_dot(g, id);
        if (format == "json") return to_json(g) + "\n";
        return to_text(g);
    }
    if (id == "x1bar" || id == "ybar1") return complex_export(complex_fixture(id), format);
    if (id == "g1-table") return table_export(format);
    if (id == "audit") {
        const auto r = run({"all"});
        if (format == "json") return r.json(false) + "\n";
        if (format == "text") return r.text();
        throw Error(ErrorCode::invalid_argument, "the audit exports as json or text");
    }
    throw Error(ErrorCode::unknown_name, "unknown object '" + id + "'");
}

void export_to_file(const std::string& id, const std::string& format, const std::string& path) {
    const std::string data = export_object(id, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
    out << data;
    if (!out) throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

}  // namespace ggt::audit
