// Acceptance gate: one line per criterion, thresholds pinned below.
// Usage: acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggt/audit.hpp"
#include "ggt/braid_checks.hpp"
#include "ggt/complex.hpp"
#include "ggt/coset.hpp"
#include "ggt/embed.hpp"
#include "ggt/fixtures.hpp"
#include "ggt/garside.hpp"
#include "ggt/metric_graph.hpp"
#include "ggt/reps.hpp"

using namespace ggt;

namespace {

constexpr double kIndexSeconds = 1.0;
constexpr std::size_t kIndexCosets = 1000;
constexpr double kMatrixSeconds = 0.001;
constexpr double kAuditSeconds = 5.0;
constexpr double kLinkSeconds = 1.0;
constexpr double kSymmetrySeconds = 1.0;
constexpr double kEmbedSeconds = 60.0;
constexpr int kPlantedInstances = 100;
constexpr std::uint64_t kPlantSeed = 20240611;

struct Result {
    bool pass = true;
    std::vector<std::string> notes;
    void need(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }
private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g s", s);
    return buf;
}

// 1
Result coset_indices() {
    Result r;
    struct Case {
        const char* group;
        std::vector<const char*> subgroup;
        std::size_t expected;
    };
    const Case cases[] = {
        {"G0", {"xyx^-2", "y"}, 4},
        {"SL2Z", {"s^2t", "s^3t"}, 4},
        {"G0", {"x", "y"}, 1},
        {"G0", {"xyx^-2", "x"}, 1},
    };
    for (const Case& c : cases) {
        const auto p = coset::fixture(c.group);
        std::vector<Word> h;
        std::string label = std::string("[") + c.group + " : <";
        for (std::size_t i = 0; i < c.subgroup.size(); ++i) {
            h.push_back(parse_word(c.subgroup[i], p.alphabet));
            label += (i ? ", " : "") + std::string(c.subgroup[i]);
        }
        label += ">]";
        std::map<coset::Strategy, std::size_t> found;
        for (coset::Strategy s : {coset::Strategy::hlt, coset::Strategy::felsch}) {
            const Stopwatch sw;
            const auto t = coset::enumerate(p, h, kIndexCosets, s);
            const double secs = sw.seconds();
            const std::string tag = label + " " + coset::to_string(s);
            r.need(t.status == coset::Status::complete, tag + " completes within " + std::to_string(kIndexCosets) + " cosets");
            if (t.status != coset::Status::complete) continue;
            r.need(coset::verify_table(p, h, t), tag + " table verifies");
            r.need(t.defined < kIndexCosets, tag + " defined " + std::to_string(t.defined) + " cosets");
            r.need(secs < kIndexSeconds, tag + " took " + fmt_seconds(secs));
            found[s] = t.count;
        }
        if (found.size() == 2) {
            r.need(found[coset::Strategy::hlt] == found[coset::Strategy::felsch], label + " HLT and Felsch agree");
            r.need(found[coset::Strategy::hlt] == c.expected, label + " = " + std::to_string(found[coset::Strategy::hlt]) +
                                                                   ", expected " + std::to_string(c.expected));
            if (found[coset::Strategy::hlt] == c.expected) r.note(label + " = " + std::to_string(c.expected));
        }
    }
    // the two generators differ by S, so with S^2 T they give T as well
    const auto assign = reps::sl2_assignment();
    const auto quotient = reps::eval_matrix(parse_word("s^3t", alphabets::sl2()), assign) *
                          reps::eval_matrix(parse_word("s^2t", alphabets::sl2()), assign).inverse();
    if (quotient == reps::matrix_s()) r.note("(S^3 T)(S^2 T)^-1 = S exactly");
    return r;
}

// 2
Result matrix_homomorphism() {
    Result r;
    const Stopwatch sw;
    bool all = true;
    for (const auto& c : reps::verify_matrix_homomorphism(coset::g0_presentation(), reps::pi_assignment())) {
        r.need(c.pass && c.value == reps::Matrix2::identity(), "relator " + c.relator + " -> " + c.value.str());
        all = all && c.pass;
    }
    const auto s = reps::matrix_s();
    const auto t = reps::matrix_t();
    const auto st = s * t;
    const bool st3 = st * st * st == s * s;
    const bool s4 = s * s * s * s == reps::Matrix2::identity();
    const double secs = sw.seconds();
    r.need(st3, "(ST)^3 = S^2");
    r.need(s4, "S^4 = I");
    r.need(secs < kMatrixSeconds, "matrix checks took " + fmt_seconds(secs));
    if (all && st3 && s4) r.note("3 relators -> I, (ST)^3 = S^2, S^4 = I");
    return r;
}

// 3
Result permutation_image() {
    Result r;
    const auto assign = reps::standard_perm_assignment();
    auto in_b4 = [](const char* text) { return substitute(parse_word(text, alphabets::g0()), g0_to_b4()); };
    const Perm4 a = reps::eval_perm(in_b4("xyx^-2"), assign);
    const Perm4 x = reps::eval_perm(in_b4("x"), assign);
    const Perm4 y = reps::eval_perm(in_b4("y"), assign);
    const auto closure = reps::subgroup_closure({a, y});
    r.need(closure.elements.size() == 6, "<a, y> has order " + std::to_string(closure.elements.size()));
    r.need(closure.common_fixed_points.size() == 1, "<a, y> fixes exactly one point");

    const auto p = coset::g0_presentation();
    const auto t = coset::enumerate(p, {parse_word("xyx^-2", p.alphabet), parse_word("y", p.alphabet)});
    r.need(t.status == coset::Status::complete, "coset table of G1 completes");
    if (t.status != coset::Status::complete) return r;
    const auto image = coset::permutation_image(t);
    auto sizes = [](const std::array<int, 4>& type) {
        std::vector<std::size_t> out;
        for (int k : type)
            if (k) out.push_back(static_cast<std::size_t>(k));
        return out;
    };
    r.need(sizes(x.cycle_type()) == std::vector<std::size_t>{4}, "x is a 4-cycle on {1..4}");
    r.need(sizes(y.cycle_type()) == std::vector<std::size_t>{3, 1}, "y is a 3-cycle on {1..4}");
    r.need(coset::cycle_type(image[0]) == sizes(x.cycle_type()), "x on cosets matches x on {1..4}");
    r.need(coset::cycle_type(image[1]) == sizes(y.cycle_type()), "y on cosets matches y on {1..4}");
    if (r.pass) r.note("|<a, y>| = 6 fixing " + std::to_string(closure.common_fixed_points[0]) + "; x " + x.cycles() + ", y " + y.cycles());
    return r;
}

// 4
Result garside_audit() {
    Result r;
    const Stopwatch sw;
    const auto report = audit::run({"braid-presentation", "braid-center", "braid-orbit-x", "braid-orbit-y", "braid-conventions",
                                    "erratum-hat-b", "erratum-c"});
    const double secs = sw.seconds();
    for (const auto& e : report.entries) {
        const bool definite = e.status == "pass" || e.status.rfind("resolved:", 0) == 0;
        r.need(definite, e.id + " is " + e.status);
        if (e.status.rfind("resolved:", 0) == 0) r.note(e.id + " " + e.status);
    }
    const auto gens = garside::six_generators(garside::Fixture::right);
    const auto claims = garside::verify_six_generator_presentation(gens);
    r.need(claims.size() == 10 && std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; }),
           "all 10 relations");
    auto g0 = [](const char* t) { return substitute(parse_word(t, alphabets::g0()), g0_to_b4()); };
    const auto nfx = garside::normal_form(g0("x^4"));
    r.need(nfx == garside::normal_form(g0("y^3")) && nfx == garside::NormalForm{2, {}}, "nf(x^4) = nf(y^3) = D^2");
    r.need(garside::is_central(g0("x^4")), "D^2 central");
    const Word hat_b = garside::to_b4("CCbcc", gens);
    std::vector<int> periods;
    for (const auto& c : garside::orbit_claims(gens, garside::Convention::left, hat_b)) {
        r.need(c.pass, c.claim);
        periods.push_back(c.period);
    }
    r.need(periods.size() >= 3 && periods[0] == 4 && periods[1] == 2 && periods[2] == 3, "orbit periods 4/2/3");
    r.need(secs < kAuditSeconds, "braid audit took " + fmt_seconds(secs));
    return r;
}

// 5
Result link_condition() {
    Result r;
    const Stopwatch sw;
    const MetricGraph link = vertex_link(x1bar(), "o");
    r.need(link.node_count() == 18, "18 nodes");
    r.need(link.arc_count() == 27, "27 arcs");
    r.need(std::all_of(link.arcs().begin(), link.arcs().end(), [](const auto& a) { return a.length == Angle(1, 3); }),
           "every arc pi/3");
    std::map<std::size_t, int> degrees;
    for (std::size_t n = 0; n < link.node_count(); ++n) ++degrees[link.degree(n)];
    r.need(degrees == std::map<std::size_t, int>{{2, 6}, {3, 6}, {4, 6}}, "degrees 4x6 3x6 2x6");
    r.need(is_bipartite(link), "bipartite");
    const Length g1 = girth(link);
    const Length g2 = girth_exhaustive(link);
    r.need(g1 == Angle(2) && g2 == Angle(2), "girth of Lk(X1) = 2 pi by both algorithms, got " + to_string(g1) + " and " + to_string(g2));
    const MetricGraph brady = brady_link();
    const Length b1 = girth(brady);
    const Length b2 = girth_exhaustive(brady);
    r.need(b1 == Angle(2) && b2 == Angle(2), "girth of the Brady link = 2 pi by both algorithms");
    const double secs = sw.seconds();
    r.need(secs < kLinkSeconds, "link checks took " + fmt_seconds(secs));
    if (r.pass) r.note("both girths 2 pi, two algorithms agree");
    return r;
}

// 6
Result symmetry() {
    Result r;
    const Stopwatch sw;
    const TriComplex x = x1bar();
    const auto rel = relabel_check(x, y_relabeling());
    r.need(rel.symmetry, "y-relabeling preserves X1");
    r.need(rel.order == 3, "y-relabeling has order 3");
    const MetricGraph link = vertex_link(x, "o");
    const auto phi = induced_link_map(link, y_relabeling());
    r.need(is_automorphism(link, phi), "induced map is a link automorphism");
    bool fixed = false;
    std::vector<std::size_t> cube(phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) {
        fixed = fixed || phi[n] == n;
        cube[n] = phi[phi[phi[n]]];
    }
    r.need(!fixed, "no fixed link node");
    bool identity = true;
    for (std::size_t n = 0; n < cube.size(); ++n) identity = identity && cube[n] == n;
    r.need(identity, "cube of the link map is the identity");
    const double secs = sw.seconds();
    r.need(secs < kSymmetrySeconds, "symmetry checks took " + fmt_seconds(secs));
    if (r.pass) r.note("order 3 on X1 and its link, no fixed node");
    return r;
}

bool has_short_arc_obstruction(const embed::TraceNode& t) {
    if (t.obstruction && t.obstruction->arc_length == Angle(1, 3) && t.obstruction->target_distance &&
        *t.obstruction->target_distance >= Angle(2, 3))
        return true;
    return std::any_of(t.children.begin(), t.children.end(), has_short_arc_obstruction);
}

bool exhaustive(const embed::TraceNode& t) {
    if (t.children.empty()) return t.pruned.has_value() || t.success;
    return std::all_of(t.children.begin(), t.children.end(), exhaustive);
}

// 7
Result non_embedding() {
    Result r;
    const MetricGraph src = brady_link();
    const MetricGraph dst = smooth(vertex_link(x1bar(), "o"));
    const Stopwatch sw;
    embed::SearchOptions full;
    full.record_trace = true;
    const auto all = embed::find_embeddings(src, dst, full);
    embed::SearchOptions reduced;
    reduced.record_trace = true;
    reduced.target_automorphisms = {y_link_automorphism(dst)};
    const auto mod_y = embed::find_embeddings(src, dst, reduced);
    const double secs = sw.seconds();
    r.need(exhaustive(all.trace) && exhaustive(mod_y.trace), "trace is exhaustive");
    r.need(has_short_arc_obstruction(mod_y.trace), "trace modulo y has a pi/3 arc with images at distance >= 2 pi/3");
    r.need(secs < kEmbedSeconds, "search took " + fmt_seconds(secs));
    r.need(all.certificates.empty(), "find_embeddings returns empty; it returned " + std::to_string(all.certificates.size()) +
                                         " certificates (" + std::to_string(mod_y.certificates.size()) + " modulo y)");
    if (!all.certificates.empty()) {
        const auto& c = all.certificates.front();
        const auto v = embed::verify_certificate(c, src, dst);
        std::ostringstream s;
        s << "first certificate " << (v.ok ? "verifies" : "does not verify") << ":";
        for (std::size_t n = 0; n < c.node_map.size(); ++n) s << " " << src.name(n) << "->" << dst.name(c.node_map[n]);
        r.note(s.str());
    }
    return r;
}

// 8
Result positive_controls() {
    Result r;
    const MetricGraph link = smooth(vertex_link(x1bar(), "o"));
    const auto self = embed::find_embeddings(link, link);
    embed::Certificate identity;
    for (std::size_t n = 0; n < link.node_count(); ++n) identity.node_map.push_back(n);
    for (std::size_t a = 0; a < link.arc_count(); ++a) identity.arc_paths.push_back({{a, true}});
    r.need(std::find(self.certificates.begin(), self.certificates.end(), identity) != self.certificates.end(),
           "identity self-embedding of Lk(X1)");

    // planted subgraph recovery
    std::mt19937_64 rng(kPlantSeed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int recovered = 0;
    for (int trial = 0; trial < kPlantedInstances; ++trial) {
        MetricGraph src;
        MetricGraph dst;
        const int n = uniform(4, 6);
        for (int i = 0; i < n; ++i) {
            src.add_node("s" + std::to_string(i));
            dst.add_node("d" + std::to_string(i));
        }
        std::vector<std::pair<int, int>> edges;
        std::vector<int> degree(static_cast<std::size_t>(n), 2);
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        for (;;) {
            int u = -1;
            for (int i = 0; i < n && u < 0; ++i)
                if (degree[static_cast<std::size_t>(i)] < 3) u = i;
            if (u < 0) break;
            int v = uniform(0, n - 1);
            while (v == u) v = uniform(0, n - 1);
            edges.emplace_back(u, v);
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(v)];
        }
        std::vector<std::size_t> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        embed::Certificate planted;
        planted.node_map = perm;
        int fresh = 0;
        for (const auto& [u, v] : edges) {
            const int units = uniform(1, 4);
            src.add_arc(static_cast<std::size_t>(u), static_cast<std::size_t>(v), Angle(units, 6));
            std::size_t at = perm[static_cast<std::size_t>(u)];
            embed::ArcPath path;
            for (int left = units; left > 0;) {
                const int piece = uniform(1, left);
                left -= piece;
                const std::size_t next = left == 0 ? perm[static_cast<std::size_t>(v)] : dst.add_node("m" + std::to_string(fresh++));
                path.push_back({dst.add_arc(at, next, Angle(piece, 6)), true});
                at = next;
            }
            planted.arc_paths.push_back(path);
        }
        for (int i = uniform(0, 3); i > 0; --i) {
            const auto a = static_cast<std::size_t>(uniform(0, static_cast<int>(dst.node_count()) - 1));
            const auto b = static_cast<std::size_t>(uniform(0, static_cast<int>(dst.node_count()) - 1));
            dst.add_arc(a, b, Angle(uniform(1, 4), 6));
        }
        const auto found = embed::find_embeddings(src, dst);
        const bool hit = std::find(found.certificates.begin(), found.certificates.end(), planted) != found.certificates.end();
        const bool sound = std::all_of(found.certificates.begin(), found.certificates.end(),
                                       [&](const auto& c) { return embed::verify_certificate(c, src, dst).ok; });
        recovered += hit && sound;
    }
    r.need(recovered == kPlantedInstances,
           "planted recovery " + std::to_string(recovered) + "/" + std::to_string(kPlantedInstances));

    // corrupted fixtures must fail
    auto corrupted = garside::six_generators(garside::Fixture::right);
    corrupted.e = parse_word("ab", alphabets::b4());
    const auto claims = garside::verify_six_generator_presentation(corrupted);
    r.need(std::any_of(claims.begin(), claims.end(), [](const auto& c) { return !c.pass; }), "e := ab breaks a relation");

    auto wrong = reps::pi_assignment();
    wrong['y'] = reps::matrix_s() * reps::matrix_t();
    const auto rel = reps::verify_matrix_homomorphism(coset::g0_presentation(), wrong);
    r.need(std::any_of(rel.begin(), rel.end(), [](const auto& c) { return !c.pass; }), "y -> ST breaks a relator");

    const auto p = coset::g0_presentation();
    const std::vector<Word> h = {parse_word("xyx^-2", p.alphabet), parse_word("y", p.alphabet)};
    auto table = coset::enumerate(p, h);
    std::swap(table.action[0][0], table.action[1][0]);
    r.need(!coset::verify_table(p, h, table), "transposed coset entry rejected");

    r.need(!is_automorphism(vertex_link(x1bar(), "o"),
                            node_map_from_names(vertex_link(x1bar(), "o"), {{"t1+", "t1-"}, {"t1-", "t1+"}})),
           "swapping t1+ and t1- is not a link automorphism");
    r.need(!relabel_check(x1bar(), {{"a", "e"}, {"e", "a"}}).symmetry, "swapping a and e alone is not a symmetry");

    const Angle third(1, 3);
    const TriComplex digon = TriComplex::Builder()
                                 .vertex("o")
                                 .edge("p", "o", "o")
                                 .edge("q", "o", "o")
                                 .edge("r", "o", "o")
                                 .triangle({DirectedEdge{"p", 1}, DirectedEdge{"q", 1}, DirectedEdge{"r", 1}}, {third, third, third})
                                 .triangle({DirectedEdge{"p", 1}, DirectedEdge{"q", 1}, DirectedEdge{"r", 1}}, {third, third, third})
                                 .build();
    r.need(!check_link_condition(digon).pass, "doubled triangle violates the link condition");

    const auto brady = embed::find_embeddings(brady_link(), link, {false, false, {}, {}});
    if (!brady.certificates.empty()) {
        auto broken = brady.certificates.front();
        broken.arc_paths[1] = broken.arc_paths[0];
        r.need(!embed::verify_certificate(broken, brady_link(), link).ok, "certificate with a shared arc rejected");
    }
    if (r.pass) r.note("identity found, " + std::to_string(recovered) + " planted instances recovered, negative controls fail");
    return r;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c = {
        {1, "coset enumeration indices", coset_indices},
        {2, "matrix homomorphism", matrix_homomorphism},
        {3, "permutation image", permutation_image},
        {4, "braid audit", garside_audit},
        {5, "link condition", link_condition},
        {6, "y-symmetry", symmetry},
        {7, "non-embedding of the Brady link", non_embedding},
        {8, "positive and negative controls", positive_controls},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        only = std::atoi(argv[2]);
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
        return 2;
    }
    bool all_pass = true;
    bool ran = false;
    for (const Criterion& c : criteria()) {
        if (only && c.number != only) continue;
        ran = true;
        Result r;
        const Stopwatch sw;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s (%s)\n", c.number, r.pass ? "PASS" : "FAIL", c.title, fmt_seconds(sw.seconds()).c_str());
        for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
        all_pass = all_pass && r.pass;
    }
    if (!ran) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return all_pass ? 0 : 1;
}
