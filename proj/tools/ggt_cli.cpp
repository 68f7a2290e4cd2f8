#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggt/ggt.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitError = 3;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ggt_status status) {
    if (status != GGT_OK) throw CliError(std::string(ggt_status_name(status)) + ": " + ggt_last_error());
}

std::string take(char* text) {
    std::string out = text ? text : "";
    ggt_free_string(text);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) throw CliError("cannot write '" + path + "'");
}

template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(ptr); }
};

using Graph = Handle<ggt_graph, ggt_graph_free>;
using Complex = Handle<ggt_complex, ggt_complex_free>;
using Presentation = Handle<ggt_presentation, ggt_presentation_free>;
using Table = Handle<ggt_coset_table, ggt_coset_table_free>;
using Report = Handle<ggt_report, ggt_report_free>;

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

void load_graph(const std::string& what, Graph& g) {
    if (is_file(what)) check(ggt_graph_parse(read_file(what).c_str(), &g.ptr));
    else check(ggt_graph_fixture(what.c_str(), &g.ptr));
}

void load_complex(const std::string& what, Complex& c) {
    if (is_file(what)) check(ggt_complex_parse(read_file(what).c_str(), &c.ptr));
    else check(ggt_complex_fixture(what.c_str(), &c.ptr));
}

void load_presentation(const std::string& what, Presentation& p) {
    if (is_file(what)) check(ggt_presentation_parse(read_file(what).c_str(), &p.ptr));
    else check(ggt_presentation_fixture(what.c_str(), &p.ptr));
}

struct Globals {
    std::string json_path;
    std::size_t cap = 100000;
    std::string convention = "left";
};

// Writes the JSON document when --json was given; prints the human form.
void emit(const Globals& g, const ordered_json& j, const std::string& human) {
    if (!g.json_path.empty()) write_file(g.json_path, j.dump(2) + "\n");
    std::cout << human;
    if (!human.empty() && human.back() != '\n') std::cout << "\n";
}

std::string claims_text(const ordered_json& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << (r.value("status", "") == "pass" ? "pass  " : "FAIL  ") << r.value("claim", r.value("relator", "")) ;
        if (r.contains("lhs_nf")) out << "    " << r["lhs_nf"].get<std::string>() << "  vs  " << r["rhs_nf"].get<std::string>();
        if (r.contains("value")) out << "    " << r["value"].get<std::string>();
        out << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for braid words, coset tables, triangle complexes, links and embeddings"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--json", g.json_path, "also write the JSON result to this path");
    app.add_option("--cap", g.cap, "coset table size limit")->check(CLI::PositiveNumber);
    app.add_option("--convention", g.convention, "conjugation side: left (g w g^-1) or right (g^-1 w g)")
        ->check(CLI::IsMember({"left", "right"}));

    int exit_code = 0;

    // garside
    auto* garside = app.add_subcommand("garside", "normal forms and identities in the braid group on 4 strands");
    garside->require_subcommand(1);
    std::string fixture = "right";
    auto fixture_opt = [&](CLI::App* sub) {
        sub->add_option("--fixture", fixture, "reading of d, e, f: right (g^-1 b g), left (g b g^-1), literal")
            ->check(CLI::IsMember({"right", "left", "literal"}));
    };
    std::string word, word2;
    auto* nf = garside->add_subcommand("nf", "Garside normal form of a word over a-f or x, y");
    nf->add_option("word", word)->required();
    fixture_opt(nf);
    nf->callback([&] {
        const std::string out = take([&] { char* s = nullptr; check(ggt_garside_nf(word.c_str(), fixture.c_str(), &s)); return s; }());
        emit(g, {{"word", word}, {"nf", out}}, out);
    });

    bool mod_center = false;
    auto* eq = garside->add_subcommand("eq", "equality of two words in B4");
    eq->add_option("lhs", word)->required();
    eq->add_option("rhs", word2)->required();
    eq->add_flag("--mod-center", mod_center, "compare modulo the centre");
    fixture_opt(eq);
    eq->callback([&] {
        int equal = 0;
        check(ggt_garside_equal(word.c_str(), word2.c_str(), fixture.c_str(), mod_center, &equal));
        emit(g, {{"lhs", word}, {"rhs", word2}, {"mod_center", mod_center}, {"equal", equal != 0}},
             equal ? "equal" : "not equal");
    });

    int steps = 8;
    auto* orbit = garside->add_subcommand("orbit", "orbit of a word under conjugation");
    orbit->add_option("g", word)->required();
    orbit->add_option("seed", word2)->required();
    orbit->add_option("--steps", steps)->check(CLI::PositiveNumber);
    fixture_opt(orbit);
    orbit->callback([&] {
        char* s = nullptr;
        check(ggt_garside_orbit(word.c_str(), word2.c_str(), steps, g.convention.c_str(), fixture.c_str(), &s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        out << "convention: " << j["convention"].get<std::string>() << "\n";
        for (const auto& e : j["elements"]) out << "  " << e.get<std::string>() << "\n";
        out << "period: " << j["period"].get<int>() << (j["period"].get<int>() == 0 ? " (not closed)" : "");
        emit(g, j, out.str());
    });

    auto* audit_pres = garside->add_subcommand("audit-presentation", "check the ten relations among a..f");
    fixture_opt(audit_pres);
    audit_pres->callback([&] {
        char* s = nullptr;
        check(ggt_garside_audit_presentation(fixture.c_str(), &s));
        const auto j = ordered_json::parse(take(s));
        for (const auto& r : j)
            if (r["status"] != "pass") exit_code = 1;
        emit(g, j, claims_text(j));
    });

    // verify
    auto* verify = app.add_subcommand("verify", "index, matrix and permutation checks");
    verify->require_subcommand(1);
    std::string group = "G0", subgroup, strategy = "hlt";
    auto* index = verify->add_subcommand("index", "coset enumeration");
    index->add_option("--group", group, "fixture (G0, SL2Z) or presentation file");
    index->add_option("--subgroup", subgroup, "comma-separated generator words")->required();
    index->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));
    index->callback([&] {
        Presentation p;
        load_presentation(group, p);
        Table t;
        check(ggt_coset_enumerate(p.ptr, subgroup.c_str(), g.cap, strategy.c_str(), &t.ptr));
        char* s = nullptr;
        check(ggt_coset_table_json(t.ptr, &s));
        auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        if (ggt_coset_table_complete(t.ptr)) {
            j["verified"] = ggt_coset_table_verify(t.ptr) != 0;
            out << "index " << ggt_coset_table_count(t.ptr) << " (" << ggt_coset_table_defined(t.ptr)
                << " cosets defined, table " << (j["verified"].get<bool>() ? "verified" : "NOT verified") << ")";
        } else {
            out << "inconclusive: more than " << g.cap << " cosets";
            exit_code = 2;
        }
        emit(g, j, out.str());
    });

    auto* pi = verify->add_subcommand("pi", "x -> S, y -> -ST into SL2(Z)");
    pi->callback([&] {
        char* s = nullptr;
        check(ggt_verify_pi(&s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        for (const auto& c : j["checks"]) {
            out << c["status"].get<std::string>() << "  " << c["claim"].get<std::string>() << "\n";
            if (c["id"] == "pi-relators") out << claims_text(c["witness"]["relators"]);
        }
        exit_code = j["exit_code"].get<int>();
        emit(g, j, out.str());
    });

    std::string composition = "right-to-left";
    auto* perm = verify->add_subcommand("perm", "permutation image a -> (1 2), b -> (2 3), c -> (3 4)");
    perm->add_option("--composition", composition)->check(CLI::IsMember({"right-to-left", "left-to-right"}));
    perm->callback([&] {
        char* s = nullptr;
        check(ggt_verify_perm(composition.c_str(), &s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        out << "composition: " << composition << "\n";
        for (const auto& c : j["checks"]) out << c["status"].get<std::string>() << "  " << c["claim"].get<std::string>() << "\n    " << c["witness"].dump() << "\n";
        exit_code = j["exit_code"].get<int>();
        emit(g, j, out.str());
    });

    // complex
    auto* complex = app.add_subcommand("complex", "triangle complexes (fixtures x1bar, ybar1, or a file)");
    complex->require_subcommand(1);
    std::string object, vertex, format = "text";
    bool smooth = false;
    auto* build = complex->add_subcommand("build", "summary of a complex");
    build->add_option("complex", object)->required();
    build->callback([&] {
        Complex c;
        load_complex(object, c);
        char* s = nullptr;
        check(ggt_complex_json(c.ptr, &s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        out << j["vertices"] << " vertices, " << j["edges"] << " edges, " << j["triangles"] << " triangles, Euler characteristic "
            << j["euler_characteristic"];
        emit(g, j, out.str());
    });
    auto* link = complex->add_subcommand("link", "vertex link as a metric graph");
    link->add_option("complex", object)->required();
    link->add_option("--vertex", vertex);
    link->add_flag("--smooth", smooth, "suppress degree-2 nodes");
    link->add_option("--format", format)->check(CLI::IsMember({"text", "dot", "json"}));
    link->callback([&] {
        Complex c;
        load_complex(object, c);
        Graph l;
        check(ggt_complex_link(c.ptr, vertex.empty() ? nullptr : vertex.c_str(), &l.ptr));
        Graph sm;
        const ggt_graph* shown = l.ptr;
        if (smooth) {
            check(ggt_graph_smooth(l.ptr, &sm.ptr));
            shown = sm.ptr;
        }
        char* s = nullptr;
        check(ggt_graph_serialize(shown, format.c_str(), &s));
        const std::string body = take(s);
        check(ggt_graph_serialize(shown, "json", &s));
        emit(g, ordered_json::parse(take(s)), body);
    });
    auto* cat0 = complex->add_subcommand("cat0", "link condition: every vertex link has girth >= 2 pi");
    cat0->add_option("complex", object)->required();
    cat0->callback([&] {
        Complex c;
        load_complex(object, c);
        char* s = nullptr;
        check(ggt_complex_link_condition(c.ptr, &s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        for (const auto& v : j["vertices"])
            out << "vertex " << v["vertex"].get<std::string>() << ": girth " << v["girth"].get<std::string>() << " pi "
                << (v["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        out << (j["pass"].get<bool>() ? "link condition holds" : "link condition fails");
        if (!j["pass"].get<bool>()) exit_code = 1;
        emit(g, j, out.str());
    });

    // graph
    auto* graph = app.add_subcommand("graph", "metric graphs (fixtures or files)");
    graph->require_subcommand(1);
    std::string u, v;
    auto* girth = graph->add_subcommand("girth", "exact girth by two algorithms");
    girth->add_option("graph", object)->required();
    girth->callback([&] {
        Graph gr;
        load_graph(object, gr);
        char* s = nullptr;
        check(ggt_graph_girth(gr.ptr, &s));
        const auto j = ordered_json::parse(take(s));
        std::ostringstream out;
        out << "girth " << j["girth"].get<std::string>() << " pi (exhaustive: " << j["girth_exhaustive"].get<std::string>()
            << " pi)";
        if (!j["agree"].get<bool>()) exit_code = 1;
        emit(g, j, out.str());
    });
    auto* dist = graph->add_subcommand("dist", "exact distance between two nodes");
    dist->add_option("graph", object)->required();
    dist->add_option("u", u)->required();
    dist->add_option("v", v)->required();
    dist->callback([&] {
        Graph gr;
        load_graph(object, gr);
        char* s = nullptr;
        check(ggt_graph_distance(gr.ptr, u.c_str(), v.c_str(), &s));
        const std::string d = take(s);
        emit(g, {{"u", u}, {"v", v}, {"distance", d}}, d == "inf" ? "inf" : d + " pi");
    });

    // embed
    std::string from, to, trace_path, mod_aut;
    bool all = false;
    auto* embed = app.add_subcommand("embed", "locally isometric embeddings between metric graphs");
    embed->add_option("--from", from, "source graph (fixture or file)")->required();
    embed->add_option("--to", to, "target graph (fixture or file)")->required();
    embed->add_flag("--all", all, "all certificates instead of the first");
    embed->add_option("--trace", trace_path, "write the search tree as JSON");
    embed->add_option("--mod-aut", mod_aut, "target automorphisms: a file of '<node> <image>' lines, or y");
    embed->callback([&] {
        Graph src, dst;
        load_graph(from, src);
        load_graph(to, dst);
        std::string aut;
        if (!mod_aut.empty()) aut = mod_aut == "y" ? "y" : read_file(mod_aut);
        ggt_embed_options o{all ? 1 : 0, trace_path.empty() ? 0 : 1, aut.empty() ? nullptr : aut.c_str()};
        char* result = nullptr;
        char* trace = nullptr;
        check(ggt_embed(src.ptr, dst.ptr, &o, &result, trace_path.empty() ? nullptr : &trace));
        const auto j = ordered_json::parse(take(result));
        if (!trace_path.empty()) write_file(trace_path, take(trace) + "\n");
        std::ostringstream out;
        out << j["count"] << " certificate(s); root cases " << j["root_cases"].size() << ", search tree "
            << j["search_tree_nodes"] << " nodes\n";
        for (const auto& [reason, n] : j["prunes"].items()) out << "  pruned by " << reason << ": " << n << "\n";
        if (!j["certificates"].empty()) {
            const auto& c = j["certificates"][0];
            out << "first certificate (" << (c["verified"].get<bool>() ? "verified" : "NOT verified") << "):\n";
            for (const auto& [node, image] : c["nodes"].items()) out << "  " << node << " -> " << image.get<std::string>() << "\n";
            for (const auto& a : c["arcs"]) out << "  " << a["arc"].get<std::string>() << " -> " << a["path"].get<std::string>() << "\n";
        }
        emit(g, j, out.str());
    });

    // audit
    std::vector<std::string> ids;
    bool list = false;
    auto* audit = app.add_subcommand("audit", "run the named checks (default: all)");
    audit->add_option("ids", ids, "check ids");
    audit->add_flag("--list", list, "list check ids");
    audit->callback([&] {
        char* s = nullptr;
        if (list) {
            check(ggt_audit_check_ids(&s));
            std::cout << take(s);
            return;
        }
        std::string selection;
        if (ids.empty()) selection = "all";
        for (const auto& id : ids) selection += id + ",";
        Report r;
        check(ggt_audit_run(selection.c_str(), g.cap, g.convention.c_str(), &r.ptr));
        check(ggt_report_json(r.ptr, 1, &s));
        const auto j = ordered_json::parse(take(s));
        check(ggt_report_text(r.ptr, &s));
        emit(g, j, take(s));
        exit_code = ggt_report_exit_code(r.ptr);
    });

    // export
    std::string out_path;
    auto* exp = app.add_subcommand("export", "write a named object (graph fixtures, x1bar, ybar1, g1-table, audit)");
    exp->add_option("object", object)->required();
    exp->add_option("--format", format)->check(CLI::IsMember({"text", "dot", "json"}));
    exp->add_option("--out", out_path, "output path (default: stdout)");
    exp->callback([&] {
        if (out_path.empty()) {
            char* s = nullptr;
            check(ggt_export(object.c_str(), format.c_str(), nullptr, &s));
            std::cout << take(s);
        } else {
            check(ggt_export(object.c_str(), format.c_str(), out_path.c_str(), nullptr));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
