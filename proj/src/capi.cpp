#include "ggt/ggt.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ggt/audit.hpp"
#include "ggt/braid_checks.hpp"
#include "ggt/complex.hpp"
#include "ggt/coset.hpp"
#include "ggt/embed.hpp"
#include "ggt/error.hpp"
#include "ggt/fixtures.hpp"
#include "ggt/reps.hpp"

struct ggt_graph {
    ggt::MetricGraph graph;
};
struct ggt_complex {
    ggt::TriComplex complex;
};
struct ggt_presentation {
    ggt::coset::Presentation presentation;
};
struct ggt_coset_table {
    ggt::coset::Presentation presentation;
    std::vector<ggt::Word> subgroup;
    ggt::coset::CosetTable table;
};
struct ggt_report {
    ggt::audit::Report report;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

ggt_status status_of(ggt::ErrorCode code) {
    switch (code) {
    case ggt::ErrorCode::parse: return GGT_ERR_PARSE;
    case ggt::ErrorCode::alphabet_mismatch: return GGT_ERR_ALPHABET;
    case ggt::ErrorCode::unknown_name: return GGT_ERR_UNKNOWN_NAME;
    case ggt::ErrorCode::invalid_argument: return GGT_ERR_INVALID_ARGUMENT;
    case ggt::ErrorCode::overflow: return GGT_ERR_OVERFLOW;
    case ggt::ErrorCode::io: return GGT_ERR_IO;
    }
    return GGT_ERR_INTERNAL;
}

template <typename F>
ggt_status guard(F&& body) {
    last_error.clear();
    try {
        body();
        return GGT_OK;
    } catch (const ggt::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::overflow_error& e) {
        last_error = e.what();
        return GGT_ERR_OVERFLOW;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return GGT_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GGT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GGT_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw ggt::Error(ggt::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ggt::garside::SixGenerators fixture_of(const char* name) {
    const std::string n = name ? name : "right";
    if (n == "right") return ggt::garside::six_generators(ggt::garside::Fixture::right);
    if (n == "left") return ggt::garside::six_generators(ggt::garside::Fixture::left);
    if (n == "literal") return ggt::garside::six_generators(ggt::garside::Fixture::literal);
    throw ggt::Error(ggt::ErrorCode::unknown_name, "unknown fixture '" + n + "' (right, left, literal)");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\n' || ch == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::vector<std::size_t>> parse_automorphisms(const ggt::MetricGraph& g, const std::string& text) {
    std::vector<std::vector<std::size_t>> out;
    std::istringstream in(text);
    std::string line;
    std::map<std::string, std::string> current;
    auto flush = [&] {
        if (current.empty()) return;
        out.push_back(ggt::node_map_from_names(g, current));
        current.clear();
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string from, to, extra;
        if (!(words >> from)) continue;
        if (from == "--") {
            flush();
            continue;
        }
        if (from == "y" && !(words >> to)) {
            flush();
            out.push_back(ggt::y_link_automorphism(g));
            continue;
        }
        if (to.empty() && !(words >> to))
            throw ggt::Error(ggt::ErrorCode::parse, "automorphism line needs '<node> <image>': " + line);
        if (words >> extra) throw ggt::Error(ggt::ErrorCode::parse, "trailing text in automorphism line: " + line);
        current[from] = to;
    }
    flush();
    for (const auto& m : out)
        if (!ggt::is_automorphism(g, m)) throw ggt::Error(ggt::ErrorCode::invalid_argument, "supplied map is not an automorphism");
    return out;
}

}  // namespace

extern "C" {

const char* ggt_last_error(void) { return last_error.c_str(); }

const char* ggt_status_name(ggt_status status) {
    switch (status) {
    case GGT_OK: return "ok";
    case GGT_ERR_PARSE: return "parse error";
    case GGT_ERR_ALPHABET: return "alphabet mismatch";
    case GGT_ERR_UNKNOWN_NAME: return "unknown name";
    case GGT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GGT_ERR_OVERFLOW: return "overflow";
    case GGT_ERR_IO: return "i/o error";
    case GGT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ggt_free_string(char* text) { std::free(text); }

// braids

ggt_status ggt_garside_nf(const char* word, const char* fixture, char** out) {
    return guard([&] {
        require(word, "word");
        require(out, "out");
        *out = dup(ggt::garside::normal_form(ggt::garside::to_b4(word, fixture_of(fixture))).str());
    });
}

ggt_status ggt_garside_equal(const char* lhs, const char* rhs, const char* fixture, int mod_center, int* equal) {
    return guard([&] {
        require(lhs, "lhs");
        require(rhs, "rhs");
        require(equal, "equal");
        const auto gens = fixture_of(fixture);
        const ggt::Word l = ggt::garside::to_b4(lhs, gens);
        const ggt::Word r = ggt::garside::to_b4(rhs, gens);
        *equal = mod_center ? ggt::garside::equals_mod_center(l, r) : ggt::garside::equals_in_b4(l, r);
    });
}

ggt_status ggt_garside_orbit(const char* g, const char* seed, int steps, const char* convention, const char* fixture,
                             char** json) {
    return guard([&] {
        require(g, "g");
        require(seed, "seed");
        require(json, "json");
        if (steps < 1) throw ggt::Error(ggt::ErrorCode::invalid_argument, "steps must be positive");
        const auto gens = fixture_of(fixture);
        const auto conv = ggt::garside::parse_convention(convention ? convention : "left");
        const auto orbit = ggt::garside::conjugation_orbit(ggt::garside::to_b4(g, gens), ggt::garside::to_b4(seed, gens),
                                                           steps, conv);
        ordered_json j = {{"g", g}, {"seed", seed}, {"convention", ggt::garside::to_string(conv)}, {"period", orbit.period}};
        j["elements"] = ordered_json::array();
        for (const auto& nf : orbit.elements) j["elements"].push_back(nf.str());
        *json = dup(j.dump());
    });
}

ggt_status ggt_garside_audit_presentation(const char* fixture, char** json) {
    return guard([&] {
        require(json, "json");
        const auto gens = fixture_of(fixture);
        ordered_json j = ordered_json::array();
        for (const auto& c : ggt::garside::verify_six_generator_presentation(gens))
            j.push_back({{"claim", c.claim}, {"status", c.pass ? "pass" : "fail"}, {"lhs_nf", c.lhs_nf}, {"rhs_nf", c.rhs_nf}});
        *json = dup(j.dump());
    });
}

// coset enumeration

ggt_status ggt_presentation_fixture(const char* name, ggt_presentation** out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        *out = new ggt_presentation{ggt::coset::fixture(name)};
    });
}

ggt_status ggt_presentation_parse(const char* text, ggt_presentation** out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new ggt_presentation{ggt::coset::parse_presentation(text)};
    });
}

void ggt_presentation_free(ggt_presentation* p) { delete p; }

ggt_status ggt_coset_enumerate(const ggt_presentation* p, const char* subgroup, size_t cap, const char* strategy,
                               ggt_coset_table** out) {
    return guard([&] {
        require(p, "presentation");
        require(out, "out");
        if (cap == 0) throw ggt::Error(ggt::ErrorCode::invalid_argument, "cap must be positive");
        const std::string s = strategy ? strategy : "hlt";
        ggt::coset::Strategy strat;
        if (s == "hlt") strat = ggt::coset::Strategy::hlt;
        else if (s == "felsch") strat = ggt::coset::Strategy::felsch;
        else throw ggt::Error(ggt::ErrorCode::invalid_argument, "unknown strategy '" + s + "' (hlt, felsch)");
        std::vector<ggt::Word> words;
        if (subgroup) {
            std::string cur;
            for (const char* c = subgroup;; ++c) {
                if (*c == ',' || *c == '\0') {
                    if (cur.find_first_not_of(" \t") != std::string::npos)
                        words.push_back(ggt::parse_word(cur, p->presentation.alphabet));
                    cur.clear();
                    if (*c == '\0') break;
                } else {
                    cur += *c;
                }
            }
        }
        auto table = ggt::coset::enumerate(p->presentation, words, cap, strat);
        *out = new ggt_coset_table{p->presentation, std::move(words), std::move(table)};
    });
}

int ggt_coset_table_complete(const ggt_coset_table* t) {
    return t && t->table.status == ggt::coset::Status::complete;
}
size_t ggt_coset_table_count(const ggt_coset_table* t) { return t ? t->table.count : 0; }
size_t ggt_coset_table_defined(const ggt_coset_table* t) { return t ? t->table.defined : 0; }

int ggt_coset_table_verify(const ggt_coset_table* t) {
    if (!t || t->table.status != ggt::coset::Status::complete) return 0;
    return ggt::coset::verify_table(t->presentation, t->subgroup, t->table);
}

ggt_status ggt_coset_table_json(const ggt_coset_table* t, char** out) {
    return guard([&] {
        require(t, "table");
        require(out, "out");
        const bool complete = t->table.status == ggt::coset::Status::complete;
        ordered_json j = {{"status", complete ? "complete" : "overflow"}, {"defined", t->table.defined}};
        if (complete) {
            j["count"] = t->table.count;
            j["action"] = ordered_json::object();
            const auto image = ggt::coset::permutation_image(t->table);
            for (std::size_t g = 0; g < image.size(); ++g) {
                std::vector<std::size_t> one_based;
                for (auto v : image[g]) one_based.push_back(v + 1);
                j["action"][std::string(1, t->table.alphabet.symbols()[g])] = one_based;
            }
        }
        *out = dup(j.dump());
    });
}

void ggt_coset_table_free(ggt_coset_table* t) { delete t; }

// representations

ggt_status ggt_verify_pi(char** json) {
    return guard([&] {
        require(json, "json");
        auto report = ggt::audit::run({"pi-relators", "pi-sl2z", "pi-minus-st", "pi-g1-images"});
        *json = dup(report.json(false));
    });
}

ggt_status ggt_verify_perm(const char* composition, char** json) {
    return guard([&] {
        require(json, "json");
        ggt::audit::Options o;
        const std::string c = composition ? composition : "right-to-left";
        if (c == "right-to-left") o.composition = ggt::reps::Composition::right_to_left;
        else if (c == "left-to-right") o.composition = ggt::reps::Composition::left_to_right;
        else throw ggt::Error(ggt::ErrorCode::invalid_argument, "unknown composition '" + c + "'");
        *json = dup(ggt::audit::run({"perm-stabilizer", "perm-cycle-types"}, o).json(false));
    });
}

// complexes

ggt_status ggt_complex_fixture(const char* name, ggt_complex** out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        *out = new ggt_complex{ggt::complex_fixture(name)};
    });
}

ggt_status ggt_complex_parse(const char* text, ggt_complex** out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new ggt_complex{ggt::parse_complex(text)};
    });
}

void ggt_complex_free(ggt_complex* c) { delete c; }

ggt_status ggt_complex_json(const ggt_complex* c, char** out) {
    return guard([&] {
        require(c, "complex");
        require(out, "out");
        const auto& cx = c->complex;
        ordered_json j = {{"vertices", cx.vertices().size()},
                          {"edges", cx.edges().size()},
                          {"triangles", cx.triangles().size()},
                          {"euler_characteristic", cx.euler_characteristic()}};
        j["edge_labels"] = ordered_json::array();
        for (const auto& e : cx.edges()) j["edge_labels"].push_back(e.label);
        *out = dup(j.dump());
    });
}

ggt_status ggt_complex_text(const ggt_complex* c, char** out) {
    return guard([&] {
        require(c, "complex");
        require(out, "out");
        *out = dup(ggt::to_text(c->complex));
    });
}

ggt_status ggt_complex_link(const ggt_complex* c, const char* vertex, ggt_graph** out) {
    return guard([&] {
        require(c, "complex");
        require(out, "out");
        std::string v;
        if (vertex) v = vertex;
        else if (c->complex.vertices().size() == 1) v = c->complex.vertices().front();
        else throw ggt::Error(ggt::ErrorCode::invalid_argument, "the complex has several vertices; name one");
        *out = new ggt_graph{ggt::vertex_link(c->complex, v)};
    });
}

ggt_status ggt_complex_link_condition(const ggt_complex* c, char** json) {
    return guard([&] {
        require(c, "complex");
        require(json, "json");
        const auto report = ggt::check_link_condition(c->complex);
        ordered_json j = {{"pass", report.pass}, {"vertices", ordered_json::array()}};
        for (const auto& v : report.vertices)
            j["vertices"].push_back({{"vertex", v.vertex}, {"girth", ggt::to_string(v.girth)}, {"pass", v.pass}});
        *json = dup(j.dump());
    });
}

// graphs

ggt_status ggt_graph_fixture(const char* name, ggt_graph** out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        *out = new ggt_graph{ggt::graph_fixture(name)};
    });
}

ggt_status ggt_graph_parse(const char* text, ggt_graph** out) {
    return guard([&] {
        require(text, "text");
        require(out, "out");
        *out = new ggt_graph{ggt::parse_graph(text)};
    });
}

ggt_status ggt_graph_smooth(const ggt_graph* g, ggt_graph** out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        *out = new ggt_graph{ggt::smooth(g->graph)};
    });
}

void ggt_graph_free(ggt_graph* g) { delete g; }
size_t ggt_graph_node_count(const ggt_graph* g) { return g ? g->graph.node_count() : 0; }
size_t ggt_graph_arc_count(const ggt_graph* g) { return g ? g->graph.arc_count() : 0; }

ggt_status ggt_graph_girth(const ggt_graph* g, char** json) {
    return guard([&] {
        require(g, "graph");
        require(json, "json");
        const auto by_deletion = ggt::girth(g->graph);
        const auto by_cycles = ggt::girth_exhaustive(g->graph);
        ordered_json j = {{"girth", ggt::to_string(by_deletion)},
                          {"girth_exhaustive", ggt::to_string(by_cycles)},
                          {"agree", by_deletion == by_cycles},
                          {"link_condition", !by_deletion || *by_deletion >= ggt::Angle(2)}};
        *json = dup(j.dump());
    });
}

ggt_status ggt_graph_distance(const ggt_graph* g, const char* u, const char* v, char** out) {
    return guard([&] {
        require(g, "graph");
        require(u, "u");
        require(v, "v");
        require(out, "out");
        *out = dup(ggt::to_string(ggt::distance(g->graph, g->graph.node(u), g->graph.node(v))));
    });
}

ggt_status ggt_graph_serialize(const ggt_graph* g, const char* format, char** out) {
    return guard([&] {
        require(g, "graph");
        require(format, "format");
        require(out, "out");
        const std::string f = format;
        if (f == "dot") *out = dup(ggt::to_dot(g->graph));
        else if (f == "json") *out = dup(ggt::to_json(g->graph));
        else if (f == "text") *out = dup(ggt::to_text(g->graph));
        else throw ggt::Error(ggt::ErrorCode::invalid_argument, "unknown format '" + f + "' (dot, json, text)");
    });
}

// embeddings

ggt_status ggt_embed(const ggt_graph* src, const ggt_graph* dst, const ggt_embed_options* options, char** result_json,
                     char** trace_json) {
    return guard([&] {
        require(src, "source graph");
        require(dst, "target graph");
        require(result_json, "result_json");
        ggt::embed::SearchOptions so;
        so.all = options ? options->all != 0 : true;
        so.record_trace = trace_json != nullptr && (!options || options->trace);
        if (options && options->automorphisms && *options->automorphisms)
            so.target_automorphisms = parse_automorphisms(dst->graph, options->automorphisms);
        const auto r = ggt::embed::find_embeddings(src->graph, dst->graph, so);
        ordered_json j = {{"count", r.certificates.size()}, {"quantum", r.quantum.fraction()}};
        j["root_cases"] = ordered_json::array();
        for (auto n : r.root_candidates) j["root_cases"].push_back(dst->graph.name(n));
        j["search_tree_nodes"] = r.stats.tree_nodes;
        j["prunes"] = ordered_json::object();
        for (auto [k, v] : r.stats.prunes) j["prunes"][ggt::embed::to_string(k)] = v;
        j["certificates"] = ordered_json::array();
        for (const auto& c : r.certificates) {
            auto cert = ordered_json::parse(ggt::embed::certificate_json(c, src->graph, dst->graph));
            const auto v = ggt::embed::verify_certificate(c, src->graph, dst->graph);
            cert["verified"] = v.ok;
            j["certificates"].push_back(cert);
        }
        std::string trace = so.record_trace ? ggt::embed::trace_json(r.trace) : std::string();
        *result_json = dup(j.dump());
        if (trace_json) *trace_json = so.record_trace ? dup(trace) : nullptr;
    });
}

// audit

ggt_status ggt_audit_check_ids(char** out) {
    return guard([&] {
        require(out, "out");
        std::string s;
        for (const auto& id : ggt::audit::check_ids()) s += id + "\n";
        *out = dup(s);
    });
}

ggt_status ggt_audit_run(const char* selection, size_t cap, const char* convention, ggt_report** out) {
    return guard([&] {
        require(out, "out");
        ggt::audit::Options o;
        if (cap > 0) o.cap = cap;
        if (convention) o.conjugation = ggt::garside::parse_convention(convention);
        *out = new ggt_report{ggt::audit::run(split_list(selection ? selection : ""), o)};
    });
}

int ggt_report_exit_code(const ggt_report* r) { return r ? r->report.exit_code() : 1; }
size_t ggt_report_size(const ggt_report* r) { return r ? r->report.entries.size() : 0; }

ggt_status ggt_report_json(const ggt_report* r, int timing, char** out) {
    return guard([&] {
        require(r, "report");
        require(out, "out");
        *out = dup(r->report.json(timing != 0));
    });
}

ggt_status ggt_report_text(const ggt_report* r, char** out) {
    return guard([&] {
        require(r, "report");
        require(out, "out");
        *out = dup(r->report.text());
    });
}

void ggt_report_free(ggt_report* r) { delete r; }

ggt_status ggt_export(const char* id, const char* format, const char* path, char** out) {
    return guard([&] {
        require(id, "id");
        require(format, "format");
        if (path) {
            ggt::audit::export_to_file(id, format, path);
            if (out) *out = nullptr;
        } else {
            require(out, "out");
            *out = dup(ggt::audit::export_object(id, format));
        }
    });
}

}  // extern "C"
