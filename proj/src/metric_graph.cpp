#include "ggt/metric_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "ggt/error.hpp"

namespace ggt {

std::size_t MetricGraph::add_node(const std::string& name) {
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
        throw Error(ErrorCode::invalid_argument, "node name must be a non-empty token, got '" + name + "'");
    if (index_.count(name)) throw Error(ErrorCode::invalid_argument, "duplicate node '" + name + "'");
    index_.emplace(name, names_.size());
    names_.push_back(name);
    incident_.emplace_back();
    return names_.size() - 1;
}

std::size_t MetricGraph::add_arc(std::size_t u, std::size_t v, const Angle& length) {
    if (u >= names_.size() || v >= names_.size()) throw Error(ErrorCode::unknown_name, "arc endpoint out of range");
    if (!length.is_positive())
        throw Error(ErrorCode::invalid_argument, "arc length must be positive, got " + length.str());
    arcs_.push_back({u, v, length});
    incident_[u].push_back(arcs_.size() - 1);
    if (v != u) incident_[v].push_back(arcs_.size() - 1);
    return arcs_.size() - 1;
}

std::size_t MetricGraph::add_arc(const std::string& u, const std::string& v, const Angle& length) {
    return add_arc(node(u), node(v), length);
}

std::size_t MetricGraph::node(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::unknown_name, "unknown node '" + std::string(name) + "'");
    return it->second;
}

bool MetricGraph::has_node(std::string_view name) const {
    return index_.find(name) != index_.end();
}

std::size_t MetricGraph::degree(std::size_t node) const {
    std::size_t d = 0;
    for (std::size_t a : incident_.at(node)) d += arcs_[a].u == arcs_[a].v ? 2 : 1;
    return d;
}

Angle MetricGraph::total_length() const {
    Angle total;
    for (const Arc& a : arcs_) total += a.length;
    return total;
}

namespace {

constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

// Dijkstra from `from`, optionally ignoring one arc.
std::vector<Length> dijkstra(const MetricGraph& g, std::size_t from, std::size_t skip_arc = kNoArc) {
    std::vector<Length> dist(g.node_count());
    using Item = std::pair<Angle, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[from] = Angle(0);
    queue.emplace(Angle(0), from);
    while (!queue.empty()) {
        auto [d, n] = queue.top();
        queue.pop();
        if (dist[n] && *dist[n] < d) continue;
        for (std::size_t ai : g.incident(n)) {
            if (ai == skip_arc) continue;
            const auto& a = g.arc(ai);
            const std::size_t m = a.u == n ? a.v : a.u;
            const Angle nd = d + a.length;
            if (!dist[m] || nd < *dist[m]) {
                dist[m] = nd;
                queue.emplace(nd, m);
            }
        }
    }
    return dist;
}

void keep_min(Length& best, const Angle& candidate) {
    if (!best || candidate < *best) best = candidate;
}

}  // namespace

Length girth(const MetricGraph& g) {
    Length best;
    for (std::size_t ai = 0; ai < g.arc_count(); ++ai) {
        const auto& a = g.arc(ai);
        if (a.u == a.v) {
            keep_min(best, a.length);
            continue;
        }
        const auto dist = dijkstra(g, a.u, ai);
        if (dist[a.v]) keep_min(best, *dist[a.v] + a.length);
    }
    return best;
}

Length girth_exhaustive(const MetricGraph& g) {
    // Every simple cycle is enumerated from its smallest node, walking only
    // through larger nodes and never reusing an arc.
    Length best;
    std::vector<bool> on_path(g.node_count(), false);
    std::vector<bool> arc_used(g.arc_count(), false);
    std::function<void(std::size_t, std::size_t, const Angle&)> walk = [&](std::size_t start, std::size_t at,
                                                                            const Angle& length) {
        if (best && !(length < *best)) return;
        for (std::size_t ai : g.incident(at)) {
            if (arc_used[ai]) continue;
            const auto& a = g.arc(ai);
            const std::size_t next = a.u == at ? a.v : a.u;
            const Angle total = length + a.length;
            if (next == start) {
                keep_min(best, total);
                continue;
            }
            if (next < start || on_path[next]) continue;
            arc_used[ai] = true;
            on_path[next] = true;
            walk(start, next, total);
            on_path[next] = false;
            arc_used[ai] = false;
        }
    };
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        on_path[s] = true;
        walk(s, s, Angle(0));
        on_path[s] = false;
    }
    return best;
}

Length distance(const MetricGraph& g, std::size_t from, std::size_t to) {
    if (from >= g.node_count() || to >= g.node_count()) throw Error(ErrorCode::unknown_name, "node index out of range");
    return dijkstra(g, from)[to];
}

std::vector<std::vector<Length>> all_pairs_distances(const MetricGraph& g) {
    std::vector<std::vector<Length>> out;
    out.reserve(g.node_count());
    for (std::size_t n = 0; n < g.node_count(); ++n) out.push_back(dijkstra(g, n));
    return out;
}

SmoothedGraph smooth_traced(const MetricGraph& g) {
    struct Work {
        std::size_t u, v;
        Angle length;
        std::vector<SmoothedGraph::Step> path;
        bool alive = true;
    };
    std::vector<Work> arcs;
    std::vector<std::vector<std::size_t>> incident(g.node_count());
    for (std::size_t ai = 0; ai < g.arc_count(); ++ai) {
        const auto& a = g.arc(ai);
        arcs.push_back({a.u, a.v, a.length, {{ai, true}}});
        incident[a.u].push_back(ai);
        if (a.v != a.u) incident[a.v].push_back(ai);
    }
    std::vector<bool> removed(g.node_count(), false);

    auto reversed = [](std::vector<SmoothedGraph::Step> p) {
        std::reverse(p.begin(), p.end());
        for (auto& s : p) s.forward = !s.forward;
        return p;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t n = 0; n < g.node_count(); ++n) {
            if (removed[n]) continue;
            auto& inc = incident[n];
            inc.erase(std::remove_if(inc.begin(), inc.end(), [&](std::size_t ai) { return !arcs[ai].alive; }), inc.end());
            if (inc.size() != 2) continue;  // degree 2 with two distinct arcs; a lone loop stays
            const std::size_t a1 = inc[0];
            const std::size_t a2 = inc[1];
            if (arcs[a1].u == arcs[a1].v || arcs[a2].u == arcs[a2].v) continue;
            // orient a1 as (p -> n) and a2 as (n -> q)
            std::vector<SmoothedGraph::Step> left = arcs[a1].v == n ? arcs[a1].path : reversed(arcs[a1].path);
            const std::size_t p = arcs[a1].v == n ? arcs[a1].u : arcs[a1].v;
            std::vector<SmoothedGraph::Step> right = arcs[a2].u == n ? arcs[a2].path : reversed(arcs[a2].path);
            const std::size_t q = arcs[a2].u == n ? arcs[a2].v : arcs[a2].u;
            left.insert(left.end(), right.begin(), right.end());
            arcs[a1].alive = arcs[a2].alive = false;
            arcs.push_back({p, q, arcs[a1].length + arcs[a2].length, std::move(left)});
            const std::size_t merged = arcs.size() - 1;
            incident[p].push_back(merged);
            if (q != p) incident[q].push_back(merged);
            removed[n] = true;
            inc.clear();
            changed = true;
        }
    }

    SmoothedGraph out;
    std::vector<std::size_t> new_index(g.node_count(), 0);
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        if (removed[n]) continue;
        new_index[n] = out.graph.add_node(g.name(n));
        out.node_origin.push_back(n);
    }
    // surviving original arcs first, in original order, then merged ones
    for (auto& w : arcs) {
        if (!w.alive) continue;
        out.graph.add_arc(new_index[w.u], new_index[w.v], w.length);
        out.arc_origin.push_back(std::move(w.path));
    }
    return out;
}

MetricGraph smooth(const MetricGraph& g) {
    return smooth_traced(g).graph;
}

MetricGraph brady_link() {
    MetricGraph g;
    for (int k = 1; k <= 8; ++k) g.add_node("v" + std::to_string(k));
    for (std::size_t k = 0; k < 8; ++k) g.add_arc(k, (k + 1) % 8, Angle(1, 3));
    for (std::size_t k = 0; k < 4; ++k) g.add_arc(k, k + 4, Angle(2, 3));
    return g;
}

bool is_automorphism(const MetricGraph& g, const std::vector<std::size_t>& node_map) {
    if (node_map.size() != g.node_count()) return false;
    std::vector<bool> hit(g.node_count(), false);
    for (std::size_t m : node_map) {
        if (m >= g.node_count() || hit[m]) return false;
        hit[m] = true;
    }
    using Key = std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>;
    auto key = [](std::size_t u, std::size_t v, const Angle& len) {
        return Key{std::min(u, v), std::max(u, v), len.num(), len.den()};
    };
    std::vector<Key> original;
    std::vector<Key> mapped;
    for (const auto& a : g.arcs()) {
        original.push_back(key(a.u, a.v, a.length));
        mapped.push_back(key(node_map[a.u], node_map[a.v], a.length));
    }
    std::sort(original.begin(), original.end());
    std::sort(mapped.begin(), mapped.end());
    return original == mapped;
}

std::vector<std::size_t> node_map_from_names(const MetricGraph& g, const std::map<std::string, std::string>& names) {
    std::vector<std::size_t> out(g.node_count());
    for (std::size_t n = 0; n < g.node_count(); ++n) out[n] = n;
    for (const auto& [from, to] : names) out[g.node(from)] = g.node(to);
    return out;
}

bool is_bipartite(const MetricGraph& g) {
    std::vector<int> colour(g.node_count(), -1);
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t n = stack.back();
            stack.pop_back();
            for (std::size_t ai : g.incident(n)) {
                const auto& a = g.arc(ai);
                const std::size_t m = a.u == n ? a.v : a.u;
                if (colour[m] == -1) {
                    colour[m] = 1 - colour[n];
                    stack.push_back(m);
                } else if (colour[m] == colour[n]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string to_text(const MetricGraph& g) {
    std::ostringstream out;
    for (const auto& n : g.names()) out << "node " << n << "\n";
    for (const auto& a : g.arcs()) out << "arc " << g.name(a.u) << " " << g.name(a.v) << " " << a.length.fraction() << "\n";
    return out.str();
}

MetricGraph parse_graph(std::string_view text) {
    MetricGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;
        const std::string where = "graph line " + std::to_string(lineno) + ": ";
        try {
            if (keyword == "node") {
                std::string name, extra;
                if (!(fields >> name) || (fields >> extra)) throw Error(ErrorCode::parse, where + "expected 'node <name>'");
                g.add_node(name);
            } else if (keyword == "arc") {
                std::string u, v, len, extra;
                if (!(fields >> u >> v >> len) || (fields >> extra))
                    throw Error(ErrorCode::parse, where + "expected 'arc <u> <v> <p>/<q>'");
                g.add_arc(u, v, Angle::parse(len));
            } else {
                throw Error(ErrorCode::parse, where + "unknown keyword '" + keyword + "'");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::parse) throw;
            throw Error(e.code(), where + e.what());
        } catch (const std::exception& e) {
            throw Error(ErrorCode::parse, where + e.what());
        }
    }
    return g;
}

std::string to_dot(const MetricGraph& g, std::string_view title) {
    std::ostringstream out;
    out << "graph \"" << title << "\" {\n";
    for (const auto& n : g.names()) out << "  \"" << n << "\";\n";
    for (const auto& a : g.arcs())
        out << "  \"" << g.name(a.u) << "\" -- \"" << g.name(a.v) << "\" [label=\"" << a.length.str() << "pi\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const MetricGraph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = g.names();
    j["arcs"] = nlohmann::ordered_json::array();
    for (const auto& a : g.arcs())
        j["arcs"].push_back({{"u", g.name(a.u)}, {"v", g.name(a.v)}, {"length", a.length.fraction()}});
    return j.dump(2);
}

}  // namespace ggt
