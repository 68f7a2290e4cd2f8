#include "ggt/embed.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

#include "ggt/error.hpp"

namespace ggt::embed {

const char* to_string(PruneReason reason) {
    switch (reason) {
    case PruneReason::length_mismatch: return "length mismatch";
    case PruneReason::injectivity_clash: return "injectivity clash";
    case PruneReason::local_isometry_clash: return "local-isometry clash";
    case PruneReason::distance_obstruction: return "distance obstruction";
    }
    return "?";
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int64_t kMaxUnits = 1'000'000;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Hop {
    std::size_t arc;
    std::size_t next;
    bool forward;
};

std::size_t other_end(const MetricGraph::Arc& a, std::size_t from) {
    return a.u == from ? a.v : a.u;
}

std::string arc_name(const MetricGraph& g, std::size_t ai) {
    const auto& a = g.arc(ai);
    return g.name(a.u) + "-" + g.name(a.v);
}

std::string path_text(const MetricGraph& dst, std::size_t from, const ArcPath& path) {
    std::string out = dst.name(from);
    std::size_t at = from;
    for (const auto& s : path) {
        const auto& a = dst.arc(s.arc);
        at = s.forward ? a.v : a.u;
        out += " " + dst.name(at);
    }
    return out;
}

class Search {
public:
    Search(const MetricGraph& src, const MetricGraph& dst, const SearchOptions& options)
        : src_(src), dst_(dst), options_(options) {
        for (std::size_t n = 0; n < src.node_count(); ++n)
            if (src.degree(n) < 3)
                throw Error(ErrorCode::invalid_argument,
                            "source node '" + src.name(n) + "' has degree " + std::to_string(src.degree(n)) +
                                "; the search needs every source node of degree >= 3 (smooth the source first)");
        for (const auto& [from, to] : options.pinned)
            if (from >= src.node_count() || to >= dst.node_count())
                throw Error(ErrorCode::invalid_argument, "pinned assignment out of range");
        for (const auto& m : options.target_automorphisms)
            if (!is_automorphism(dst, m)) throw Error(ErrorCode::invalid_argument, "supplied map is not a target automorphism");

        // common unit
        std::optional<Angle> unit;
        for (const auto* g : {&src, &dst})
            for (const auto& a : g->arcs()) unit = unit ? gcd(*unit, a.length) : a.length;
        quantum_ = unit.value_or(Angle(1));
        auto units = [&](const Angle& len) {
            auto q = divide_exact(len, quantum_);
            if (!q || *q > kMaxUnits)
                throw Error(ErrorCode::invalid_argument, "incommensurable lengths: " + len.str() +
                                                             " is not a small integer multiple of " + quantum_.str());
            return *q;
        };
        for (const auto& a : src.arcs()) src_units_.push_back(units(a.length));
        for (const auto& a : dst.arcs()) dst_units_.push_back(units(a.length));

        hops_.resize(dst.node_count());
        for (std::size_t ai = 0; ai < dst.arc_count(); ++ai) {
            const auto& a = dst.arc(ai);
            hops_[a.u].push_back({ai, a.v, true});
            hops_[a.v].push_back({ai, a.u, false});
        }
        dist_.assign(dst.node_count(), std::vector<std::int64_t>(dst.node_count(), kInf));
        const auto exact = all_pairs_distances(dst);
        for (std::size_t i = 0; i < dst.node_count(); ++i)
            for (std::size_t j = 0; j < dst.node_count(); ++j)
                if (exact[i][j]) dist_[i][j] = units(*exact[i][j] + quantum_) - 1;

        plan_order();
    }

    SearchResult run() {
        result_.quantum = quantum_;
        result_.node_order = order_;
        result_.trace.assignment = "search";
        if (options_.target_automorphisms.empty()) {
            result_.root_candidates.resize(dst_.node_count());
            std::iota(result_.root_candidates.begin(), result_.root_candidates.end(), 0);
        } else {
            result_.root_candidates = orbit_representatives(dst_.node_count(), options_.target_automorphisms);
        }
        image_.assign(src_.node_count(), kNone);
        node_use_.assign(dst_.node_count(), 0);
        arc_used_.assign(dst_.arc_count(), false);
        paths_.assign(src_.arc_count(), {});
        if (order_.empty()) {
            // empty source embeds trivially
            result_.certificates.push_back({{}, {}});
            result_.trace.success = true;
        } else {
            assign_node(0, result_.trace);
        }
        std::sort(result_.certificates.begin(), result_.certificates.end());
        return std::move(result_);
    }

private:
    void plan_order() {
        const std::size_t n = src_.node_count();
        std::vector<bool> placed(n, false);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t best = kNone;
            std::tuple<std::size_t, std::size_t> best_key{};
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::size_t linked = 0;
                for (std::size_t ai : src_.incident(v)) {
                    const auto& a = src_.arc(ai);
                    if (a.u != a.v && placed[other_end(a, v)]) ++linked;
                }
                const std::tuple<std::size_t, std::size_t> key{linked, src_.degree(v)};
                if (best == kNone || key > best_key) {
                    best = v;
                    best_key = key;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        // arcs become routable when their later endpoint is assigned
        std::vector<std::size_t> position(n);
        for (std::size_t k = 0; k < n; ++k) position[order_[k]] = k;
        routes_.resize(n);
        for (std::size_t ai = 0; ai < src_.arc_count(); ++ai) {
            const auto& a = src_.arc(ai);
            routes_[std::max(position[a.u], position[a.v])].push_back(ai);
        }
        for (auto& r : routes_)
            std::sort(r.begin(), r.end(), [&](std::size_t x, std::size_t y) {
                return std::tie(src_units_[x], x) < std::tie(src_units_[y], y);
            });
    }

    TraceNode& child(TraceNode& parent, std::string assignment) {
        ++result_.stats.tree_nodes;
        if (!options_.record_trace) {
            scratch_ = TraceNode{};
            scratch_.assignment = std::move(assignment);
            return scratch_;
        }
        parent.children.push_back(TraceNode{});
        parent.children.back().assignment = std::move(assignment);
        return parent.children.back();
    }

    void prune(TraceNode& node, PruneReason reason, std::string detail) {
        ++result_.stats.prunes[reason];
        node.pruned = reason;
        node.detail = std::move(detail);
    }

    bool done() const { return !options_.all && !result_.certificates.empty(); }

    void assign_node(std::size_t k, TraceNode& parent) {
        const std::size_t v = order_[k];
        const std::vector<std::size_t>* candidates = &result_.root_candidates;
        std::vector<std::size_t> all;
        if (auto pin = options_.pinned.find(v); pin != options_.pinned.end()) {
            all = {pin->second};
            candidates = &all;
        } else if (k > 0) {
            all.resize(dst_.node_count());
            std::iota(all.begin(), all.end(), 0);
            candidates = &all;
        }
        for (std::size_t w : *candidates) {
            if (done()) return;
            // the trace may reallocate children; keep working through an index
            TraceNode& node = child(parent, src_.name(v) + " -> " + dst_.name(w));
            if (node_use_[w] != 0) {
                prune(node, PruneReason::injectivity_clash, dst_.name(w) + " already carries an image");
                continue;
            }
            if (dst_.degree(w) < src_.degree(v)) {
                prune(node, PruneReason::local_isometry_clash,
                      dst_.name(w) + " has " + std::to_string(dst_.degree(w)) + " directions, " + src_.name(v) + " needs " +
                          std::to_string(src_.degree(v)));
                continue;
            }
            if (auto obstruction = distance_violation(v, w)) {
                const auto& o = *obstruction;
                prune(node, PruneReason::distance_obstruction,
                      "arc " + arc_name(src_, o.src_arc) + " has length " + o.arc_length.str() + " pi but d(" +
                          dst_.name(o.image_u) + ", " + dst_.name(o.image_v) + ") = " + to_string(o.target_distance) + " pi");
                node.obstruction = o;
                continue;
            }
            image_[v] = w;
            node_use_[w] = 1;
            route(k, 0, node);
            node_use_[w] = 0;
            image_[v] = kNone;
        }
    }

    std::optional<DistanceObstruction> distance_violation(std::size_t v, std::size_t w) const {
        for (std::size_t ai : src_.incident(v)) {
            const auto& a = src_.arc(ai);
            if (a.u == a.v) continue;
            const std::size_t u = other_end(a, v);
            if (image_[u] == kNone) continue;
            if (dist_[image_[u]][w] > src_units_[ai]) {
                DistanceObstruction o;
                o.src_arc = ai;
                o.image_u = a.u == v ? w : image_[u];
                o.image_v = a.u == v ? image_[u] : w;
                o.arc_length = a.length;
                o.target_distance = distance(dst_, image_[u], w);
                return o;
            }
        }
        return std::nullopt;
    }

    void route(std::size_t k, std::size_t idx, TraceNode& parent) {
        if (done()) return;
        if (idx == routes_[k].size()) {
            if (k + 1 == order_.size()) {
                Certificate cert{image_, paths_};
                result_.certificates.push_back(std::move(cert));
                parent.success = true;
                return;
            }
            assign_node(k + 1, parent);
            return;
        }
        const std::size_t ai = routes_[k][idx];
        const auto& a = src_.arc(ai);
        const std::size_t from = image_[a.u];
        const std::size_t to = image_[a.v];
        std::vector<ArcPath> candidates;
        ArcPath current;
        collect_paths(from, to, src_units_[ai], true, false, current, candidates, false);
        if (candidates.empty()) {
            TraceNode& node = child(parent, "arc " + arc_name(src_, ai));
            const std::string need = "length " + a.length.str() + " pi from " + dst_.name(from) + " to " + dst_.name(to);
            std::vector<ArcPath> probe;
            ArcPath scratch;
            if (!collect_paths(from, to, src_units_[ai], false, false, scratch, probe, true))
                prune(node, PruneReason::length_mismatch, "no simple target path of " + need);
            else if (collect_paths(from, to, src_units_[ai], true, true, scratch, probe, true))
                prune(node, PruneReason::local_isometry_clash, "every path of " + need + " leaves through a used direction");
            else
                prune(node, PruneReason::injectivity_clash, "every path of " + need + " meets an earlier image");
            return;
        }
        for (const ArcPath& path : candidates) {
            if (done()) return;
            TraceNode& node = child(parent, "arc " + arc_name(src_, ai) + " -> " + path_text(dst_, from, path));
            mark(from, path, true);
            paths_[ai] = path;
            route(k, idx + 1, node);
            paths_[ai].clear();
            mark(from, path, false);
        }
    }

    void mark(std::size_t from, const ArcPath& path, bool on) {
        std::size_t at = from;
        for (std::size_t i = 0; i < path.size(); ++i) {
            arc_used_[path[i].arc] = on;
            const auto& a = dst_.arc(path[i].arc);
            at = path[i].forward ? a.v : a.u;
            if (i + 1 < path.size()) node_use_[at] = on ? 2 : 0;
        }
    }

    // Simple paths of exactly `length` units from `from` to `to`. With
    // `respect_usage` false, earlier images are ignored; with
    // `reuse_end_arcs` arcs touching the endpoints may be reused.
    bool collect_paths(std::size_t from, std::size_t to, std::int64_t length, bool respect_usage, bool reuse_end_arcs,
                       ArcPath& current, std::vector<ArcPath>& out, bool stop_at_first) {
        std::vector<bool> on_path(dst_.node_count(), false);
        std::vector<bool> arc_on_path(dst_.arc_count(), false);
        on_path[from] = true;
        std::function<bool(std::size_t, std::int64_t)> walk = [&](std::size_t at, std::int64_t remaining) -> bool {
            if (dist_[at][to] > remaining && !(at == to && remaining == 0)) return false;
            for (const Hop& h : hops_[at]) {
                if (arc_on_path[h.arc]) continue;
                if (respect_usage && arc_used_[h.arc]) {
                    const auto& a = dst_.arc(h.arc);
                    const bool at_end = a.u == from || a.v == from || a.u == to || a.v == to;
                    if (!(reuse_end_arcs && at_end)) continue;
                }
                const std::int64_t len = dst_units_[h.arc];
                if (len > remaining) continue;
                if (h.next == to) {
                    if (len != remaining) continue;
                    current.push_back({h.arc, h.forward});
                    out.push_back(current);
                    current.pop_back();
                    if (stop_at_first) return true;
                    continue;
                }
                if (on_path[h.next] || (respect_usage && node_use_[h.next] != 0)) continue;
                on_path[h.next] = true;
                arc_on_path[h.arc] = true;
                current.push_back({h.arc, h.forward});
                const bool stop = walk(h.next, remaining - len);
                current.pop_back();
                arc_on_path[h.arc] = false;
                on_path[h.next] = false;
                if (stop) return true;
            }
            return false;
        };
        walk(from, length);
        return !out.empty();
    }

    const MetricGraph& src_;
    const MetricGraph& dst_;
    SearchOptions options_;
    Angle quantum_;
    std::vector<std::int64_t> src_units_;
    std::vector<std::int64_t> dst_units_;
    std::vector<std::vector<Hop>> hops_;
    std::vector<std::vector<std::int64_t>> dist_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> routes_;

    std::vector<std::size_t> image_;
    std::vector<int> node_use_;  // 0 free, 1 node image, 2 path interior
    std::vector<bool> arc_used_;
    std::vector<ArcPath> paths_;
    SearchResult result_;
    TraceNode scratch_;
};

}  // namespace

SearchResult find_embeddings(const MetricGraph& src, const MetricGraph& dst, const SearchOptions& options) {
    return Search(src, dst, options).run();
}

Verdict verify_certificate(const Certificate& cert, const MetricGraph& src, const MetricGraph& dst) {
    auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
    if (cert.node_map.size() != src.node_count()) return fail("node assignment is not total");
    if (cert.arc_paths.size() != src.arc_count()) return fail("arc assignment is not total");
    std::set<std::size_t> node_images;
    for (std::size_t n = 0; n < cert.node_map.size(); ++n) {
        if (cert.node_map[n] >= dst.node_count()) return fail("node image out of range");
        if (!node_images.insert(cert.node_map[n]).second)
            return fail("two source nodes map to " + dst.name(cert.node_map[n]));
    }

    std::set<std::size_t> arcs_used;
    std::set<std::size_t> interiors;
    // (source node, target arc, which end) for local injectivity
    std::map<std::size_t, std::set<std::pair<std::size_t, bool>>> directions;
    for (std::size_t ai = 0; ai < src.arc_count(); ++ai) {
        const auto& a = src.arc(ai);
        const ArcPath& path = cert.arc_paths[ai];
        const std::string name = "arc " + arc_name(src, ai);
        if (path.empty()) return fail(name + " has an empty image");
        std::size_t at = cert.node_map[a.u];
        Angle length;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const PathStep& s = path[i];
            if (s.arc >= dst.arc_count()) return fail(name + " uses a target arc out of range");
            const auto& t = dst.arc(s.arc);
            const std::size_t begin = s.forward ? t.u : t.v;
            const std::size_t end = s.forward ? t.v : t.u;
            if (begin != at) return fail(name + " image is not a connected path");
            if (i > 0 && path[i - 1].arc == s.arc) return fail(name + " image backtracks");
            if (!arcs_used.insert(s.arc).second) return fail("target arc " + arc_name(dst, s.arc) + " is used twice");
            length += t.length;
            at = end;
            if (i + 1 < path.size()) {
                if (node_images.count(at)) return fail(name + " passes through the node image " + dst.name(at));
                if (!interiors.insert(at).second) return fail("target node " + dst.name(at) + " is crossed twice");
            }
        }
        if (at != cert.node_map[a.v]) return fail(name + " image ends at the wrong node");
        if (length != a.length) return fail(name + " has length " + a.length.str() + " pi but its image " + length.str() + " pi");
        // arc-end ids: true = u-end of the target arc
        const bool first_end = path.front().forward;
        const bool last_end = !path.back().forward;
        if (!directions[a.u].insert({path.front().arc, first_end}).second)
            return fail("two arcs leave " + src.name(a.u) + " in the same direction");
        if (!directions[a.v].insert({path.back().arc, last_end}).second)
            return fail("two arcs leave " + src.name(a.v) + " in the same direction");
    }
    return {true, ""};
}

Certificate apply_automorphism(const Certificate& cert, const MetricGraph& dst, const std::vector<std::size_t>& node_map) {
    if (!is_automorphism(dst, node_map)) throw Error(ErrorCode::invalid_argument, "not an automorphism of the target");
    // parallel arcs of equal length are interchangeable; match them greedily
    using Key = std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>;
    auto key = [](std::size_t u, std::size_t v, const Angle& len) {
        return Key{std::min(u, v), std::max(u, v), len.num(), len.den()};
    };
    std::map<Key, std::vector<std::size_t>> pool;
    for (std::size_t ai = 0; ai < dst.arc_count(); ++ai) {
        const auto& a = dst.arc(ai);
        pool[key(a.u, a.v, a.length)].push_back(ai);
    }
    std::vector<std::size_t> arc_map(dst.arc_count());
    std::map<Key, std::size_t> taken;
    for (std::size_t ai = 0; ai < dst.arc_count(); ++ai) {
        const auto& a = dst.arc(ai);
        const Key k = key(node_map[a.u], node_map[a.v], a.length);
        arc_map[ai] = pool.at(k)[taken[k]++];
    }
    Certificate out;
    for (std::size_t n : cert.node_map) out.node_map.push_back(node_map.at(n));
    for (const ArcPath& path : cert.arc_paths) {
        ArcPath mapped;
        for (const PathStep& s : path) {
            const auto& a = dst.arc(s.arc);
            const std::size_t begin = node_map[s.forward ? a.u : a.v];
            const auto& image = dst.arc(arc_map[s.arc]);
            mapped.push_back({arc_map[s.arc], image.u == image.v ? s.forward : image.u == begin});
        }
        out.arc_paths.push_back(std::move(mapped));
    }
    return out;
}

std::vector<DistanceObstruction> distance_obstructions(const MetricGraph& src, const MetricGraph& dst,
                                                       const std::map<std::size_t, std::size_t>& partial) {
    std::vector<DistanceObstruction> out;
    for (std::size_t ai = 0; ai < src.arc_count(); ++ai) {
        const auto& a = src.arc(ai);
        auto iu = partial.find(a.u);
        auto iv = partial.find(a.v);
        if (iu == partial.end() || iv == partial.end()) continue;
        const Length d = distance(dst, iu->second, iv->second);
        if (!d || *d > a.length) out.push_back({ai, iu->second, iv->second, a.length, d});
    }
    return out;
}

std::vector<std::size_t> orbit_representatives(std::size_t node_count,
                                               const std::vector<std::vector<std::size_t>>& generators) {
    std::vector<std::size_t> parent(node_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& g : generators) {
        if (g.size() != node_count) throw Error(ErrorCode::invalid_argument, "automorphism has the wrong size");
        for (std::size_t n = 0; n < node_count; ++n) {
            const std::size_t a = find(n);
            const std::size_t b = find(g[n]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::size_t> reps;
    for (std::size_t n = 0; n < node_count; ++n)
        if (find(n) == n) reps.push_back(n);
    return reps;
}

std::string certificate_json(const Certificate& cert, const MetricGraph& src, const MetricGraph& dst) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::object();
    for (std::size_t n = 0; n < cert.node_map.size(); ++n) j["nodes"][src.name(n)] = dst.name(cert.node_map[n]);
    j["arcs"] = nlohmann::ordered_json::array();
    for (std::size_t ai = 0; ai < cert.arc_paths.size(); ++ai)
        j["arcs"].push_back({{"arc", arc_name(src, ai)},
                             {"length", src.arc(ai).length.fraction()},
                             {"path", path_text(dst, cert.node_map[src.arc(ai).u], cert.arc_paths[ai])}});
    return j.dump();
}

namespace {

nlohmann::ordered_json trace_to_json(const TraceNode& t) {
    nlohmann::ordered_json j;
    j["assignment"] = t.assignment;
    if (t.pruned) {
        j["pruned"] = to_string(*t.pruned);
        j["detail"] = t.detail;
    } else if (t.success) {
        j["success"] = true;
    }
    if (!t.children.empty()) {
        j["children"] = nlohmann::ordered_json::array();
        for (const auto& c : t.children) j["children"].push_back(trace_to_json(c));
    }
    return j;
}

}  // namespace

std::string trace_json(const TraceNode& trace) {
    return trace_to_json(trace).dump(1);
}

}  // namespace ggt::embed
