#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggt/metric_graph.hpp"

namespace ggt::embed {

/// One target arc of an image path; `forward` = traversed from the arc's u to v.
struct PathStep {
    std::size_t arc = 0;
    bool forward = true;

    bool operator==(const PathStep&) const = default;
    auto operator<=>(const PathStep&) const = default;
};

using ArcPath = std::vector<PathStep>;

/// Witness of a topological, locally isometric embedding: every source node
/// goes to a target node, every source arc (oriented from its u to its v) to
/// a non-backtracking target arc-path of the same length.
struct Certificate {
    std::vector<std::size_t> node_map;
    std::vector<ArcPath> arc_paths;

    bool operator==(const Certificate&) const = default;
    auto operator<=>(const Certificate&) const = default;
};

enum class PruneReason {
    length_mismatch,       // no target path of the required length at all
    injectivity_clash,     // every such path meets an image already placed
    local_isometry_clash,  // directions at an image node already taken, or too few of them
    distance_obstruction,  // images of an arc's ends are farther apart than the arc is long
};

const char* to_string(PruneReason reason);

struct DistanceObstruction {
    std::size_t src_arc = 0;
    std::size_t image_u = 0;
    std::size_t image_v = 0;
    Angle arc_length;
    Length target_distance;
};

struct TraceNode {
    std::string assignment;
    std::vector<TraceNode> children;
    std::optional<PruneReason> pruned;
    std::string detail;
    std::optional<DistanceObstruction> obstruction;
    bool success = false;
};

struct SearchOptions {
    bool all = true;  // false: stop at the first certificate
    bool record_trace = false;
    /// Automorphisms of the target (node maps). When non-empty the first
    /// source node is only tried on orbit representatives.
    std::vector<std::vector<std::size_t>> target_automorphisms;
    /// Source node -> target node assignments imposed up front.
    std::map<std::size_t, std::size_t> pinned;
};

struct SearchStats {
    std::size_t tree_nodes = 0;
    std::map<PruneReason, std::size_t> prunes;
};

struct SearchResult {
    std::vector<Certificate> certificates;  // sorted
    Angle quantum;                           // common length unit
    std::vector<std::size_t> node_order;     // source nodes in assignment order
    std::vector<std::size_t> root_candidates;
    TraceNode trace;  // root; its children are the root cases
    SearchStats stats;
};

/// Exhaustive backtracking search. Every source node must have degree >= 3
/// (smooth the source first). An empty result is a proof that no embedding
/// exists (modulo the supplied automorphisms, which only drop symmetric copies).
SearchResult find_embeddings(const MetricGraph& src, const MetricGraph& dst, const SearchOptions& options = {});

struct Verdict {
    bool ok = false;
    std::string reason;
};

/// Independent checker: lengths, global injectivity, local injectivity of
/// directions at every source node.
Verdict verify_certificate(const Certificate& cert, const MetricGraph& src, const MetricGraph& dst);

/// phi o cert for an automorphism phi of the target.
Certificate apply_automorphism(const Certificate& cert, const MetricGraph& dst, const std::vector<std::size_t>& node_map);

/// Source arcs whose both ends are assigned and whose images are farther apart
/// in the target than the arc is long.
std::vector<DistanceObstruction> distance_obstructions(const MetricGraph& src, const MetricGraph& dst,
                                                       const std::map<std::size_t, std::size_t>& partial);

/// Smallest node of each orbit of the group generated by the maps.
std::vector<std::size_t> orbit_representatives(std::size_t node_count,
                                               const std::vector<std::vector<std::size_t>>& generators);

std::string certificate_json(const Certificate& cert, const MetricGraph& src, const MetricGraph& dst);
std::string trace_json(const TraceNode& trace);

}  // namespace ggt::embed
