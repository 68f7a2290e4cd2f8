#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/angle.hpp"

namespace ggt {

/// Finite multigraph whose arc lengths are exact rational multiples of pi.
/// Parallel arcs and self-loops are allowed.
class MetricGraph {
public:
    struct Arc {
        std::size_t u = 0;
        std::size_t v = 0;
        Angle length;
    };

    std::size_t add_node(const std::string& name);
    std::size_t add_arc(std::size_t u, std::size_t v, const Angle& length);
    std::size_t add_arc(const std::string& u, const std::string& v, const Angle& length);

    std::size_t node_count() const { return names_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::string& name(std::size_t node) const { return names_.at(node); }
    const std::vector<std::string>& names() const { return names_; }
    const Arc& arc(std::size_t index) const { return arcs_.at(index); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::size_t node(std::string_view name) const;  // throws unknown_name
    bool has_node(std::string_view name) const;

    /// Arc-ends at the node; a self-loop counts twice.
    std::size_t degree(std::size_t node) const;
    /// Indices of arcs touching the node, a self-loop listed once.
    const std::vector<std::size_t>& incident(std::size_t node) const { return incident_.at(node); }

    Angle total_length() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Length of the shortest cycle, by deleting each arc in turn and adding its
/// length to the shortest path between its ends. nullopt for a forest.
Length girth(const MetricGraph& g);
/// Same quantity by exhaustive enumeration of simple cycles; meant as an
/// independent cross-check on small graphs.
Length girth_exhaustive(const MetricGraph& g);

/// Exact shortest-path length (Dijkstra); nullopt if disconnected.
Length distance(const MetricGraph& g, std::size_t from, std::size_t to);
std::vector<std::vector<Length>> all_pairs_distances(const MetricGraph& g);

struct SmoothedGraph {
    MetricGraph graph;
    std::vector<std::size_t> node_origin;  // new node -> original node
    /// new arc -> original arcs in order from its u to its v; `forward` says
    /// whether the original arc is traversed from its u to its v.
    struct Step {
        std::size_t arc;
        bool forward;
    };
    std::vector<std::vector<Step>> arc_origin;
};

/// Suppresses every degree-2 node (other than the base of a lone self-loop),
/// merging its two arcs. The underlying metric space is unchanged.
SmoothedGraph smooth_traced(const MetricGraph& g);
MetricGraph smooth(const MetricGraph& g);

/// Vertex link of the Brady complex, smoothed: nodes v1..v8 on a cycle of
/// arcs pi/3 and chords (vk, vk+4) of length 2pi/3.
MetricGraph brady_link();

/// node_map[i] = image of node i. True iff the map is a bijection carrying the
/// multiset of (endpoints, length) arcs onto itself.
bool is_automorphism(const MetricGraph& g, const std::vector<std::size_t>& node_map);
/// Node map given by names; missing names map to themselves.
std::vector<std::size_t> node_map_from_names(const MetricGraph& g, const std::map<std::string, std::string>& names);

/// Proper 2-colouring exists (no odd cycle counted in arcs).
bool is_bipartite(const MetricGraph& g);

/// `node <name>` / `arc <u> <v> <p>/<q>` lines.
std::string to_text(const MetricGraph& g);
MetricGraph parse_graph(std::string_view text);
/// Graphviz export, lengths as labels in units of pi.
std::string to_dot(const MetricGraph& g, std::string_view title = "G");
/// {"nodes": [...], "arcs": [{"u","v","length"}]}
std::string to_json(const MetricGraph& g);

}  // namespace ggt
