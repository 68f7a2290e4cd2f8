#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/angle.hpp"
#include "ggt/metric_graph.hpp"

namespace ggt {

/// Edge traversed along (+1) or against (-1) its orientation.
struct DirectedEdge {
    std::string label;
    int sign = 1;

    /// "a+" / "a-"
    std::string str() const { return label + (sign > 0 ? "+" : "-"); }
    DirectedEdge reversed() const { return {label, -sign}; }
    bool operator==(const DirectedEdge&) const = default;
};

/// Triangle given by its closed boundary path. angles[i] is the corner at the
/// start vertex of boundary[i], between boundary[i-1] and boundary[i].
struct Triangle {
    std::array<DirectedEdge, 3> boundary;
    std::array<Angle, 3> angles;
};

struct Edge {
    std::string label;
    std::string from;
    std::string to;
};

/// Piecewise-Euclidean triangle complex with exact corner angles.
/// Immutable once built; the builder validates every invariant.
class TriComplex {
public:
    class Builder {
    public:
        Builder& vertex(const std::string& name);
        Builder& edge(const std::string& label, const std::string& from, const std::string& to);
        Builder& triangle(const std::array<DirectedEdge, 3>& boundary, const std::array<Angle, 3>& angles);
        TriComplex build() const;

    private:
        std::vector<std::string> vertices_;
        std::vector<Edge> edges_;
        std::vector<Triangle> triangles_;
    };

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    const Edge& edge(std::string_view label) const;
    bool has_edge(std::string_view label) const;
    bool has_vertex(std::string_view name) const;

    /// Vertex where a directed edge starts / ends.
    const std::string& start(const DirectedEdge& e) const;
    const std::string& end(const DirectedEdge& e) const;

    long euler_characteristic() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
};

/// One vertex; loops u, v, w, t; equilateral triangles [u v t^-1],
/// [v w t^-1], [w u t^-1]; realizes <u,v,w | uv = vw = wu>.
TriComplex brady_equilateral(const std::string& u, const std::string& v, const std::string& w,
                             const std::string& t = "t");

struct EdgeIdentification {
    std::size_t lhs_complex = 0;
    std::string lhs_label;
    std::size_t rhs_complex = 0;
    std::string rhs_label;
};

/// Pushout of the complexes along identified loop edges (and hence their
/// base vertices). Labels must agree pairwise and be unique otherwise.
TriComplex glue(const std::vector<TriComplex>& complexes, const std::vector<EdgeIdentification>& identifications);

/// Label of the hat-b loop in the complex fixtures.
inline constexpr std::string_view kHatB = "B^";

/// B(a,e,b1) at theta = pi/3.
TriComplex ybar1();
/// Three copies B(a,e,b1), B(e,B^,b2), B(B^,a,b3) glued along a, e, B^.
TriComplex x1bar();
/// "ybar1" or "x1bar"
TriComplex complex_fixture(std::string_view name);

/// Nodes are edge-ends at v (`g+` where g starts, `g-` where it ends); each
/// triangle corner at v is an arc of length equal to its angle.
MetricGraph vertex_link(const TriComplex& c, const std::string& vertex);

struct VertexLinkCheck {
    std::string vertex;
    Length girth;
    bool pass = false;  // girth >= 2 pi (a forest passes)
};

struct LinkConditionReport {
    std::vector<VertexLinkCheck> vertices;
    bool pass = false;
};

LinkConditionReport check_link_condition(const TriComplex& c);

struct RelabelResult {
    bool symmetry = false;
    int order = 0;  // order of the label permutation
    std::string reason;
};

/// Does the label permutation carry the triangle multiset onto itself, with
/// boundary words compared up to rotation and reversal and a consistent
/// vertex map?
RelabelResult relabel_check(const TriComplex& c, const std::map<std::string, std::string>& sigma);

/// (a e B^)(b1 b2 b3)(t1 t2 t3)
std::map<std::string, std::string> y_relabeling();

/// Node map on the link induced by a label permutation: g+- -> sigma(g)+-.
std::vector<std::size_t> induced_link_map(const MetricGraph& link, const std::map<std::string, std::string>& sigma);

/// `vertex <name>`, `edge <label> <from> <to>`,
/// `triangle <e1+-> <e2+-> <e3+-> <p/q> <p/q> <p/q>`.
std::string to_text(const TriComplex& c);
TriComplex parse_complex(std::string_view text);

}  // namespace ggt
