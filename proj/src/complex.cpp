#include "ggt/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

TriComplex::Builder& TriComplex::Builder::vertex(const std::string& name) {
    vertices_.push_back(name);
    return *this;
}

TriComplex::Builder& TriComplex::Builder::edge(const std::string& label, const std::string& from, const std::string& to) {
    edges_.push_back({label, from, to});
    return *this;
}

TriComplex::Builder& TriComplex::Builder::triangle(const std::array<DirectedEdge, 3>& boundary,
                                                   const std::array<Angle, 3>& angles) {
    triangles_.push_back({boundary, angles});
    return *this;
}

namespace {

bool valid_token(const std::string& s) {
    return !s.empty() && s.find_first_of(" \t\r\n") == std::string::npos;
}

}  // namespace

TriComplex TriComplex::Builder::build() const {
    TriComplex c;
    std::set<std::string> names;
    for (const auto& v : vertices_) {
        if (!valid_token(v)) throw Error(ErrorCode::invalid_argument, "bad vertex name '" + v + "'");
        if (!names.insert(v).second) throw Error(ErrorCode::invalid_argument, "duplicate vertex '" + v + "'");
    }
    std::set<std::string> labels;
    for (const auto& e : edges_) {
        // labels become link node names with a trailing sign
        if (!valid_token(e.label) || e.label.back() == '+' || e.label.back() == '-')
            throw Error(ErrorCode::invalid_argument, "bad edge label '" + e.label + "'");
        if (!labels.insert(e.label).second) throw Error(ErrorCode::invalid_argument, "duplicate edge '" + e.label + "'");
        if (!names.count(e.from) || !names.count(e.to))
            throw Error(ErrorCode::unknown_name, "edge '" + e.label + "' has an unknown endpoint");
    }
    c.vertices_ = vertices_;
    c.edges_ = edges_;
    for (const auto& t : triangles_) {
        Angle sum;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& d = t.boundary[i];
            if (d.sign != 1 && d.sign != -1) throw Error(ErrorCode::invalid_argument, "edge sign must be +-1");
            if (!labels.count(d.label)) throw Error(ErrorCode::unknown_name, "triangle uses unknown edge '" + d.label + "'");
            if (!t.angles[i].is_positive()) throw Error(ErrorCode::invalid_argument, "triangle corner angle must be positive");
            sum += t.angles[i];
        }
        if (sum != Angle::pi())
            throw Error(ErrorCode::invalid_argument, "triangle angles sum to " + sum.str() + " pi, not pi");
        for (std::size_t i = 0; i < 3; ++i)
            if (c.end(t.boundary[i]) != c.start(t.boundary[(i + 1) % 3]))
                throw Error(ErrorCode::invalid_argument, "triangle boundary does not close at " + t.boundary[i].str());
    }
    c.triangles_ = triangles_;
    return c;
}

const Edge& TriComplex::edge(std::string_view label) const {
    for (const auto& e : edges_)
        if (e.label == label) return e;
    throw Error(ErrorCode::unknown_name, "unknown edge '" + std::string(label) + "'");
}

bool TriComplex::has_edge(std::string_view label) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.label == label; });
}

bool TriComplex::has_vertex(std::string_view name) const {
    return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

const std::string& TriComplex::start(const DirectedEdge& e) const {
    const Edge& edge = this->edge(e.label);
    return e.sign > 0 ? edge.from : edge.to;
}

const std::string& TriComplex::end(const DirectedEdge& e) const {
    const Edge& edge = this->edge(e.label);
    return e.sign > 0 ? edge.to : edge.from;
}

long TriComplex::euler_characteristic() const {
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) + static_cast<long>(triangles_.size());
}

TriComplex brady_equilateral(const std::string& u, const std::string& v, const std::string& w, const std::string& t) {
    const std::set<std::string> distinct{u, v, w, t};
    if (distinct.size() != 4) throw Error(ErrorCode::invalid_argument, "brady_equilateral needs four distinct labels");
    const Angle third(1, 3);
    const std::array<Angle, 3> equilateral{third, third, third};
    TriComplex::Builder b;
    b.vertex("o");
    for (const auto& label : {u, v, w, t}) b.edge(label, "o", "o");
    b.triangle({DirectedEdge{u, 1}, DirectedEdge{v, 1}, DirectedEdge{t, -1}}, equilateral);
    b.triangle({DirectedEdge{v, 1}, DirectedEdge{w, 1}, DirectedEdge{t, -1}}, equilateral);
    b.triangle({DirectedEdge{w, 1}, DirectedEdge{u, 1}, DirectedEdge{t, -1}}, equilateral);
    return b.build();
}

TriComplex glue(const std::vector<TriComplex>& complexes, const std::vector<EdgeIdentification>& identifications) {
    // union-find over (complex, edge index) and over (complex, vertex index)
    std::vector<std::size_t> edge_offset{0};
    std::vector<std::size_t> vertex_offset{0};
    for (const auto& c : complexes) {
        edge_offset.push_back(edge_offset.back() + c.edges().size());
        vertex_offset.push_back(vertex_offset.back() + c.vertices().size());
    }
    std::vector<std::size_t> edge_parent(edge_offset.back());
    std::vector<std::size_t> vertex_parent(vertex_offset.back());
    std::iota(edge_parent.begin(), edge_parent.end(), 0);
    std::iota(vertex_parent.begin(), vertex_parent.end(), 0);
    auto find = [](std::vector<std::size_t>& parent, std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
        a = find(parent, a);
        b = find(parent, b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    auto edge_id = [&](std::size_t ci, const std::string& label) {
        if (ci >= complexes.size()) throw Error(ErrorCode::invalid_argument, "identification names a missing complex");
        const auto& edges = complexes[ci].edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].label == label) return edge_offset[ci] + i;
        throw Error(ErrorCode::unknown_name, "complex " + std::to_string(ci) + " has no edge '" + label + "'");
    };
    auto vertex_id = [&](std::size_t ci, const std::string& name) {
        const auto& vs = complexes[ci].vertices();
        return vertex_offset[ci] + static_cast<std::size_t>(std::find(vs.begin(), vs.end(), name) - vs.begin());
    };

    for (const auto& id : identifications) {
        if (id.lhs_label != id.rhs_label)
            throw Error(ErrorCode::invalid_argument, "cannot identify edges with different labels '" + id.lhs_label +
                                                         "' and '" + id.rhs_label + "'");
        const std::size_t l = edge_id(id.lhs_complex, id.lhs_label);
        const std::size_t r = edge_id(id.rhs_complex, id.rhs_label);
        const Edge& le = complexes[id.lhs_complex].edge(id.lhs_label);
        const Edge& re = complexes[id.rhs_complex].edge(id.rhs_label);
        if (le.from != le.to || re.from != re.to)
            throw Error(ErrorCode::invalid_argument, "identified edge '" + id.lhs_label + "' is not a loop");
        unite(edge_parent, l, r);
        unite(vertex_parent, vertex_id(id.lhs_complex, le.from), vertex_id(id.rhs_complex, re.from));
    }

    // name every vertex class by its first member; disambiguate clashes
    std::map<std::size_t, std::string> class_name;
    std::set<std::string> used;
    TriComplex::Builder b;
    for (std::size_t ci = 0; ci < complexes.size(); ++ci) {
        for (const auto& v : complexes[ci].vertices()) {
            const std::size_t root = find(vertex_parent, vertex_id(ci, v));
            if (class_name.count(root)) continue;
            std::string name = v;
            if (used.count(name)) name = v + "#" + std::to_string(ci);
            used.insert(name);
            class_name[root] = name;
            b.vertex(name);
        }
    }
    auto vertex_name = [&](std::size_t ci, const std::string& v) { return class_name.at(find(vertex_parent, vertex_id(ci, v))); };

    std::set<std::size_t> emitted;
    std::set<std::string> labels;
    for (std::size_t ci = 0; ci < complexes.size(); ++ci) {
        for (std::size_t i = 0; i < complexes[ci].edges().size(); ++i) {
            const std::size_t root = find(edge_parent, edge_offset[ci] + i);
            if (!emitted.insert(root).second) continue;
            const Edge& e = complexes[ci].edges()[i];
            if (!labels.insert(e.label).second)
                throw Error(ErrorCode::invalid_argument, "label '" + e.label + "' occurs in two complexes without identification");
            b.edge(e.label, vertex_name(ci, e.from), vertex_name(ci, e.to));
        }
        for (const auto& t : complexes[ci].triangles()) b.triangle(t.boundary, t.angles);
    }
    return b.build();
}

TriComplex ybar1() {
    return brady_equilateral("a", "e", "b1", "t1");
}

TriComplex x1bar() {
    const std::string hat(kHatB);
    return glue({brady_equilateral("a", "e", "b1", "t1"), brady_equilateral("e", hat, "b2", "t2"),
                 brady_equilateral(hat, "a", "b3", "t3")},
                {{0, "e", 1, "e"}, {1, hat, 2, hat}, {2, "a", 0, "a"}});
}

TriComplex complex_fixture(std::string_view name) {
    if (name == "ybar1") return ybar1();
    if (name == "x1bar") return x1bar();
    throw Error(ErrorCode::unknown_name, "unknown complex fixture '" + std::string(name) + "'");
}

namespace {

std::string outgoing(const DirectedEdge& e) {
    return e.label + (e.sign > 0 ? "+" : "-");
}

std::string incoming(const DirectedEdge& e) {
    return e.label + (e.sign > 0 ? "-" : "+");
}

}  // namespace

MetricGraph vertex_link(const TriComplex& c, const std::string& vertex) {
    if (!c.has_vertex(vertex)) throw Error(ErrorCode::unknown_name, "unknown vertex '" + vertex + "'");
    MetricGraph g;
    for (const auto& e : c.edges()) {
        if (e.from == vertex) g.add_node(e.label + "+");
        if (e.to == vertex) g.add_node(e.label + "-");
    }
    for (const auto& t : c.triangles()) {
        for (std::size_t i = 0; i < 3; ++i) {
            const DirectedEdge& in = t.boundary[(i + 2) % 3];
            const DirectedEdge& out = t.boundary[i];
            if (c.start(out) != vertex) continue;
            g.add_arc(incoming(in), outgoing(out), t.angles[i]);
        }
    }
    return g;
}

LinkConditionReport check_link_condition(const TriComplex& c) {
    LinkConditionReport report;
    report.pass = true;
    for (const auto& v : c.vertices()) {
        VertexLinkCheck check;
        check.vertex = v;
        check.girth = girth(vertex_link(c, v));
        check.pass = !check.girth || *check.girth >= Angle(2);
        report.pass = report.pass && check.pass;
        report.vertices.push_back(check);
    }
    return report;
}

namespace {

// Canonical key of a triangle up to rotation and reversal of its boundary.
std::string triangle_key(const Triangle& t) {
    std::vector<std::string> variants;
    for (int rev = 0; rev < 2; ++rev) {
        std::array<DirectedEdge, 3> b = t.boundary;
        std::array<Angle, 3> a = t.angles;
        if (rev) {
            b = {t.boundary[2].reversed(), t.boundary[1].reversed(), t.boundary[0].reversed()};
            a = {t.angles[0], t.angles[2], t.angles[1]};
        }
        for (std::size_t r = 0; r < 3; ++r) {
            std::string key;
            for (std::size_t i = 0; i < 3; ++i) {
                const std::size_t k = (i + r) % 3;
                key += b[k].str() + "@" + a[k].fraction() + " ";
            }
            variants.push_back(key);
        }
    }
    return *std::min_element(variants.begin(), variants.end());
}

}  // namespace

RelabelResult relabel_check(const TriComplex& c, const std::map<std::string, std::string>& sigma) {
    RelabelResult result;
    std::map<std::string, std::string> full;
    std::set<std::string> images;
    for (const auto& e : c.edges()) {
        auto it = sigma.find(e.label);
        const std::string image = it == sigma.end() ? e.label : it->second;
        if (!c.has_edge(image)) {
            result.reason = "label '" + image + "' is not an edge";
            return result;
        }
        full[e.label] = image;
        images.insert(image);
    }
    for (const auto& [from, to] : sigma) {
        if (!full.count(from)) {
            result.reason = "relabeling mentions unknown label '" + from + "'";
            return result;
        }
    }
    if (images.size() != full.size()) {
        result.reason = "relabeling is not a bijection on labels";
        return result;
    }

    // permutation order
    result.order = 1;
    for (const auto& [start, ignored] : full) {
        int len = 1;
        for (std::string l = full[start]; l != start; l = full[l]) ++len;
        result.order = std::lcm(result.order, len);
    }

    // the induced vertex map must be well defined and injective
    std::map<std::string, std::string> vmap;
    auto bind = [&](const std::string& from, const std::string& to) {
        auto [it, fresh] = vmap.emplace(from, to);
        return fresh || it->second == to;
    };
    for (const auto& e : c.edges()) {
        const Edge& image = c.edge(full[e.label]);
        if (!bind(e.from, image.from) || !bind(e.to, image.to)) {
            result.reason = "edge '" + e.label + "' and its image have incompatible endpoints";
            return result;
        }
    }
    std::set<std::string> vimages;
    for (const auto& [v, w] : vmap) vimages.insert(w);
    if (vimages.size() != vmap.size()) {
        result.reason = "induced vertex map is not injective";
        return result;
    }

    std::multiset<std::string> original;
    std::multiset<std::string> mapped;
    for (const auto& t : c.triangles()) {
        original.insert(triangle_key(t));
        Triangle image = t;
        for (auto& d : image.boundary) d.label = full[d.label];
        mapped.insert(triangle_key(image));
    }
    if (original != mapped) {
        for (const auto& key : mapped) {
            if (!original.count(key)) {
                result.reason = "image triangle " + key + "is not in the complex";
                break;
            }
        }
        if (result.reason.empty()) result.reason = "triangle multiplicities differ";
        return result;
    }
    result.symmetry = true;
    return result;
}

std::map<std::string, std::string> y_relabeling() {
    const std::string hat(kHatB);
    return {{"a", "e"},   {"e", hat},    {hat, "a"},    {"b1", "b2"}, {"b2", "b3"},
            {"b3", "b1"}, {"t1", "t2"}, {"t2", "t3"}, {"t3", "t1"}};
}

std::vector<std::size_t> induced_link_map(const MetricGraph& link, const std::map<std::string, std::string>& sigma) {
    std::vector<std::size_t> out(link.node_count());
    for (std::size_t n = 0; n < link.node_count(); ++n) {
        const std::string& name = link.name(n);
        const std::string label = name.substr(0, name.size() - 1);
        auto it = sigma.find(label);
        out[n] = link.node((it == sigma.end() ? label : it->second) + name.back());
    }
    return out;
}

std::string to_text(const TriComplex& c) {
    std::ostringstream out;
    for (const auto& v : c.vertices()) out << "vertex " << v << "\n";
    for (const auto& e : c.edges()) out << "edge " << e.label << " " << e.from << " " << e.to << "\n";
    for (const auto& t : c.triangles()) {
        out << "triangle";
        for (const auto& d : t.boundary) out << " " << d.str();
        for (const auto& a : t.angles) out << " " << a.fraction();
        out << "\n";
    }
    return out.str();
}

TriComplex parse_complex(std::string_view text) {
    TriComplex::Builder b;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto directed = [&](const std::string& token) {
        if (token.size() < 2 || (token.back() != '+' && token.back() != '-'))
            throw Error(ErrorCode::parse, "complex line " + std::to_string(lineno) + ": expected <label>+ or <label>-, got '" +
                                              token + "'");
        return DirectedEdge{token.substr(0, token.size() - 1), token.back() == '+' ? 1 : -1};
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword, extra;
        if (!(fields >> keyword)) continue;
        const std::string where = "complex line " + std::to_string(lineno) + ": ";
        if (keyword == "vertex") {
            std::string name;
            if (!(fields >> name) || (fields >> extra)) throw Error(ErrorCode::parse, where + "expected 'vertex <name>'");
            b.vertex(name);
        } else if (keyword == "edge") {
            std::string label, from, to;
            if (!(fields >> label >> from >> to) || (fields >> extra))
                throw Error(ErrorCode::parse, where + "expected 'edge <label> <from> <to>'");
            b.edge(label, from, to);
        } else if (keyword == "triangle") {
            std::array<std::string, 6> tok;
            for (auto& s : tok)
                if (!(fields >> s)) throw Error(ErrorCode::parse, where + "triangle needs three edges and three angles");
            if (fields >> extra) throw Error(ErrorCode::parse, where + "trailing tokens");
            std::array<Angle, 3> angles;
            try {
                for (std::size_t i = 0; i < 3; ++i) angles[i] = Angle::parse(tok[i + 3]);
            } catch (const std::exception& e) {
                throw Error(ErrorCode::parse, where + e.what());
            }
            b.triangle({directed(tok[0]), directed(tok[1]), directed(tok[2])}, angles);
        } else {
            throw Error(ErrorCode::parse, where + "unknown keyword '" + keyword + "'");
        }
    }
    return b.build();
}

}  // namespace ggt
