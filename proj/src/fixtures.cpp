#include "ggt/fixtures.hpp"

#include <algorithm>

#include "ggt/complex.hpp"
#include "ggt/error.hpp"

namespace ggt {

const std::vector<std::string>& graph_fixture_names() {
    static const std::vector<std::string> names = {"brady-link", "x1bar-link", "x1bar-link-smoothed", "ybar1-link",
                                                   "ybar1-link-smoothed"};
    return names;
}

bool is_graph_fixture(std::string_view name) {
    const auto& names = graph_fixture_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

MetricGraph graph_fixture(std::string_view name) {
    if (name == "brady-link") return brady_link();
    if (name == "x1bar-link") return vertex_link(x1bar(), "o");
    if (name == "x1bar-link-smoothed") return smooth(vertex_link(x1bar(), "o"));
    if (name == "ybar1-link") return vertex_link(ybar1(), "o");
    if (name == "ybar1-link-smoothed") return smooth(vertex_link(ybar1(), "o"));
    throw Error(ErrorCode::unknown_name, "unknown graph fixture '" + std::string(name) + "'");
}

std::vector<std::size_t> y_link_automorphism(const MetricGraph& link) {
    return induced_link_map(link, y_relabeling());
}

}  // namespace ggt
