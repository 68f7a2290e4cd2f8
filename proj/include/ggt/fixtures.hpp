#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ggt/metric_graph.hpp"

namespace ggt {

/// Named graphs: brady-link, x1bar-link, x1bar-link-smoothed, ybar1-link,
/// ybar1-link-smoothed.
MetricGraph graph_fixture(std::string_view name);
const std::vector<std::string>& graph_fixture_names();
bool is_graph_fixture(std::string_view name);

/// Automorphism of a link (raw or smoothed) induced by the y-relabeling.
std::vector<std::size_t> y_link_automorphism(const MetricGraph& link);

}  // namespace ggt
