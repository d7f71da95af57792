#pragma once

#include <string>

#include <json.hpp>

#include "balrig/complex.hpp"
#include "balrig/errors.hpp"
#include "balrig/graph.hpp"
#include "balrig/order.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/trial.hpp"

namespace balrig::io {

using Json = nlohmann::ordered_json;

// Wire formats use 1-based indices (and 1-based colors for complexes);
// edges and facets are written in sorted order.

Json to_json(const BipartiteGraph& g);
Json to_json(const BalancedComplex& k);
Json to_json(const TrialMeta& meta);
Json to_json(const RigidityReport& r);
Json to_json(const LamanReport& r);
Json to_json(const MatrixIndependence& m);
Json to_json(const HeawoodReport& h);
Json error_json(ErrorKind kind, const std::string& message);

/// Indented JSON with short or scalar-only arrays kept on one line.
std::string dump(const Json& j);

/// Throw InvalidInput on anything malformed.
BipartiteGraph graph_from_json(const nlohmann::json& j);
BalancedComplex complex_from_json(const nlohmann::json& j);
nlohmann::json parse(const std::string& text);
nlohmann::json read_file(const std::string& path);

/// Explicit order: comma-separated tokens. Graph tokens are "3" (A) and
/// "3'" (B); complex tokens are "color:index". All 1-based.
VertexOrder parse_order(const std::string& text, const std::vector<int>& color_sizes);
std::string format_order(const VertexOrder& order);

}  // namespace balrig::io
