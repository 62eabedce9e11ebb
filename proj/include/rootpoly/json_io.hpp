#pragma once

#include <string>

#include "json.hpp"
#include "rootpoly/hstar.hpp"

namespace rootpoly {

// {"vertices": n, "edges": [[tail, head], ...]}, 0-based; edge ids are the
// positions in the list.
Digraph digraph_from_json(const nlohmann::json& j);
Digraph digraph_from_file(const std::string& path);
nlohmann::json digraph_to_json(const Digraph& d);

nlohmann::json polynomial_to_json(const Polynomial& p);

nlohmann::json report_to_json(const Digraph& d, const MonotonicityReport& rep);

nlohmann::json polytope_to_json(const LatticePolytope& p);

}  // namespace rootpoly
