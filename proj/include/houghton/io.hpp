#pragma once

#include <string>

#include "houghton/complex.hpp"
#include "houghton/genmap.hpp"
#include "houghton/homology.hpp"
#include <json.hpp>
#include "houghton/poset.hpp"

namespace houghton {

using Json = nlohmann::ordered_json;

// Element documents: {"n","x0","y0","m","colmap","rowmap","rect"} in that
// order; points as [x, y, quadrant]. Parsing enforces totality of the tables.
Json to_json(const GenMap& g);
GenMap genmap_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);
// Accepts "((6,5),1)", "6,5,1" or "[6,5,1]".
Point parse_point(const std::string& text);

Json to_json(const RegionDecomposition& r);
RegionDecomposition region_from_json(const Json& j);
Json to_json(const HoughtonMap& h);
// {"n","x0","m","exceptional": [{"from": [x,i], "to": [x',i']}]}
HoughtonMap houghton_from_json(const Json& j);
Json to_json(const MapClass& c);
Json to_json(const Translation& t);
Json to_json(const ChainCertificate& c);
Json to_json(const OrbitInvariant& inv);
Json to_json(const HomologyProfile& p);

// {"vertices": [labels], "facets": [[indices]]}
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);
// {"colors": n, "vertices": [{"label", "color"}], "edges": [[a, b]]}
ColoredGraph graph_from_json(const Json& j);
// {"elements": [labels], "relations": [[a, b]]}, a <= b
FinitePoset poset_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace houghton
