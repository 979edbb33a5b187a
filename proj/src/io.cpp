#include "houghton/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace houghton {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what); }

Int get_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) parse_fail(ctx + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    parse_fail(ctx + ": integer out of range");
  return j.get<Int>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<Int> int_list(const Json& j, std::size_t len, const std::string& ctx) {
  if (!j.is_array() || j.size() != len) parse_fail(ctx + ": expected a list of " + std::to_string(len) + " integers");
  std::vector<Int> v;
  for (const auto& e : j) v.push_back(get_int(e, ctx));
  return v;
}

int quadrant_of(Int q, int n, const std::string& ctx) {
  if (q < 1 || q > n) parse_fail(ctx + ": quadrant out of range");
  return static_cast<int>(q);
}

}  // namespace

Json to_json(const Point& p) { return Json::array({p.x, p.y, p.quadrant}); }

Point point_from_json(const Json& j) {
  auto v = int_list(j, 3, "point");
  if (v[2] < 1 || v[2] > 255) parse_fail("point: quadrant out of range");
  return {v[0], v[1], static_cast<int>(v[2])};
}

Point parse_point(const std::string& text) {
  static const std::regex num(R"(-?\d+)");
  std::vector<Int> v;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it) {
    try {
      v.push_back(std::stoll(it->str()));
    } catch (const std::exception&) {
      parse_fail("point: integer out of range");
    }
  }
  if (v.size() != 3) parse_fail("point \"" + text + "\": expected x, y and quadrant");
  if (v[0] < 1 || v[1] < 1 || v[2] < 1) parse_fail("point \"" + text + "\" is off the lattice");
  return {v[0], v[1], static_cast<int>(v[2])};
}

Json to_json(const GenMap& g) {
  Json j;
  j["n"] = g.n;
  j["x0"] = g.x0;
  j["y0"] = g.y0;
  j["m"] = Json::array();
  for (const auto& s : g.m) j["m"].push_back({s.first, s.second});
  j["colmap"] = Json::array();
  j["rowmap"] = Json::array();
  j["rect"] = Json::array();
  for (int i = 1; i <= g.n; ++i) {
    for (Int x = 1; x < g.x0; ++x) {
      const ColEntry& c = g.col(x, i);
      Json e;
      e["from"] = {x, i};
      e["to"] = {c.x, c.quadrant};
      e["shift"] = c.shift;
      j["colmap"].push_back(e);
    }
    for (Int y = 1; y < g.y0; ++y) {
      const RowEntry& r = g.row(y, i);
      Json e;
      e["from"] = {y, i};
      e["to"] = {r.y, r.quadrant};
      e["shift"] = r.shift;
      j["rowmap"].push_back(e);
    }
    for (Int x = 1; x < g.x0; ++x)
      for (Int y = 1; y < g.y0; ++y) {
        Json e;
        e["from"] = to_json(Point{x, y, i});
        e["to"] = to_json(g.corner(x, y, i));
        j["rect"].push_back(e);
      }
  }
  return j;
}

GenMap genmap_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("element: expected an object");
  GenMap g;
  Int n = get_int(field(j, "n"), "n");
  if (n < 1 || n > 255) parse_fail("n out of range");
  g.n = static_cast<int>(n);
  g.x0 = get_int(field(j, "x0"), "x0");
  g.y0 = get_int(field(j, "y0"), "y0");
  if (g.x0 < 1 || g.y0 < 1) parse_fail("thresholds must be >= 1");
  if (g.x0 > 100000 || g.y0 > 100000 || (g.x0 - 1) * (g.y0 - 1) * n > 50'000'000)
    parse_fail("thresholds too large for an explicit table");
  const Json& m = field(j, "m");
  if (!m.is_array() || m.size() != static_cast<std::size_t>(n)) parse_fail("m: expected n pairs");
  for (const auto& e : m) {
    auto v = int_list(e, 2, "m");
    g.m.push_back({v[0], v[1]});
  }
  g.colmap.assign(n, std::vector<ColEntry>(g.x0 - 1));
  g.rowmap.assign(n, std::vector<RowEntry>(g.y0 - 1));
  g.rect.assign(n, std::vector<Point>((g.x0 - 1) * (g.y0 - 1)));
  std::vector<std::vector<bool>> seen_c(n, std::vector<bool>(g.x0 - 1, false));
  std::vector<std::vector<bool>> seen_r(n, std::vector<bool>(g.y0 - 1, false));
  std::vector<std::vector<bool>> seen_p(n, std::vector<bool>((g.x0 - 1) * (g.y0 - 1), false));

  const Json& cm = field(j, "colmap");
  if (!cm.is_array()) parse_fail("colmap: expected a list");
  for (const auto& e : cm) {
    auto from = int_list(field(e, "from"), 2, "colmap.from");
    auto to = int_list(field(e, "to"), 2, "colmap.to");
    Int shift = get_int(field(e, "shift"), "colmap.shift");
    int i = quadrant_of(from[1], g.n, "colmap.from");
    if (from[0] < 1 || from[0] >= g.x0) parse_fail("colmap.from: column not below x0");
    if (seen_c[i - 1][from[0] - 1]) parse_fail("colmap: duplicate entry");
    seen_c[i - 1][from[0] - 1] = true;
    g.colmap[i - 1][from[0] - 1] = {to[0], quadrant_of(to[1], g.n, "colmap.to"), shift};
  }
  const Json& rm = field(j, "rowmap");
  if (!rm.is_array()) parse_fail("rowmap: expected a list");
  for (const auto& e : rm) {
    auto from = int_list(field(e, "from"), 2, "rowmap.from");
    auto to = int_list(field(e, "to"), 2, "rowmap.to");
    Int shift = get_int(field(e, "shift"), "rowmap.shift");
    int i = quadrant_of(from[1], g.n, "rowmap.from");
    if (from[0] < 1 || from[0] >= g.y0) parse_fail("rowmap.from: row not below y0");
    if (seen_r[i - 1][from[0] - 1]) parse_fail("rowmap: duplicate entry");
    seen_r[i - 1][from[0] - 1] = true;
    g.rowmap[i - 1][from[0] - 1] = {to[0], quadrant_of(to[1], g.n, "rowmap.to"), shift};
  }
  const Json& rc = field(j, "rect");
  if (!rc.is_array()) parse_fail("rect: expected a list");
  for (const auto& e : rc) {
    Point from = point_from_json(field(e, "from"));
    Point to = point_from_json(field(e, "to"));
    int i = quadrant_of(from.quadrant, g.n, "rect.from");
    quadrant_of(to.quadrant, g.n, "rect.to");
    if (from.x < 1 || from.x >= g.x0 || from.y < 1 || from.y >= g.y0) parse_fail("rect.from: point not below p0");
    std::size_t k = (from.x - 1) * (g.y0 - 1) + (from.y - 1);
    if (seen_p[i - 1][k]) parse_fail("rect: duplicate entry");
    seen_p[i - 1][k] = true;
    g.rect[i - 1][k] = to;
  }
  for (int i = 0; i < g.n; ++i) {
    for (bool b : seen_c[i])
      if (!b) parse_fail("colmap is not total below x0");
    for (bool b : seen_r[i])
      if (!b) parse_fail("rowmap is not total below y0");
    for (bool b : seen_p[i])
      if (!b) parse_fail("rect is not total below p0");
  }
  return g;
}

Json to_json(const RegionDecomposition& r) {
  Json j;
  j["vrays"] = Json::array();
  for (const auto& v : r.vrays) j["vrays"].push_back({{"carrier_x", v.carrier_x}, {"quadrant", v.quadrant}, {"start_y", v.start_y}});
  j["hrays"] = Json::array();
  for (const auto& h : r.hrays) j["hrays"].push_back({{"carrier_y", h.carrier_y}, {"quadrant", h.quadrant}, {"start_x", h.start_x}});
  j["finite_part"] = Json::array();
  for (const auto& p : r.finite_part) j["finite_part"].push_back(to_json(p));
  return j;
}

RegionDecomposition region_from_json(const Json& j) {
  RawPieces raw;
  for (const auto& v : field(j, "vrays"))
    raw.vrays.push_back({get_int(field(v, "carrier_x"), "carrier_x"),
                         static_cast<int>(get_int(field(v, "quadrant"), "quadrant")),
                         get_int(field(v, "start_y"), "start_y")});
  for (const auto& h : field(j, "hrays"))
    raw.hrays.push_back({get_int(field(h, "carrier_y"), "carrier_y"),
                         static_cast<int>(get_int(field(h, "quadrant"), "quadrant")),
                         get_int(field(h, "start_x"), "start_x")});
  for (const auto& p : field(j, "finite_part")) raw.points.push_back(point_from_json(p));
  return canonicalize(raw);
}

Json to_json(const HoughtonMap& h) {
  Json j;
  j["n"] = h.n;
  j["x0"] = h.x0;
  j["m"] = h.m;
  j["exceptional"] = Json::array();
  for (int i = 1; i <= h.n; ++i)
    for (Int x = 1; x < h.x0; ++x) {
      RayPoint w = h.exceptional[i - 1][x - 1];
      j["exceptional"].push_back({{"from", {x, i}}, {"to", {w.x, w.ray}}});
    }
  return j;
}

HoughtonMap houghton_from_json(const Json& j) {
  HoughtonMap h;
  Int n = get_int(field(j, "n"), "n");
  if (n < 1 || n > 255) parse_fail("n out of range");
  h.n = static_cast<int>(n);
  h.x0 = get_int(field(j, "x0"), "x0");
  if (h.x0 < 1 || h.x0 > 1000000) parse_fail("x0 out of range");
  h.m = int_list(field(j, "m"), h.n, "m");
  h.exceptional.assign(h.n, std::vector<RayPoint>(h.x0 - 1));
  std::vector<std::vector<bool>> seen(h.n, std::vector<bool>(h.x0 - 1, false));
  for (const auto& e : field(j, "exceptional")) {
    auto from = int_list(field(e, "from"), 2, "exceptional.from");
    auto to = int_list(field(e, "to"), 2, "exceptional.to");
    int i = quadrant_of(from[1], h.n, "exceptional.from");
    if (from[0] < 1 || from[0] >= h.x0) parse_fail("exceptional.from: point not below x0");
    if (seen[i - 1][from[0] - 1]) parse_fail("exceptional: duplicate entry");
    seen[i - 1][from[0] - 1] = true;
    h.exceptional[i - 1][from[0] - 1] = {to[0], quadrant_of(to[1], h.n, "exceptional.to")};
  }
  for (const auto& row : seen)
    for (bool b : row)
      if (!b) parse_fail("exceptional table is not total below x0");
  return h;
}

Json to_json(const MapClass& c) {
  Json j;
  j["is_bijective"] = c.is_bijective;
  j["in_Gtilde"] = c.in_Gtilde;
  j["in_Gn"] = c.in_Gn;
  j["in_M"] = c.in_M;
  j["in_T"] = c.in_T;
  return j;
}

Json to_json(const Translation& t) { return Json{{"exponents", t.exponents}}; }

Json to_json(const ChainCertificate& c) {
  Json j;
  j["length"] = c.length();
  j["steps"] = c.steps;
  j["elements"] = Json::array();
  for (const auto& e : c.elements) j["elements"].push_back(to_json(e));
  return j;
}

Json to_json(const OrbitInvariant& inv) {
  Json j;
  j["grade0"] = inv.grade0;
  j["translation_word"] = Json::array();
  for (const auto& t : inv.translation_word) j["translation_word"].push_back(t.exponents);
  return j;
}

Json to_json(const HomologyProfile& p) {
  Json j;
  j["degrees"] = Json::array();
  for (std::size_t d = 0; d < p.degrees.size(); ++d)
    j["degrees"].push_back({{"dim", d}, {"faces", p.face_counts[d]}, {"betti", p.degrees[d].betti}, {"torsion", p.degrees[d].torsion}});
  j["euler_characteristic"] = p.euler_characteristic();
  return j;
}

Json to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = k.labels;
  j["facets"] = k.facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  SimplicialComplex k;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) parse_fail("vertices: expected a list");
  for (const auto& v : vs) k.labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  const Json& fs = field(j, "facets");
  if (!fs.is_array()) parse_fail("facets: expected a list");
  for (const auto& f : fs) {
    if (!f.is_array()) parse_fail("facet: expected a list");
    Simplex s;
    for (const auto& v : f) {
      Int idx = get_int(v, "facet");
      if (idx < 0 || static_cast<std::size_t>(idx) >= k.labels.size()) parse_fail("facet: vertex index out of range");
      s.push_back(static_cast<int>(idx));
    }
    k.facets.push_back(s);
  }
  return k;
}

ColoredGraph graph_from_json(const Json& j) {
  ColoredGraph g;
  g.n_colors = static_cast<int>(get_int(field(j, "colors"), "colors"));
  for (const auto& v : field(j, "vertices")) {
    g.labels.push_back(field(v, "label").is_string() ? field(v, "label").get<std::string>() : field(v, "label").dump());
    g.color.push_back(static_cast<int>(get_int(field(v, "color"), "color")));
  }
  for (const auto& e : field(j, "edges")) {
    auto ab = int_list(e, 2, "edge");
    g.edges.push_back({static_cast<int>(ab[0]), static_cast<int>(ab[1])});
  }
  try {
    g.check();
  } catch (const Error& e) {
    parse_fail(e.detail());
  }
  return g;
}

FinitePoset poset_from_json(const Json& j) {
  FinitePoset p;
  for (const auto& v : field(j, "elements")) p.labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  for (const auto& e : field(j, "relations")) {
    auto ab = int_list(e, 2, "relation");
    p.relations.push_back({static_cast<int>(ab[0]), static_cast<int>(ab[1])});
  }
  return p;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::PreconditionFailed, "cannot write " + path);
  out << text;
}

}  // namespace houghton
