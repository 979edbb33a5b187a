#include "houghton/lattice.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

namespace houghton {

bool contains(const RegionDecomposition& region, const Point& p) {
  for (const auto& v : region.vrays)
    if (v.contains(p)) return true;
  for (const auto& h : region.hrays)
    if (h.contains(p)) return true;
  return std::binary_search(region.finite_part.begin(), region.finite_part.end(), p);
}

std::optional<Point> ray_intersection(const VRay& v, const HRay& h) {
  if (v.quadrant != h.quadrant) return std::nullopt;
  if (v.carrier_x < h.start_x || h.carrier_y < v.start_y) return std::nullopt;
  return Point{v.carrier_x, h.carrier_y, v.quadrant};
}

namespace {

bool vray_less(const VRay& a, const VRay& b) {
  return std::tie(a.quadrant, a.carrier_x) < std::tie(b.quadrant, b.carrier_x);
}

bool hray_less(const HRay& a, const HRay& b) {
  return std::tie(a.quadrant, a.carrier_y) < std::tie(b.quadrant, b.carrier_y);
}

}  // namespace

RegionDecomposition canonicalize(const RawPieces& pieces) {
  std::vector<VRay> rv = pieces.vrays;
  std::vector<HRay> rh = pieces.hrays;
  std::sort(rv.begin(), rv.end(), vray_less);
  std::sort(rh.begin(), rh.end(), hray_less);
  for (std::size_t k = 1; k < rv.size(); ++k)
    if (rv[k].quadrant == rv[k - 1].quadrant && rv[k].carrier_x == rv[k - 1].carrier_x)
      fail(ErrorCode::DuplicateCarrier, "two vertical rays on " + to_string(rv[k]));
  for (std::size_t k = 1; k < rh.size(); ++k)
    if (rh[k].quadrant == rh[k - 1].quadrant && rh[k].carrier_y == rh[k - 1].carrier_y)
      fail(ErrorCode::DuplicateCarrier, "two horizontal rays on " + to_string(rh[k]));

  std::unordered_set<Point, PointHash> pts(pieces.points.begin(), pieces.points.end());
  auto in_set = [&](const Point& p) {
    if (pts.count(p)) return true;
    for (const auto& v : rv)
      if (v.contains(p)) return true;
    for (const auto& h : rh)
      if (h.contains(p)) return true;
    return false;
  };

  RegionDecomposition out;
  for (const auto& v : rv) {
    VRay c = v;
    while (c.start_y > 1 && in_set({c.carrier_x, c.start_y - 1, c.quadrant})) --c.start_y;
    out.vrays.push_back(c);
  }
  auto on_vray = [&](const Point& p) {
    for (const auto& v : out.vrays)
      if (v.contains(p)) return true;
    return false;
  };

  std::set<Point> finite;
  for (const auto& h : rh) {
    HRay c = h;
    for (const auto& v : out.vrays)
      if (ray_intersection(v, h)) c.start_x = std::max(c.start_x, add(v.carrier_x, 1));
    // the part of the raw ray cut off by crossing verticals
    for (Int x = h.start_x; x < c.start_x; ++x) {
      Point p{x, h.carrier_y, h.quadrant};
      if (!on_vray(p)) finite.insert(p);
    }
    while (c.start_x > 1) {
      Point p{c.start_x - 1, c.carrier_y, c.quadrant};
      if (!in_set(p) || on_vray(p)) break;
      --c.start_x;
    }
    out.hrays.push_back(c);
  }
  for (const auto& p : pieces.points) finite.insert(p);

  for (const auto& p : finite) {
    bool on_ray = on_vray(p);
    for (const auto& h : out.hrays) on_ray = on_ray || h.contains(p);
    if (!on_ray) out.finite_part.push_back(p);
  }
  return out;
}

std::optional<Point> common_point(const RegionDecomposition& a, const RegionDecomposition& b) {
  for (const auto& u : a.vrays)
    for (const auto& v : b.vrays)
      if (u.quadrant == v.quadrant && u.carrier_x == v.carrier_x)
        return Point{u.carrier_x, std::max(u.start_y, v.start_y), u.quadrant};
  for (const auto& u : a.hrays)
    for (const auto& v : b.hrays)
      if (u.quadrant == v.quadrant && u.carrier_y == v.carrier_y)
        return Point{std::max(u.start_x, v.start_x), u.carrier_y, u.quadrant};
  for (const auto& u : a.vrays)
    for (const auto& h : b.hrays)
      if (auto p = ray_intersection(u, h)) return p;
  for (const auto& h : a.hrays)
    for (const auto& v : b.vrays)
      if (auto p = ray_intersection(v, h)) return p;
  for (const auto& p : a.finite_part)
    if (contains(b, p)) return p;
  for (const auto& p : b.finite_part)
    if (contains(a, p)) return p;
  return std::nullopt;
}

std::string to_string(const Point& p) {
  return "((" + std::to_string(p.x) + "," + std::to_string(p.y) + ")," + std::to_string(p.quadrant) + ")";
}

std::string to_string(const VRay& v) {
  return "((" + std::to_string(v.carrier_x) + "," + std::to_string(v.quadrant) + "),>=" +
         std::to_string(v.start_y) + ")";
}

std::string to_string(const HRay& h) {
  return "((" + std::to_string(h.carrier_y) + "," + std::to_string(h.quadrant) + "),>=" +
         std::to_string(h.start_x) + ")";
}

}  // namespace houghton
