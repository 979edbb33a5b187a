#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "houghton/integer.hpp"

namespace houghton {

// A point ((x,y),i) of S = (N x N) x {1..n}. Ordered by quadrant, then x, then y.
struct Point {
  Int x = 1;
  Int y = 1;
  int quadrant = 1;

  bool operator==(const Point&) const = default;
  std::strong_ordering operator<=>(const Point& o) const {
    if (auto c = quadrant <=> o.quadrant; c != 0) return c;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = std::hash<Int>{}(p.x);
    h ^= std::hash<Int>{}(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>{}(p.quadrant) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// {((carrier_x, y), quadrant) : y >= start_y}
struct VRay {
  Int carrier_x = 1;
  int quadrant = 1;
  Int start_y = 1;

  bool operator==(const VRay&) const = default;
  bool contains(const Point& p) const {
    return p.quadrant == quadrant && p.x == carrier_x && p.y >= start_y;
  }
};

// {((x, carrier_y), quadrant) : x >= start_x}
struct HRay {
  Int carrier_y = 1;
  int quadrant = 1;
  Int start_x = 1;

  bool operator==(const HRay&) const = default;
  bool contains(const Point& p) const {
    return p.quadrant == quadrant && p.y == carrier_y && p.x >= start_x;
  }
};

// Disjoint union of vertical rays, horizontal rays and a finite set.
// Produced by canonicalize(); vrays sorted by (quadrant, carrier), hrays
// likewise, finite_part sorted.
struct RegionDecomposition {
  std::vector<VRay> vrays;
  std::vector<HRay> hrays;
  std::vector<Point> finite_part;

  bool operator==(const RegionDecomposition&) const = default;
  bool empty() const { return vrays.empty() && hrays.empty() && finite_part.empty(); }
};

// Unnormalized description of a point set; pieces may overlap.
struct RawPieces {
  std::vector<VRay> vrays;
  std::vector<HRay> hrays;
  std::vector<Point> points;
};

bool contains(const RegionDecomposition& region, const Point& p);

std::optional<Point> ray_intersection(const VRay& v, const HRay& h);

// Normal form: rays extended downward as far as the set allows, a vertical
// ray keeps a point it shares with a horizontal one, and the finite part
// holds whatever is left. Throws DuplicateCarrier.
RegionDecomposition canonicalize(const RawPieces& pieces);

// Some point lying in both regions, if any. Exact on the ray/finite data.
std::optional<Point> common_point(const RegionDecomposition& a, const RegionDecomposition& b);

inline bool intersects(const RegionDecomposition& a, const RegionDecomposition& b) {
  return common_point(a, b).has_value();
}

std::string to_string(const Point& p);
std::string to_string(const VRay& v);
std::string to_string(const HRay& h);

}  // namespace houghton
