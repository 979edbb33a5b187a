#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "houghton/integer.hpp"

namespace houghton {

// A point (x, i) of N x {1..n}.
struct RayPoint {
  Int x = 1;
  int ray = 1;
  bool operator==(const RayPoint&) const = default;
  auto operator<=>(const RayPoint&) const = default;
};

// Eventually translating injection of N x {1..n}: (x,i) -> (x + m_i, i) for
// x >= x0, exceptional[i-1][x-1] below the threshold. Keep x0 minimal via
// houghton_canonical().
struct HoughtonMap {
  int n = 1;
  Int x0 = 1;
  std::vector<Int> m;
  std::vector<std::vector<RayPoint>> exceptional;

  bool operator==(const HoughtonMap&) const = default;
  RayPoint apply(const RayPoint& p) const;
};

HoughtonMap houghton_identity(int n);

// Builds the map from f, which must already be translation by m on x >= x0.
HoughtonMap houghton_tabulate(int n, const std::vector<Int>& m, Int x0,
                              const std::function<RayPoint(const RayPoint&)>& f);
HoughtonMap houghton_canonical(const HoughtonMap& h);

// Throws NotInjective / InvalidImage; returns whether h is onto.
bool houghton_validate(const HoughtonMap& h);

// compose(a, b) applies a first.
HoughtonMap houghton_compose(const HoughtonMap& a, const HoughtonMap& b);
HoughtonMap houghton_invert(const HoughtonMap& h);
bool houghton_equals(const HoughtonMap& a, const HoughtonMap& b);

std::string to_string(const HoughtonMap& h);

}  // namespace houghton
