#pragma once

#include <cstdint>
#include <random>

#include "houghton/genmap.hpp"
#include "houghton/houghton_map.hpp"

namespace houghton {

enum class ElementKind { T, M, Gn, Gtilde };

struct Bounds {
  Int threshold = 5;  // canonical x0, y0 at most this
  Int shift = 4;      // |m_i| at most this; for M and T also the grade
  int factors = 3;    // generator factors per group element
};

// Deterministic per seed. Throws InfeasibleBounds after repeated rejection.
GenMap random_element(ElementKind kind, int n, const Bounds& bounds, std::uint64_t seed);

// Building blocks, usable directly in tests.
GenMap point_swap(int n, const Point& a, const Point& b);
GenMap column_swap(int n, Int x1, int i1, Int x2, int i2);
GenMap row_swap(int n, Int y1, int i1, Int y2, int i2);
// bijection with shifts e_i - e_j, the surjective predecessor of t_i along t_j
GenMap quadrant_shift(int n, int i, int j);
// bijection with phi = e_k - e_{k+1}
GenMap phi_generator(int n, int k);
// column x of quadrant i pushed up one step: injective, grade 0, one hole
GenMap column_hole(int n, Int x, int i);

GenMap random_gn(int n, const Bounds& bounds, std::mt19937_64& rng);
GenMap random_gtilde(int n, const Bounds& bounds, std::mt19937_64& rng);
GenMap random_m(int n, const Bounds& bounds, std::mt19937_64& rng);

// Houghton group element on k rays: product of transpositions and ray shifts.
HoughtonMap random_houghton(int k, int factors, Int span, std::mt19937_64& rng);

Int uniform(std::mt19937_64& rng, Int lo, Int hi);

}  // namespace houghton
