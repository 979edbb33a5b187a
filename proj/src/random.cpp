#include "houghton/random.hpp"

#include <algorithm>
#include <cstdlib>

#include "houghton/poset.hpp"

namespace houghton {

Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

namespace {

std::vector<std::pair<Int, Int>> zero_shifts(int n) { return std::vector<std::pair<Int, Int>>(n, {0, 0}); }

bool within(const GenMap& g, const Bounds& b) {
  if (g.x0 > b.threshold || g.y0 > b.threshold) return false;
  for (const auto& s : g.m)
    if (std::abs(s.first) > b.shift || std::abs(s.second) > b.shift) return false;
  return true;
}

Point random_point(int n, Int span, std::mt19937_64& rng) {
  return {uniform(rng, 1, span), uniform(rng, 1, span), static_cast<int>(uniform(rng, 1, n))};
}

GenMap random_generator(int n, bool diagonal_only, std::mt19937_64& rng) {
  const Int span = 3;
  for (;;) {
    switch (uniform(rng, 0, diagonal_only ? 4 : 5)) {
      case 0: {
        Point a = random_point(n, span, rng), b = random_point(n, span, rng);
        if (a != b) return point_swap(n, a, b);
        break;
      }
      case 1: {
        Int x1 = uniform(rng, 1, span), x2 = uniform(rng, 1, span);
        int i1 = static_cast<int>(uniform(rng, 1, n)), i2 = static_cast<int>(uniform(rng, 1, n));
        if (x1 != x2 || i1 != i2) return column_swap(n, x1, i1, x2, i2);
        break;
      }
      case 2: {
        Int y1 = uniform(rng, 1, span), y2 = uniform(rng, 1, span);
        int i1 = static_cast<int>(uniform(rng, 1, n)), i2 = static_cast<int>(uniform(rng, 1, n));
        if (y1 != y2 || i1 != i2) return row_swap(n, y1, i1, y2, i2);
        break;
      }
      case 3:
      case 4: {
        int i = static_cast<int>(uniform(rng, 1, n)), j = static_cast<int>(uniform(rng, 1, n));
        return quadrant_shift(n, i, j);
      }
      default: {
        if (n < 2) break;
        int k = static_cast<int>(uniform(rng, 1, n - 1));
        GenMap d = phi_generator(n, k);
        return uniform(rng, 0, 1) ? d : invert(d);
      }
    }
  }
}

GenMap random_product(int n, const Bounds& bounds, bool diagonal_only, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    GenMap g = identity_map(n);
    int k = static_cast<int>(uniform(rng, 0, bounds.factors));
    for (int f = 0; f < k; ++f) g = compose(g, random_generator(n, diagonal_only, rng));
    if (within(g, bounds)) return g;
  }
  fail(ErrorCode::InfeasibleBounds, "no group element found within bounds");
}

}  // namespace

GenMap point_swap(int n, const Point& a, const Point& b) {
  Int X = std::max(a.x, b.x) + 1, Y = std::max(a.y, b.y) + 1;
  return tabulate(n, zero_shifts(n), X, Y, [&](const Point& p) {
    if (p == a) return b;
    if (p == b) return a;
    return p;
  });
}

GenMap column_swap(int n, Int x1, int i1, Int x2, int i2) {
  Int X = std::max(x1, x2) + 1;
  return tabulate(n, zero_shifts(n), X, 1, [&](const Point& p) {
    if (p.x == x1 && p.quadrant == i1) return Point{x2, p.y, i2};
    if (p.x == x2 && p.quadrant == i2) return Point{x1, p.y, i1};
    return p;
  });
}

GenMap row_swap(int n, Int y1, int i1, Int y2, int i2) {
  Int Y = std::max(y1, y2) + 1;
  return tabulate(n, zero_shifts(n), 1, Y, [&](const Point& p) {
    if (p.y == y1 && p.quadrant == i1) return Point{p.x, y2, i2};
    if (p.y == y2 && p.quadrant == i2) return Point{p.x, y1, i1};
    return p;
  });
}

GenMap quadrant_shift(int n, int i, int j) { return predecessor_surjective(t_generator(n, i), j); }

GenMap phi_generator(int n, int k) {
  if (k < 1 || k >= n) fail(ErrorCode::PreconditionFailed, "need 1 <= k < n");
  auto m = zero_shifts(n);
  m[k - 1] = {1, 0};
  m[k] = {-1, 0};
  // quadrant k slides right, quadrant k+1 slides left, its first column lands on column 1 of k
  return tabulate(n, m, 2, 1, [&](const Point& p) -> Point {
    if (p.quadrant == k) return {p.x + 1, p.y, k};
    if (p.quadrant == k + 1) {
      if (p.x == 1) return {1, p.y, k};
      return {p.x - 1, p.y, k + 1};
    }
    return p;
  });
}

GenMap column_hole(int n, Int x, int i) {
  return tabulate(n, zero_shifts(n), x + 1, 1, [&](const Point& p) {
    if (p.x == x && p.quadrant == i) return Point{p.x, p.y + 1, i};
    return p;
  });
}

GenMap random_gn(int n, const Bounds& bounds, std::mt19937_64& rng) { return random_product(n, bounds, true, rng); }

GenMap random_gtilde(int n, const Bounds& bounds, std::mt19937_64& rng) {
  return random_product(n, bounds, false, rng);
}

GenMap random_m(int n, const Bounds& bounds, std::mt19937_64& rng) {
  Bounds small = bounds;
  small.factors = std::max(1, bounds.factors / 2);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Int> e(n, 0);
    Int total = uniform(rng, 0, bounds.shift);
    for (Int s = 0; s < total; ++s) e[uniform(rng, 0, n - 1)] += 1;
    GenMap a = compose(random_gn(n, small, rng), translation_map(e));
    a = compose(a, random_gn(n, small, rng));
    if (uniform(rng, 0, 3) == 0)
      a = compose(a, column_hole(n, uniform(rng, 1, 2), static_cast<int>(uniform(rng, 1, n))));
    if (within(a, bounds)) return a;
  }
  fail(ErrorCode::InfeasibleBounds, "no element of M found within bounds");
}

GenMap random_element(ElementKind kind, int n, const Bounds& bounds, std::uint64_t seed) {
  if (n < 1 || bounds.threshold < 1 || bounds.shift < 0 || bounds.factors < 0)
    fail(ErrorCode::PreconditionFailed, "bounds must be positive");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case ElementKind::T: {
      std::vector<Int> e(n, 0);
      Int total = uniform(rng, 0, bounds.shift);
      for (Int s = 0; s < total; ++s) e[uniform(rng, 0, n - 1)] += 1;
      return translation_map(e);
    }
    case ElementKind::M: return random_m(n, bounds, rng);
    case ElementKind::Gn: return random_gn(n, bounds, rng);
    case ElementKind::Gtilde: return random_gtilde(n, bounds, rng);
  }
  fail(ErrorCode::PreconditionFailed, "unknown element kind");
}

HoughtonMap random_houghton(int k, int factors, Int span, std::mt19937_64& rng) {
  HoughtonMap h = houghton_identity(k);
  int count = static_cast<int>(uniform(rng, 0, factors));
  for (int f = 0; f < count; ++f) {
    HoughtonMap s;
    if (k >= 2 && uniform(rng, 0, 1)) {
      // ray a gains one step, ray b feeds its first point into ray a
      int a = static_cast<int>(uniform(rng, 1, k)), b = static_cast<int>(uniform(rng, 1, k - 1));
      if (b >= a) ++b;
      std::vector<Int> m(k, 0);
      m[a - 1] = 1;
      m[b - 1] = -1;
      s = houghton_tabulate(k, m, 2, [&](const RayPoint& p) -> RayPoint {
        if (p.ray == a) return {p.x + 1, a};
        if (p.ray == b) return p.x == 1 ? RayPoint{1, a} : RayPoint{p.x - 1, b};
        return p;
      });
    } else {
      RayPoint u{uniform(rng, 1, span), static_cast<int>(uniform(rng, 1, k))};
      RayPoint v{uniform(rng, 1, span), static_cast<int>(uniform(rng, 1, k))};
      Int x0 = std::max(u.x, v.x) + 1;
      s = houghton_tabulate(k, std::vector<Int>(k, 0), x0, [&](const RayPoint& p) {
        if (p == u) return v;
        if (p == v) return u;
        return p;
      });
    }
    h = houghton_compose(h, s);
  }
  return h;
}

}  // namespace houghton
