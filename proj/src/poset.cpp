#include "houghton/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace houghton {

Int Translation::grade() const {
  Int s = 0;
  for (Int e : exponents) s = add(s, e);
  return s;
}

void require_M(const GenMap& a) {
  if (!diagonal(a)) fail(ErrorCode::NotInM, "asymptotic shifts are not diagonal: " + to_string(a));
}

RegionDecomposition decompose(const GenMap& a) {
  require_M(a);
  ImageIndex index(a);
  auto [bx, by] = image_box(a);
  // widen so that every exceptional carrier and corner point lies inside
  Int wx = bx, wy = by;
  for (int i = 1; i <= a.n; ++i) {
    for (const auto& c : a.colmap[i - 1]) wx = std::max(wx, c.x + 1);
    for (const auto& r : a.rowmap[i - 1]) wy = std::max(wy, r.y + 1);
    for (const auto& p : a.rect[i - 1]) {
      wx = std::max(wx, p.x + 1);
      wy = std::max(wy, p.y + 1);
    }
  }
  RawPieces raw;
  for (int q = 1; q <= a.n; ++q) {
    for (Int x = 1; x < bx; ++x)
      if (!index.column_hit(x, q)) raw.vrays.push_back({x, q, wy});
    for (Int y = 1; y < by; ++y)
      if (!index.row_hit(y, q)) raw.hrays.push_back({y, q, wx});
    for (Int x = 1; x < wx; ++x)
      for (Int y = 1; y < wy; ++y)
        if (!index.preimage({x, y, q})) raw.points.push_back({x, y, q});
  }
  return canonicalize(raw);
}

Int grade(const GenMap& a) {
  require_M(a);
  Int s = 0;
  for (const auto& m : a.m) s = add(s, m.first);
  return s;
}

std::optional<Translation> leq(const GenMap& a, const GenMap& b) {
  require_M(a);
  require_M(b);
  if (a.n != b.n) fail(ErrorCode::PreconditionFailed, "quadrant counts differ");
  Translation t{a.n, {}};
  for (int i = 0; i < a.n; ++i) {
    Int c = sub(b.m[i].first, a.m[i].first);
    if (c < 0) return std::nullopt;
    t.exponents.push_back(c);
  }
  if (!equals(compose(t.to_map(), a), b)) return std::nullopt;
  return t;
}

Translation cofinal_translation(const GenMap& a) {
  require_M(a);
  GenMap c = canonical(a);
  Int l = std::max(c.x0, c.y0);
  return Translation{a.n, std::vector<Int>(a.n, l - 1)};
}

GenMap upper_bound(const GenMap& a, const GenMap& b) {
  GenMap ta = compose(cofinal_translation(a).to_map(), a);
  GenMap tb = compose(cofinal_translation(b).to_map(), b);
  return compose(ta, tb);
}

namespace {

void check_quadrant(const GenMap& a, int i) {
  if (i < 1 || i > a.n) fail(ErrorCode::PreconditionFailed, "quadrant index out of range");
}

GenMap build_predecessor(const GenMap& a, int i, const VRay& v, const HRay& h) {
  auto m = a.m;
  m[i - 1].first -= 1;
  m[i - 1].second -= 1;
  Int X0 = std::max<Int>(2, a.x0 + 1), Y0 = std::max<Int>(2, a.y0 + 1);
  return tabulate(a.n, m, X0, Y0, [&](const Point& p) -> Point {
    if (p.quadrant != i) return a.apply(p);
    if (p.x == 1) return {v.carrier_x, p.y + v.start_y - 1, v.quadrant};
    if (p.y == 1) return {p.x + h.start_x - 2, h.carrier_y, h.quadrant};
    return a.apply({p.x - 1, p.y - 1, i});
  });
}

}  // namespace

GenMap predecessor_using(const GenMap& a, int i, const VRay& v, const HRay& h) {
  check_quadrant(a, i);
  RegionDecomposition d = decompose(a);
  if (std::find(d.vrays.begin(), d.vrays.end(), v) == d.vrays.end() ||
      std::find(d.hrays.begin(), d.hrays.end(), h) == d.hrays.end())
    fail(ErrorCode::PreconditionFailed, "rays are not part of the complement decomposition");
  return build_predecessor(a, i, v, h);
}

GenMap predecessor(const GenMap& a, int i, std::optional<std::uint64_t> seed) {
  check_quadrant(a, i);
  RegionDecomposition d = decompose(a);
  if (d.vrays.empty() || d.hrays.empty()) fail(ErrorCode::GradeZero, "grade 0 element has no predecessor");
  std::size_t vi = 0, hi = 0;
  if (seed) {
    std::mt19937_64 rng(*seed);
    vi = std::uniform_int_distribution<std::size_t>(0, d.vrays.size() - 1)(rng);
    hi = std::uniform_int_distribution<std::size_t>(0, d.hrays.size() - 1)(rng);
  }
  return build_predecessor(a, i, d.vrays[vi], d.hrays[hi]);
}

GenMap predecessor_surjective(const GenMap& a, int i) {
  check_quadrant(a, i);
  RegionDecomposition d = decompose(a);
  if (d.vrays.size() != 1 || d.hrays.size() != 1)
    fail(ErrorCode::GradeNotOne, "grade is " + std::to_string(d.vrays.size()) + ", not 1");
  const VRay v = d.vrays[0];
  const HRay h = d.hrays[0];
  const std::vector<Point>& P = d.finite_part;
  const Int r = static_cast<Int>(P.size());
  auto m = a.m;
  m[i - 1].first -= 1;
  m[i - 1].second -= 1;
  Int X0 = std::max<Int>(2, a.x0 + 1);
  Int Y0 = std::max({r + 2, a.y0 + 1, Int{2}});
  // row 1 onto the horizontal ray, column 1 runs through P and then the vertical ray
  return tabulate(a.n, m, X0, Y0, [&](const Point& p) -> Point {
    if (p.quadrant != i) return a.apply(p);
    if (p.y == 1) return {p.x + h.start_x - 1, h.carrier_y, h.quadrant};
    if (p.x == 1) {
      if (p.y <= r + 1) return P[p.y - 2];
      return {v.carrier_x, p.y - r + v.start_y - 2, v.quadrant};
    }
    return a.apply({p.x - 1, p.y - 1, i});
  });
}

namespace {

int widest_quadrant(const GenMap& a) {
  int best = 1;
  for (int i = 2; i <= a.n; ++i)
    if (a.m[i - 1].first > a.m[best - 1].first) best = i;
  return best;
}

}  // namespace

ChainCertificate max_chain(const GenMap& a, Int floor) {
  require_M(a);
  ChainCertificate c;
  c.elements.push_back(canonical(a));
  while (true) {
    const GenMap& cur = c.elements.back();
    if (static_cast<Int>(decompose(cur).vrays.size()) <= floor) break;
    int i = widest_quadrant(cur);
    GenMap beta;
    try {
      beta = predecessor(cur, i);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GradeZero) break;
      throw;
    }
    if (!equals(compose(t_generator(a.n, i), beta), cur))
      fail(ErrorCode::CriterionFailed, "predecessor step does not compose back");
    c.steps.push_back(i);
    c.elements.push_back(std::move(beta));
  }
  return c;
}

bool verify_chain(const ChainCertificate& c) {
  if (c.elements.size() != c.steps.size() + 1) return false;
  for (std::size_t s = 0; s < c.steps.size(); ++s) {
    const GenMap& hi = c.elements[s];
    if (!equals(compose(t_generator(hi.n, c.steps[s]), c.elements[s + 1]), hi)) return false;
  }
  return true;
}

bool grade_invariance_check(const GenMap& a, const GenMap& g) {
  MapClass c = validate(g);
  Int before = grade(a);
  Int after = grade(compose(a, g));
  if (c.in_Gn) return before == after;
  if (!c.in_M) fail(ErrorCode::NotInM, "second operand is not in M");
  return before <= after;
}

OrbitInvariant orbit_invariant(const std::vector<GenMap>& simplex) {
  if (simplex.empty()) fail(ErrorCode::NotAChain, "empty simplex");
  OrbitInvariant inv;
  inv.grade0 = grade(simplex.front());
  for (std::size_t j = 1; j < simplex.size(); ++j) {
    auto t = leq(simplex[j - 1], simplex[j]);
    if (!t || t->is_identity())
      fail(ErrorCode::NotAChain, "element " + std::to_string(j) + " is not strictly above its predecessor");
    inv.translation_word.push_back(*t);
  }
  return inv;
}

namespace {

// k-fold descent along t_1 ending in the bijective grade 0 element
GenMap descend_to_group(const GenMap& a) {
  GenMap cur = canonical(a);
  for (Int k = grade(cur); k > 1; --k) cur = predecessor(cur, 1);
  return predecessor_surjective(cur, 1);
}

}  // namespace

GenMap orbit_witness(const std::vector<GenMap>& a, const std::vector<GenMap>& b) {
  OrbitInvariant ia = orbit_invariant(a), ib = orbit_invariant(b);
  if (a.size() != b.size() || !(ia == ib)) fail(ErrorCode::InvariantMismatch, "orbit invariants differ");
  const int n = a.front().n;
  if (ia.grade0 < n) fail(ErrorCode::PreconditionFailed, "least element has grade below n");
  GenMap a00 = descend_to_group(a.front());
  GenMap b00 = descend_to_group(b.front());
  GenMap g = compose(invert(a00), b00);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!equals(compose(a[j], g), b[j]))
      fail(ErrorCode::CriterionFailed, "witness fails at position " + std::to_string(j));
  return g;
}

std::vector<Translation> enumerate_T_leq(int n, Int k) {
  if (n < 1 || k < 0) fail(ErrorCode::PreconditionFailed, "need n >= 1 and k >= 0");
  std::vector<Translation> out;
  std::vector<Int> e(n, 0);
  for (Int total = 0; total <= k; ++total) {
    // all vectors with sum exactly `total`, lexicographically descending
    std::function<void(int, Int)> rec = [&](int pos, Int left) {
      if (pos == n - 1) {
        e[pos] = left;
        out.push_back({n, e});
        return;
      }
      for (Int v = left; v >= 0; --v) {
        e[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, total);
  }
  for (const auto& t : out)
    if (t.grade() > k) fail(ErrorCode::CriterionFailed, "translation longer than its word bound");
  return out;
}

RegionDecomposition boundary_image(const GenMap& beta, int i) {
  check_quadrant(beta, i);
  RawPieces raw;
  Point top = beta.apply({1, beta.y0, i});
  raw.vrays.push_back({top.x, top.quadrant, top.y});
  for (Int y = 1; y < beta.y0; ++y) raw.points.push_back(beta.apply({1, y, i}));
  Point right = beta.apply({beta.x0, 1, i});
  raw.hrays.push_back({right.y, right.quadrant, right.x});
  for (Int x = 1; x < beta.x0; ++x) raw.points.push_back(beta.apply({x, 1, i}));
  return canonicalize(raw);
}

int maximal_below_index(const GenMap& alpha, const GenMap& beta) {
  for (int i = 1; i <= alpha.n; ++i) {
    if (beta.m[i - 1].first + 1 != alpha.m[i - 1].first) continue;
    if (equals(compose(t_generator(alpha.n, i), beta), alpha)) return i;
  }
  return 0;
}

bool glb_criterion(const GenMap& alpha, const std::vector<GenMap>& maximals) {
  if (grade(alpha) < 2 * alpha.n) fail(ErrorCode::PreconditionFailed, "alpha must have grade >= 2n");
  std::vector<int> idx;
  for (std::size_t k = 0; k < maximals.size(); ++k) {
    int i = maximal_below_index(alpha, maximals[k]);
    if (i == 0) fail(ErrorCode::NotMaximalBelow, "element " + std::to_string(k) + " is not t_i-below alpha");
    idx.push_back(i);
  }
  std::set<int> distinct(idx.begin(), idx.end());
  if (distinct.size() != idx.size()) return false;
  std::vector<RegionDecomposition> images;
  for (std::size_t k = 0; k < maximals.size(); ++k) images.push_back(boundary_image(maximals[k], idx[k]));
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (intersects(images[a], images[b])) return false;
  return true;
}

GenMap glb(const GenMap& alpha, const std::vector<GenMap>& maximals) {
  if (maximals.empty()) fail(ErrorCode::CriterionFailed, "empty family");
  if (!glb_criterion(alpha, maximals)) fail(ErrorCode::CriterionFailed, "family fails the glb criterion");
  std::map<int, const GenMap*> by_quadrant;
  for (const auto& b : maximals) by_quadrant[maximal_below_index(alpha, b)] = &b;
  auto m = alpha.m;
  Int X0 = std::max<Int>(2, alpha.x0 + 1), Y0 = std::max<Int>(2, alpha.y0 + 1);
  for (const auto& [i, b] : by_quadrant) {
    m[i - 1].first -= 1;
    m[i - 1].second -= 1;
    X0 = std::max(X0, b->x0);
    Y0 = std::max(Y0, b->y0);
  }
  return tabulate(alpha.n, m, X0, Y0, [&](const Point& p) -> Point {
    auto it = by_quadrant.find(p.quadrant);
    if (it == by_quadrant.end()) return alpha.apply(p);
    if (p.x == 1 || p.y == 1) return it->second->apply(p);
    return alpha.apply({p.x - 1, p.y - 1, p.quadrant});
  });
}

RayEnumeration::RayEnumeration(const RegionDecomposition& region) : region_(region) {
  if (rays() == 0) fail(ErrorCode::PreconditionFailed, "region has no rays");
}

Int RayEnumeration::start(int ray) const {
  const std::size_t k1 = region_.vrays.size();
  if (static_cast<std::size_t>(ray) <= k1) return region_.vrays[ray - 1].start_y;
  return region_.hrays[ray - 1 - k1].start_x;
}

Point RayEnumeration::at(Int j, int ray) const {
  const Int off = offset(ray);
  if (j <= off) return region_.finite_part[j - 1];
  const Int pos = start(ray) + (j - 1 - off);
  const std::size_t k1 = region_.vrays.size();
  if (static_cast<std::size_t>(ray) <= k1) {
    const VRay& v = region_.vrays[ray - 1];
    return {v.carrier_x, pos, v.quadrant};
  }
  const HRay& h = region_.hrays[ray - 1 - k1];
  return {pos, h.carrier_y, h.quadrant};
}

std::optional<RayPoint> RayEnumeration::index_of(const Point& p) const {
  const auto& P = region_.finite_part;
  if (auto it = std::lower_bound(P.begin(), P.end(), p); it != P.end() && *it == p)
    return RayPoint{static_cast<Int>(it - P.begin()) + 1, 1};
  for (std::size_t k = 0; k < region_.vrays.size(); ++k)
    if (region_.vrays[k].contains(p)) {
      int ray = static_cast<int>(k) + 1;
      return RayPoint{p.y - region_.vrays[k].start_y + 1 + offset(ray), ray};
    }
  for (std::size_t k = 0; k < region_.hrays.size(); ++k)
    if (region_.hrays[k].contains(p)) {
      int ray = static_cast<int>(region_.vrays.size() + k) + 1;
      return RayPoint{p.x - region_.hrays[k].start_x + 1 + offset(ray), ray};
    }
  return std::nullopt;
}

HoughtonMap stabilizer_conjugate(const GenMap& g0, const RegionDecomposition& region) {
  RayEnumeration f(region);
  GenMap g = canonical(g0);
  if (!validate(g).is_bijective) fail(ErrorCode::PreconditionFailed, "g is not a permutation");
  for (const auto& s : g.m)
    if (s.first != 0 || s.second != 0) fail(ErrorCode::NotSupported, "g translates a quadrant");

  std::map<std::pair<Int, int>, int> vcarrier, hcarrier;  // carrier -> ray number
  for (std::size_t k = 0; k < region.vrays.size(); ++k)
    vcarrier[{region.vrays[k].carrier_x, region.vrays[k].quadrant}] = static_cast<int>(k) + 1;
  for (std::size_t k = 0; k < region.hrays.size(); ++k)
    hcarrier[{region.hrays[k].carrier_y, region.hrays[k].quadrant}] =
        static_cast<int>(region.vrays.size() + k) + 1;

  std::vector<Int> shift(f.rays(), 0);
  for (int i = 1; i <= g.n; ++i) {
    for (Int x = 1; x < g.x0; ++x) {
      const ColEntry& c = g.col(x, i);
      auto it = vcarrier.find({x, i});
      if (it == vcarrier.end()) {
        if (c != ColEntry{x, i, 0}) fail(ErrorCode::NotSupported, "g moves column " + std::to_string(x) + " of quadrant " + std::to_string(i));
      } else {
        if (c.x != x || c.quadrant != i) fail(ErrorCode::NotInKernel, "g moves the carrier of a vertical ray");
        shift[it->second - 1] = c.shift;
      }
    }
    for (Int y = 1; y < g.y0; ++y) {
      const RowEntry& r = g.row(y, i);
      auto it = hcarrier.find({y, i});
      if (it == hcarrier.end()) {
        if (r != RowEntry{y, i, 0}) fail(ErrorCode::NotSupported, "g moves row " + std::to_string(y) + " of quadrant " + std::to_string(i));
      } else {
        if (r.y != y || r.quadrant != i) fail(ErrorCode::NotInKernel, "g moves the carrier of a horizontal ray");
        shift[it->second - 1] = r.shift;
      }
    }
  }

  // Off the region, below these bounds, g must fix every point.
  Int X = g.x0, Y = g.y0;
  for (const auto& v : region.vrays) {
    X = std::max(X, v.carrier_x + 1);
    Y = std::max(Y, v.start_y);
  }
  for (const auto& h : region.hrays) {
    X = std::max(X, h.start_x);
    Y = std::max(Y, h.carrier_y + 1);
  }
  for (const auto& p : region.finite_part) {
    X = std::max(X, p.x + 1);
    Y = std::max(Y, p.y + 1);
  }
  for (int q = 1; q <= g.n; ++q)
    for (Int x = 1; x < X; ++x)
      for (Int y = 1; y < Y; ++y) {
        Point p{x, y, q};
        if (!contains(region, p) && g.apply(p) != p)
          fail(ErrorCode::NotSupported, "g moves " + to_string(p) + ", which lies outside the region");
      }

  Int J = 1;
  for (int ray = 1; ray <= f.rays(); ++ray) {
    Int lim = static_cast<std::size_t>(ray) <= region.vrays.size() ? g.y0 : g.x0;
    Int need = std::max({lim - f.start(ray), -shift[ray - 1], Int{0}});
    J = std::max(J, 1 + f.offset(ray) + need);
  }
  HoughtonMap h = houghton_tabulate(f.rays(), shift, J, [&](const RayPoint& p) {
    auto idx = f.index_of(g.apply(f.at(p.x, p.ray)));
    if (!idx) fail(ErrorCode::NotSupported, "g maps a region point out of the region");
    return *idx;
  });
  if (!houghton_validate(h)) fail(ErrorCode::CriterionFailed, "conjugate is not a permutation");
  return h;
}

GenMap lift_to_region(const HoughtonMap& h, const RegionDecomposition& region, int n) {
  RayEnumeration f(region);
  if (h.n != f.rays()) fail(ErrorCode::PreconditionFailed, "ray count does not match the region");
  if (!houghton_validate(h)) fail(ErrorCode::PreconditionFailed, "h is not a permutation");
  // depth along a ray beyond which h is a plain shift that stays on the ray
  auto depth = [&](int ray) {
    return std::max({h.x0, f.offset(ray) + 1 - h.m[ray - 1], f.offset(ray) + 1}) - 1 - f.offset(ray);
  };
  Int X0 = 1, Y0 = 1;
  for (std::size_t k = 0; k < region.vrays.size(); ++k) {
    X0 = std::max(X0, region.vrays[k].carrier_x + 1);
    Y0 = std::max(Y0, region.vrays[k].start_y + depth(static_cast<int>(k) + 1));
  }
  for (std::size_t k = 0; k < region.hrays.size(); ++k) {
    Y0 = std::max(Y0, region.hrays[k].carrier_y + 1);
    X0 = std::max(X0, region.hrays[k].start_x + depth(static_cast<int>(region.vrays.size() + k) + 1));
  }
  for (const auto& p : region.finite_part) {
    X0 = std::max(X0, p.x + 1);
    Y0 = std::max(Y0, p.y + 1);
  }
  std::vector<std::pair<Int, Int>> zero(n, {0, 0});
  return tabulate(n, zero, X0, Y0, [&](const Point& p) {
    auto idx = f.index_of(p);
    if (!idx) return p;
    return f.at(h.apply(*idx).x, h.apply(*idx).ray);
  });
}

}  // namespace houghton
