#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's own decomposition, composition or normal-form code.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <vector>

#include "houghton/complex.hpp"
#include "houghton/genmap.hpp"
#include "houghton/homology.hpp"
#include "houghton/io.hpp"

namespace oracle {

using houghton::Int;
using houghton::Point;

// Evaluates an element straight from its serialized tables.
class TableMap {
 public:
  explicit TableMap(const houghton::Json& doc) {
    n_ = doc["n"].get<int>();
    x0_ = doc["x0"].get<Int>();
    y0_ = doc["y0"].get<Int>();
    for (const auto& s : doc["m"]) m_.push_back({s[0].get<Int>(), s[1].get<Int>()});
    for (const auto& e : doc["colmap"])
      col_[{e["from"][0].get<Int>(), e["from"][1].get<int>()}] = {e["to"][0].get<Int>(), e["to"][1].get<int>(),
                                                                   e["shift"].get<Int>()};
    for (const auto& e : doc["rowmap"])
      row_[{e["from"][0].get<Int>(), e["from"][1].get<int>()}] = {e["to"][0].get<Int>(), e["to"][1].get<int>(),
                                                                   e["shift"].get<Int>()};
    for (const auto& e : doc["rect"])
      rect_[{e["from"][0].get<Int>(), e["from"][1].get<Int>(), e["from"][2].get<int>()}] = {
          e["to"][0].get<Int>(), e["to"][1].get<Int>(), e["to"][2].get<int>()};
  }
  explicit TableMap(const houghton::GenMap& g) : TableMap(houghton::to_json(g)) {}

  Point operator()(const Point& p) const {
    if (p.x >= x0_ && p.y >= y0_) return {p.x + m_[p.quadrant - 1].first, p.y + m_[p.quadrant - 1].second, p.quadrant};
    if (p.y >= y0_) {
      auto [x, q, s] = col_.at({p.x, p.quadrant});
      return {x, p.y + s, q};
    }
    if (p.x >= x0_) {
      auto [y, q, s] = row_.at({p.y, p.quadrant});
      return {p.x + s, y, q};
    }
    return rect_.at({p.x, p.y, p.quadrant});
  }
  int n() const { return n_; }
  Int reach() const {
    Int r = x0_ + y0_;
    for (auto [a, b] : m_) r += std::abs(a) + std::abs(b);
    for (const auto& [k, v] : col_) r += std::abs(std::get<2>(v)) + std::get<0>(v);
    for (const auto& [k, v] : row_) r += std::abs(std::get<2>(v)) + std::get<0>(v);
    for (const auto& [k, v] : rect_) r += v.x + v.y;
    return r;
  }

 private:
  struct Key2 {
    Int a;
    int q;
    bool operator<(const Key2& o) const { return std::tie(a, q) < std::tie(o.a, o.q); }
  };
  struct Key3 {
    Int x, y;
    int q;
    bool operator<(const Key3& o) const { return std::tie(x, y, q) < std::tie(o.x, o.y, o.q); }
  };
  int n_ = 1;
  Int x0_ = 1, y0_ = 1;
  std::vector<std::pair<Int, Int>> m_;
  std::map<Key2, std::tuple<Int, int, Int>> col_, row_;
  std::map<Key3, Point> rect_;
};

inline std::vector<Point> window(int n, Int w) {
  std::vector<Point> out;
  for (int q = 1; q <= n; ++q)
    for (Int x = 1; x <= w; ++x)
      for (Int y = 1; y <= w; ++y) out.push_back({x, y, q});
  return out;
}

// Points of [1..w]^2 x {1..n} missed by f, using sources from a window wide
// enough to contain every preimage of a point of the small window.
inline std::set<Point> complement_in_window(const TableMap& f, Int w) {
  Int wide = w + f.reach() + 2;
  std::set<Point> hit;
  for (const auto& p : window(f.n(), wide)) {
    Point v = f(p);
    if (v.x <= w && v.y <= w) hit.insert(v);
  }
  std::set<Point> out;
  for (const auto& p : window(f.n(), w))
    if (!hit.count(p)) out.insert(p);
  return out;
}

// true if f is injective on the window [1..w]^2
inline bool injective_on_window(const TableMap& f, Int w) {
  std::set<Point> seen;
  for (const auto& p : window(f.n(), w))
    if (!seen.insert(f(p)).second) return false;
  return true;
}

inline std::set<Point> region_in_window(const houghton::RegionDecomposition& r, int n, Int w) {
  std::set<Point> out;
  for (const auto& v : r.vrays)
    for (Int y = v.start_y; y <= w; ++y)
      if (v.carrier_x <= w) out.insert({v.carrier_x, y, v.quadrant});
  for (const auto& h : r.hrays)
    for (Int x = h.start_x; x <= w; ++x)
      if (h.carrier_y <= w) out.insert({x, h.carrier_y, h.quadrant});
  for (const auto& p : r.finite_part)
    if (p.x <= w && p.y <= w) out.insert(p);
  (void)n;
  return out;
}

// Brute count of pieces: the sizes of pieces listed in r restricted to the window.
inline std::size_t piece_points_in_window(const houghton::RegionDecomposition& r, Int w) {
  std::size_t c = r.finite_part.size();
  for (const auto& v : r.vrays) c += v.start_y <= w ? static_cast<std::size_t>(w - v.start_y + 1) : 0;
  for (const auto& h : r.hrays) c += h.start_x <= w ? static_cast<std::size_t>(w - h.start_x + 1) : 0;
  return c;
}

inline bool same_on_window(const TableMap& f, const TableMap& g, Int w) {
  for (const auto& p : window(f.n(), w))
    if (f(p) != g(p)) return false;
  return true;
}

// Rank of an integer matrix over Q (fraction-free elimination in big integers).
inline std::size_t rank_q(const std::vector<std::vector<Int>>& a) {
  using Big = boost::multiprecision::cpp_int;
  std::vector<std::vector<Big>> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Int v : a[i]) m[i].emplace_back(v);
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  Big prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Rank over Z/p.
inline std::size_t rank_mod(const std::vector<std::vector<Int>>& a, Int p) {
  std::vector<std::vector<Int>> m = a;
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  auto inv = [&](Int v) {
    Int res = 1, e = p - 2, b = v;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Int iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Int f = m[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

struct RationalProfile {
  std::vector<Int> betti;               // reduced, over Q
  std::vector<std::set<Int>> torsion_primes;  // primes p (from a fixed list) with p-torsion
};

// Reduced Betti numbers over Q and small-prime torsion detection, from
// boundary ranks computed by elimination independent of the normal form.
inline RationalProfile rational_profile(const houghton::SimplicialComplex& k) {
  auto faces = houghton::faces_by_dimension(k);
  const std::size_t top = faces.size();
  std::vector<std::size_t> rq(top + 1, 0);
  std::vector<std::map<Int, std::size_t>> rp(top + 1);
  const Int primes[] = {2, 3, 5, 7};
  rq[0] = 1;
  for (Int p : primes) rp[0][p] = 1;
  for (std::size_t d = 1; d < top; ++d) {
    auto b = houghton::boundary_matrix(faces[d - 1], faces[d]);
    rq[d] = rank_q(b);
    for (Int p : primes) rp[d][p] = rank_mod(b, p);
  }
  for (Int p : primes) rp[top][p] = 0;
  RationalProfile out;
  out.torsion_primes.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    out.betti.push_back(static_cast<Int>(faces[d].size() - rq[d] - rq[d + 1]));
    for (Int p : primes)
      if (rp[d + 1][p] < rq[d + 1]) out.torsion_primes[d].insert(p);
  }
  return out;
}

inline Int euler_from_faces(const houghton::SimplicialComplex& k) {
  auto faces = houghton::faces_by_dimension(k);
  Int chi = 0;
  for (std::size_t d = 0; d < faces.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<Int>(faces[d].size());
  return chi;
}

inline Int binomial(Int n, Int k) {
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
