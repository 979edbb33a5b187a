#include "houghton/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

namespace houghton {

namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflowed {};

// Checked arithmetic for the int64 pass; any overflow restarts in Big.
Int sub_mul(Int a, Int q, Int b) {
  Int p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflowed{};
  return r;
}
Big sub_mul(const Big& a, const Big& q, const Big& b) { return a - q * b; }

Int gcd_of(Int a, Int b) { return std::gcd(a, b); }
Big gcd_of(const Big& a, const Big& b) { return boost::multiprecision::gcd(a, b); }

Int times(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflowed{};
  return r;
}
Big times(const Big& a, const Big& b) { return a * b; }

Int magnitude(Int a) {
  if (a == INT64_MIN) throw Overflowed{};
  return a < 0 ? -a : a;
}
Big magnitude(const Big& a) { return abs(a); }

template <class T>
std::vector<T> diagonalize(std::vector<std::vector<T>>& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<T> diag;
  std::size_t r = 0;
  while (r < m && r < n) {
    // smallest nonzero magnitude, first in row-major order
    std::size_t pi = m, pj = n;
    T best = 0;
    for (std::size_t i = r; i < m; ++i) {
      for (std::size_t j = r; j < n; ++j) {
        if (a[i][j] == 0) continue;
        T v = magnitude(a[i][j]);
        if (pi == m || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
      if (pi != m && best == 1) break;
    }
    if (pi == m) break;
    std::swap(a[r], a[pi]);
    if (pj != r)
      for (std::size_t i = r; i < m; ++i) std::swap(a[i][r], a[i][pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][r] == 0) continue;
        T q = a[i][r] / a[r][r];
        if (q != 0)
          for (std::size_t j = r; j < n; ++j)
            if (a[r][j] != 0) a[i][j] = sub_mul(a[i][j], q, a[r][j]);
        if (a[i][r] != 0) clean = false;
      }
      for (std::size_t j = r + 1; j < n; ++j) {
        if (a[r][j] == 0) continue;
        T q = a[r][j] / a[r][r];
        if (q != 0)
          for (std::size_t i = r; i < m; ++i)
            if (a[i][r] != 0) a[i][j] = sub_mul(a[i][j], q, a[i][r]);
        if (a[r][j] != 0) clean = false;
      }
      if (clean) break;
      // a remainder is now smaller than the pivot; bring the smallest to (r, r)
      std::size_t bi = r, bj = r;
      T bv = magnitude(a[r][r]);
      for (std::size_t i = r + 1; i < m; ++i)
        if (a[i][r] != 0 && magnitude(a[i][r]) < bv) {
          bv = magnitude(a[i][r]);
          bi = i;
          bj = r;
        }
      for (std::size_t j = r + 1; j < n; ++j)
        if (a[r][j] != 0 && magnitude(a[r][j]) < bv) {
          bv = magnitude(a[r][j]);
          bi = r;
          bj = j;
        }
      if (bi != r) std::swap(a[r], a[bi]);
      if (bj != r)
        for (std::size_t i = r; i < m; ++i) std::swap(a[i][r], a[i][bj]);
    }
    diag.push_back(magnitude(a[r][r]));
    ++r;
  }
  // normalize to a divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      T g = gcd_of(diag[i], diag[j]);
      T l = times(T(diag[i] / g), diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace

IntegerDiagonal smith_diagonal(std::vector<std::vector<Int>> a) {
  IntegerDiagonal out;
  std::vector<std::vector<Int>> copy = a;
  try {
    std::vector<Int> d = diagonalize(a);
    out.rank = d.size();
    out.invariant_factors = d;
    return out;
  } catch (const Overflowed&) {
  }
  std::vector<std::vector<Big>> big(copy.size());
  for (std::size_t i = 0; i < copy.size(); ++i)
    for (Int v : copy[i]) big[i].emplace_back(v);
  std::vector<Big> d = diagonalize(big);
  out.rank = d.size();
  for (const auto& v : d) {
    if (v > Big(INT64_MAX)) fail(ErrorCode::Overflow, "invariant factor exceeds 64 bits");
    out.invariant_factors.push_back(static_cast<Int>(v));
  }
  return out;
}

std::vector<std::vector<Int>> boundary_matrix(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
  std::vector<std::vector<Int>> b(lower.size(), std::vector<Int>(upper.size(), 0));
  Simplex face;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Simplex& s = upper[c];
    for (std::size_t k = 0; k < s.size(); ++k) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      auto it = std::lower_bound(lower.begin(), lower.end(), face);
      b[static_cast<std::size_t>(it - lower.begin())][c] = (k % 2 == 0) ? 1 : -1;
    }
  }
  return b;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  auto faces = faces_by_dimension(k);
  const std::size_t top = faces.size();  // dimensions 0..top-1
  HomologyProfile p;
  for (const auto& f : faces) p.face_counts.push_back(f.size());
  // rank[d] = rank of the boundary from dimension d to d-1; rank[0] is the augmentation
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<std::vector<Int>> factors(top + 1);
  rank[0] = 1;
  for (std::size_t d = 1; d < top; ++d) {
    IntegerDiagonal diag = smith_diagonal(boundary_matrix(faces[d - 1], faces[d]));
    rank[d] = diag.rank;
    for (Int f : diag.invariant_factors)
      if (f > 1) factors[d].push_back(f);
  }
  for (std::size_t d = 0; d < top; ++d) {
    HomologyDegree h;
    h.betti = static_cast<Int>(faces[d].size() - rank[d] - rank[d + 1]);
    h.torsion = factors[d + 1];
    p.degrees.push_back(h);
  }
  return p;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
  const std::size_t top = std::max(degrees.size(), o.degrees.size());
  const HomologyDegree zero;
  for (std::size_t d = 0; d < top; ++d) {
    const HomologyDegree& a = d < degrees.size() ? degrees[d] : zero;
    const HomologyDegree& b = d < o.degrees.size() ? o.degrees[d] : zero;
    if (!(a == b)) return false;
  }
  return true;
}

Int HomologyProfile::euler_characteristic() const {
  Int chi = 0;
  for (std::size_t d = 0; d < face_counts.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<Int>(face_counts[d]);
  return chi;
}

bool HomologyProfile::torsion_free() const {
  for (const auto& d : degrees)
    if (!d.torsion.empty()) return false;
  return true;
}

bool HomologyProfile::concentrated_in(int dim) const {
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    if (static_cast<int>(d) == dim) continue;
    if (degrees[d].betti != 0 || !degrees[d].torsion.empty()) return false;
  }
  return true;
}

std::string to_string(const HomologyProfile& p) {
  std::ostringstream os;
  os << "dim  faces  betti  torsion\n";
  for (std::size_t d = 0; d < p.degrees.size(); ++d) {
    os << d << "  " << p.face_counts[d] << "  " << p.degrees[d].betti << "  ";
    if (p.degrees[d].torsion.empty()) os << "-";
    for (std::size_t t = 0; t < p.degrees[d].torsion.size(); ++t)
      os << (t ? "," : "") << "Z/" << p.degrees[d].torsion[t];
    os << "\n";
  }
  os << "euler characteristic: " << p.euler_characteristic() << "\n";
  return os.str();
}

}  // namespace houghton
