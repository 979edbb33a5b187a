#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "houghton/genmap.hpp"

namespace houghton {

// t_1^e_1 ... t_n^e_n
struct Translation {
  int n = 1;
  std::vector<Int> exponents;

  bool operator==(const Translation&) const = default;
  GenMap to_map() const { return translation_map(exponents); }
  Int grade() const;
  bool is_identity() const { return grade() == 0; }
};

// elements[0] = a > elements[1] > ... ; compose(t_{steps[s]}, elements[s+1]) == elements[s]
struct ChainCertificate {
  std::vector<GenMap> elements;
  std::vector<int> steps;
  std::size_t length() const { return steps.size(); }
};

struct OrbitInvariant {
  Int grade0 = 0;
  std::vector<Translation> translation_word;
  bool operator==(const OrbitInvariant&) const = default;
};

// Throws NotInM unless every asymptotic shift is diagonal.
void require_M(const GenMap& a);

RegionDecomposition decompose(const GenMap& a);
Int grade(const GenMap& a);

std::optional<Translation> leq(const GenMap& a, const GenMap& b);
Translation cofinal_translation(const GenMap& a);
GenMap upper_bound(const GenMap& a, const GenMap& b);

// beta with compose(t_i, beta) == a. Without a seed the first vertical and
// first horizontal ray of decompose(a) are used; a seed picks them at random.
GenMap predecessor(const GenMap& a, int i, std::optional<std::uint64_t> seed = std::nullopt);
// Same, with the two complement rays named explicitly. Both must be rays of decompose(a).
GenMap predecessor_using(const GenMap& a, int i, const VRay& v, const HRay& h);
// For grade 1: a bijective beta, the whole of S - S t_i going onto S - S a.
GenMap predecessor_surjective(const GenMap& a, int i);

ChainCertificate max_chain(const GenMap& a, Int floor = 0);
// Checks one certificate step by step (compose + equals).
bool verify_chain(const ChainCertificate& c);

// g in G_n: grades equal; otherwise (g in M): grade(a) <= grade(compose(a, g)).
bool grade_invariance_check(const GenMap& a, const GenMap& g);

OrbitInvariant orbit_invariant(const std::vector<GenMap>& simplex);
GenMap orbit_witness(const std::vector<GenMap>& a, const std::vector<GenMap>& b);

std::vector<Translation> enumerate_T_leq(int n, Int k);

// (S - S t_i) beta, the image of column 1 and row 1 of quadrant i.
RegionDecomposition boundary_image(const GenMap& beta, int i);
// Quadrant i with compose(t_i, beta) == alpha, or 0.
int maximal_below_index(const GenMap& alpha, const GenMap& beta);
bool glb_criterion(const GenMap& alpha, const std::vector<GenMap>& maximals);
GenMap glb(const GenMap& alpha, const std::vector<GenMap>& maximals);

// Enumeration of A u P by N x {1..k1+k2}: vertical rays first, then
// horizontal ones, the finite part placed in front of the first ray.
class RayEnumeration {
 public:
  explicit RayEnumeration(const RegionDecomposition& region);
  int rays() const { return static_cast<int>(region_.vrays.size() + region_.hrays.size()); }
  Point at(Int j, int ray) const;
  std::optional<RayPoint> index_of(const Point& p) const;
  // number of finite-part slots in front of the ray
  Int offset(int ray) const { return ray == 1 ? static_cast<Int>(region_.finite_part.size()) : 0; }
  Int start(int ray) const;
  const RegionDecomposition& region() const { return region_; }

 private:
  RegionDecomposition region_;
};

HoughtonMap stabilizer_conjugate(const GenMap& g, const RegionDecomposition& region);
// Inverse direction: f' h f'^-1 on the region, identity elsewhere.
GenMap lift_to_region(const HoughtonMap& h, const RegionDecomposition& region, int n);

}  // namespace houghton
