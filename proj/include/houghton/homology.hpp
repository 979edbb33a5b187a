#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "houghton/complex.hpp"

namespace houghton {

struct HomologyDegree {
  Int betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool operator==(const HomologyDegree&) const = default;
};

struct HomologyProfile {
  std::vector<HomologyDegree> degrees;  // reduced, index = dimension
  std::vector<std::size_t> face_counts;

  // Homology groups only; degrees past the top are zero, so trailing zero
  // degrees do not distinguish profiles.
  bool operator==(const HomologyProfile& o) const;
  Int euler_characteristic() const;
  bool torsion_free() const;
  // reduced homology zero except in degree d
  bool concentrated_in(int d) const;
};

// Rank and invariant factors of an integer matrix (dense, row-major).
struct IntegerDiagonal {
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // all nonzero diagonal entries, divisibility chain
};
IntegerDiagonal smith_diagonal(std::vector<std::vector<Int>> a);

// Boundary of dimension d faces into dimension d-1 faces, rows indexed by the
// lower faces.
std::vector<std::vector<Int>> boundary_matrix(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper);

HomologyProfile reduced_homology(const SimplicialComplex& k);

std::string to_string(const HomologyProfile& p);

}  // namespace houghton
