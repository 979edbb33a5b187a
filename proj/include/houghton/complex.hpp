#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "houghton/lattice.hpp"

namespace houghton {

using Simplex = std::vector<int>;  // sorted vertex indices

// Facets only; every subset of a facet is a face.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::vector<Simplex> facets;

  std::size_t vertex_count() const { return labels.size(); }
  int dimension() const;
};

constexpr std::size_t kFaceCap = 2'000'000;

// All faces grouped by dimension (index 0 = vertices), each group sorted.
// Throws SizeCapExceeded beyond `cap` faces, EmptyComplex for no faces.
std::vector<std::vector<Simplex>> faces_by_dimension(const SimplicialComplex& k, std::size_t cap = kFaceCap);

// Drops non-maximal and duplicate facets, sorts.
SimplicialComplex normalize(SimplicialComplex k);

struct ColoredGraph {
  int n_colors = 0;
  std::vector<int> color;  // color of each vertex, 1..n_colors
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;

  std::size_t vertex_count() const { return color.size(); }
  // Throws PreconditionFailed for an edge inside a color class or a bad index.
  void check() const;
};

struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> relations;  // (a, b) means a <= b
};

struct GammaReport {
  bool ok = true;
  int color = 0;              // failing color class
  std::vector<int> witness;   // vertices outside it with fewer than 2 common neighbours inside
  std::string message;
};

SimplicialComplex sigma_nk(int n, int k);
SimplicialComplex clique_complex(const ColoredGraph& g);
GammaReport check_gamma_conditions(const ColoredGraph& g);
// Throws NotAPartialOrder when the reflexive-transitive closure is not antisymmetric.
SimplicialComplex order_complex(const FinitePoset& p);
// Simplices are subfamilies whose members share a vertex.
SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover);
// Also checks that the members cover `target` exactly (NotACover).
SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover, const SimplicialComplex& target);
// 1-skeleton of a complex as a graph colored by `color`.
ColoredGraph one_skeleton(const SimplicialComplex& k, const std::vector<int>& color, int n_colors);

// Candidate map for the finite model: source quadrant, tails of one vertical
// and one horizontal ray of the region, plus finitely many extra points.
struct CandidateMap {
  int quadrant = 1;
  std::size_t vray_index = 0;
  Int v_offset = 0;
  std::size_t hray_index = 0;
  Int h_offset = 0;
  std::vector<Point> extra_points;
};

RegionDecomposition candidate_image(const RegionDecomposition& region, const CandidateMap& c);
SimplicialComplex finite_sigma_alpha(int n, const RegionDecomposition& region,
                                     const std::vector<CandidateMap>& candidates);

// complete n-partite graph with parts of `part` vertices, then each edge
// dropped with probability `drop`
ColoredGraph random_colored_graph(int n, const std::vector<int>& parts, double drop, std::mt19937_64& rng);

}  // namespace houghton
