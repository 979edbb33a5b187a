#include <doctest.h>

#include <random>

#include "houghton/complex.hpp"
#include "houghton/homology.hpp"
#include "houghton/io.hpp"
#include "houghton/poset.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

SimplicialComplex fixture(const std::string& name) {
  return complex_from_json(read_json_file(std::string(HOUGHTON_FIXTURES) + "/" + name));
}

SimplicialComplex with_facets(int vertices, std::vector<Simplex> facets) {
  SimplicialComplex k;
  for (int v = 0; v < vertices; ++v) k.labels.push_back("v" + std::to_string(v));
  k.facets = std::move(facets);
  return k;
}

// six-vertex projective plane
SimplicialComplex rp2() {
  return with_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

void check_against_oracle(const SimplicialComplex& k) {
  HomologyProfile p = reduced_homology(k);
  oracle::RationalProfile o = oracle::rational_profile(k);
  REQUIRE(p.degrees.size() == o.betti.size());
  for (std::size_t d = 0; d < o.betti.size(); ++d) {
    CHECK(p.degrees[d].betti == o.betti[d]);
    std::set<Int> primes;
    for (Int t : p.degrees[d].torsion)
      for (Int q : {2, 3, 5, 7})
        if (t % q == 0) primes.insert(q);
    CHECK(primes == o.torsion_primes[d]);
  }
  CHECK(p.euler_characteristic() == oracle::euler_from_faces(k));
}

}  // namespace

TEST_CASE("fixture complexes") {
  HomologyProfile h = reduced_homology(fixture("hollow_triangle.json"));
  CHECK(h.degrees[0].betti == 0);
  CHECK(h.degrees[1].betti == 1);
  CHECK(h.concentrated_in(1));
  HomologyProfile f = reduced_homology(fixture("full_simplex.json"));
  for (const auto& d : f.degrees) {
    CHECK(d.betti == 0);
    CHECK(d.torsion.empty());
  }
}

TEST_CASE("projective plane has Z/2 in degree 1") {
  HomologyProfile p = reduced_homology(rp2());
  REQUIRE(p.degrees.size() == 3);
  CHECK(p.degrees[0].betti == 0);
  CHECK(p.degrees[1].betti == 0);
  CHECK(p.degrees[1].torsion == std::vector<Int>{2});
  CHECK(p.degrees[2].betti == 0);
  check_against_oracle(rp2());
}

TEST_CASE("smith diagonal") {
  IntegerDiagonal d = smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(d.rank == 3);
  CHECK(d.invariant_factors == std::vector<Int>{2, 6, 12});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}).rank == 0);
  // entries that overflow 64-bit elimination
  Int big = Int(1) << 62;
  IntegerDiagonal e = smith_diagonal({{big, big - 1}, {big - 1, big - 2}});
  CHECK(e.rank == 2);
  CHECK(e.invariant_factors == std::vector<Int>{1, 1});
}

TEST_CASE("sigma_nk values") {
  CHECK(reduced_homology(sigma_nk(1, 3)).degrees[0].betti == 2);
  HomologyProfile s24 = reduced_homology(sigma_nk(2, 4));
  CHECK(s24.degrees[1].betti == 5);
  CHECK(s24.concentrated_in(1));
  CHECK(s24.euler_characteristic() == -4);
  HomologyProfile s22 = reduced_homology(sigma_nk(2, 2));
  CHECK(s22.degrees[0].betti == 1);
  check_against_oracle(sigma_nk(2, 5));
  check_against_oracle(sigma_nk(3, 4));
}

TEST_CASE("random complexes agree with the oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int v = 4 + static_cast<int>(rng() % 9);
    std::vector<Simplex> facets;
    int count = 2 + static_cast<int>(rng() % 10);
    for (int f = 0; f < count; ++f) {
      Simplex s;
      for (int x = 0; x < v; ++x)
        if (rng() % 3 == 0) s.push_back(x);
      if (s.empty()) s.push_back(static_cast<int>(rng() % v));
      if (s.size() > 5) s.resize(5);
      facets.push_back(s);
    }
    check_against_oracle(with_facets(v, facets));
  }
}

TEST_CASE("face cap") {
  CHECK_THROWS_AS(faces_by_dimension(sigma_nk(3, 6), 100), Error);
  try {
    faces_by_dimension(sigma_nk(3, 6), 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
}

TEST_CASE("order complex of a poset with a top is acyclic") {
  FinitePoset p;
  p.labels = {"a", "b", "c", "d", "top"};
  p.relations = {{0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
  HomologyProfile h = reduced_homology(order_complex(p));
  for (const auto& d : h.degrees) CHECK(d.betti == 0);
  p.relations.push_back({4, 0});
  CHECK_THROWS(order_complex(p));
}

TEST_CASE("order complex of a crown is a circle") {
  FinitePoset p;
  p.labels = {"a", "b", "c", "d"};
  p.relations = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  HomologyProfile h = reduced_homology(order_complex(p));
  CHECK(h.degrees[1].betti == 1);
}

TEST_CASE("nerve of a cover of a circle") {
  SimplicialComplex target = fixture("hollow_triangle.json");
  std::vector<SimplicialComplex> cover;
  for (const auto& f : target.facets) cover.push_back(with_facets(3, {f}));
  for (auto& c : cover) c.labels = target.labels;
  SimplicialComplex n = nerve(cover, target);
  CHECK(reduced_homology(n) == reduced_homology(target));
  cover.pop_back();
  CHECK_THROWS(nerve(cover, target));
}

TEST_CASE("gamma conditions") {
  std::mt19937_64 rng(7);
  ColoredGraph full = random_colored_graph(2, {4, 4}, 0.0, rng);
  GammaReport ok = check_gamma_conditions(full);
  CHECK(ok.ok);
  HomologyProfile p = reduced_homology(clique_complex(full));
  CHECK(p.concentrated_in(1));
  CHECK(p.degrees[1].betti == 9);
  ColoredGraph thin = random_colored_graph(2, {1, 4}, 0.0, rng);
  GammaReport bad = check_gamma_conditions(thin);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.message.empty());
}

TEST_CASE("finite sigma alpha model") {
  GenMap alpha = translation_map({2, 2});
  RegionDecomposition r = decompose(alpha);
  std::vector<CandidateMap> cands;
  for (int q = 1; q <= 2; ++q)
    for (std::size_t k = 0; k < 4; ++k) cands.push_back({q, k, 0, k, 0, {}});
  SimplicialComplex s = finite_sigma_alpha(2, r, cands);
  HomologyProfile h = reduced_homology(s);
  // disjoint ray pairs: the model is Sigma_{2,4}
  CHECK(h == reduced_homology(sigma_nk(2, 4)));
}
