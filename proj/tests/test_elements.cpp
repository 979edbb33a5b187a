#include <doctest.h>

#include <random>

#include "houghton/genmap.hpp"
#include "houghton/io.hpp"
#include "houghton/random.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

GenMap fixture(const std::string& name) {
  return genmap_from_json(read_json_file(std::string(HOUGHTON_FIXTURES) + "/" + name));
}

}  // namespace

TEST_CASE("bijection with unequal shifts") {
  GenMap g = fixture("gtilde2_bijection.json");
  MapClass c = validate(g);
  CHECK(c.is_bijective);
  CHECK(c.in_Gtilde);
  CHECK_FALSE(c.in_Gn);
  CHECK_FALSE(c.in_M);
  CHECK(phi(g) == std::vector<Int>{1, -1});
  CHECK(g.apply({6, 5, 1}) == Point{8, 6, 1});
}

TEST_CASE("apply matches the table interpreter") {
  GenMap g = fixture("gtilde2_bijection.json");
  oracle::TableMap f(read_json_file(std::string(HOUGHTON_FIXTURES) + "/gtilde2_bijection.json"));
  for (const auto& p : oracle::window(2, 12)) CHECK(g.apply(p) == f(p));
  CHECK(oracle::injective_on_window(f, 30));
  CHECK(oracle::complement_in_window(f, 15).empty());
}

TEST_CASE("identity classes") {
  MapClass c = validate(fixture("identity.json"));
  CHECK(c.is_bijective);
  CHECK(c.in_Gn);
  CHECK(c.in_M);
  CHECK(c.in_T);
}

TEST_CASE("collision is reported with a witness") {
  GenMap g = fixture("collide.json");
  try {
    validate(g);
    FAIL("expected a collision");
  } catch (const InjectivityError& e) {
    CHECK(e.code() == ErrorCode::NotInjective);
    CHECK(g.apply(e.first) == e.image);
    CHECK(g.apply(e.second) == e.image);
    CHECK(e.first != e.second);
  }
}

TEST_CASE("translations") {
  GenMap t1 = fixture("t1.json");
  CHECK(equals(t1, t_generator(2, 1)));
  MapClass c = validate(t1);
  CHECK_FALSE(c.is_bijective);
  CHECK(c.in_T);
  CHECK(c.in_M);
  GenMap t12 = compose(t1, fixture("t2.json"));
  CHECK(equals(t12, translation_map({1, 1})));
  CHECK(equals(compose(compose(t1, t1), fixture("t2.json")), fixture("t1t1t2.json")));
  CHECK_THROWS_AS(invert(t1), Error);
  try {
    invert(t1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
}

TEST_CASE("compose agrees pointwise and is associative on random elements") {
  std::mt19937_64 rng(11);
  Bounds b;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    GenMap f = random_gtilde(n, b, rng);
    GenMap g = random_m(n, b, rng);
    GenMap h = random_gn(n, b, rng);
    GenMap fg = compose(f, g);
    CHECK(fg == canonical(fg));
    for (const auto& p : oracle::window(n, 9)) REQUIRE(fg.apply(p) == g.apply(f.apply(p)));
    CHECK(equals(compose(fg, h), compose(f, compose(g, h))));
  }
}

TEST_CASE("inverse of random bijections") {
  std::mt19937_64 rng(5);
  Bounds b;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    GenMap g = trial % 2 ? random_gn(n, b, rng) : random_gtilde(n, b, rng);
    REQUIRE(validate(g).is_bijective);
    GenMap gi = invert(g);
    CHECK(equals(compose(g, gi), identity_map(n)));
    CHECK(equals(compose(gi, g), identity_map(n)));
    oracle::TableMap f(g);
    CHECK(oracle::injective_on_window(f, 14));
    CHECK(oracle::complement_in_window(f, 8).empty());
  }
}

TEST_CASE("random M elements are injective with diagonal shifts") {
  std::mt19937_64 rng(3);
  Bounds b;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    GenMap g = random_m(n, b, rng);
    MapClass c = validate(g);
    CHECK(c.in_M);
    CHECK(diagonal(g));
    CHECK(g.x0 <= b.threshold);
    CHECK(g.y0 <= b.threshold);
    CHECK(oracle::injective_on_window(oracle::TableMap(g), 14));
  }
}

TEST_CASE("canonical drops redundant thresholds") {
  GenMap g = identity_map(2);
  GenMap wide = tabulate(2, {{0, 0}, {0, 0}}, 6, 4, [](const Point& p) { return p; });
  CHECK(wide.x0 == 1);
  CHECK(wide.y0 == 1);
  CHECK(wide == g);
}

TEST_CASE("phi is a homomorphism and vanishes exactly on G_n") {
  std::mt19937_64 rng(17);
  Bounds b;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    GenMap f = random_gtilde(n, b, rng), g = random_gtilde(n, b, rng);
    auto pf = phi(f), pg = phi(g), pfg = phi(compose(f, g));
    for (int i = 0; i < n; ++i) CHECK(pfg[i] == pf[i] + pg[i]);
    Int sum = 0;
    for (Int v : pf) sum += v;
    CHECK(sum == 0);
    bool zero = std::all_of(pf.begin(), pf.end(), [](Int v) { return v == 0; });
    CHECK(zero == validate(f).in_Gn);
  }
}

TEST_CASE("projections are homomorphisms") {
  std::mt19937_64 rng(23);
  Bounds b;
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 3;
    GenMap f = random_gtilde(n, b, rng), g = random_gtilde(n, b, rng);
    CHECK(houghton_equals(project_pi(compose(f, g)), houghton_compose(project_pi(f), project_pi(g))));
    CHECK(houghton_equals(project_sigma(compose(f, g)), houghton_compose(project_sigma(f), project_sigma(g))));
  }
}

TEST_CASE("generators") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) {
      GenMap g = phi_generator(n, k);
      REQUIRE(validate(g).is_bijective);
      auto v = phi(g);
      for (int i = 0; i < n; ++i) CHECK(v[i] == (i == k - 1 ? 1 : i == k ? -1 : 0));
    }
  GenMap s = quadrant_shift(3, 1, 2);
  CHECK(validate(s).is_bijective);
  GenMap hole = column_hole(2, 2, 1);
  MapClass c = validate(hole);
  CHECK(c.in_M);
  CHECK_FALSE(c.is_bijective);
  CHECK(oracle::complement_in_window(oracle::TableMap(hole), 6).size() == 1);
}

TEST_CASE("houghton maps") {
  HoughtonMap h = houghton_from_json(read_json_file(std::string(HOUGHTON_FIXTURES) + "/houghton3.json"));
  CHECK(houghton_validate(h));
  HoughtonMap hi = houghton_invert(h);
  CHECK(houghton_equals(houghton_compose(h, hi), houghton_identity(3)));
  Int total = 0;
  for (Int v : h.m) total += v;
  CHECK(total == 0);
}
