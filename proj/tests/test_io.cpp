#include <doctest.h>

#include "houghton/io.hpp"
#include "houghton/random.hpp"

using namespace houghton;

TEST_CASE("element documents round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenMap g = random_element(ElementKind::Gtilde, 1 + seed % 3, {}, seed);
    Json j = to_json(g);
    CHECK(genmap_from_json(parse_json_text(j.dump())) == g);
  }
}

TEST_CASE("field order is fixed") {
  Json j = to_json(identity_map(2));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "x0", "y0", "m", "colmap", "rowmap", "rect"});
}

TEST_CASE("incomplete tables are parse errors") {
  Json j = to_json(t_generator(2, 1));
  j["x0"] = 2;
  try {
    genmap_from_json(j);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK_THROWS(parse_json_text("{not json"));
}

TEST_CASE("points") {
  CHECK(parse_point("((6,5),1)") == Point{6, 5, 1});
  CHECK(parse_point("6,5,1") == Point{6, 5, 1});
  CHECK(parse_point("[6, 5, 1]") == Point{6, 5, 1});
  CHECK_THROWS(parse_point("(6,5)"));
}

TEST_CASE("complex documents round trip") {
  SimplicialComplex k = sigma_nk(2, 3);
  CHECK(complex_from_json(to_json(k)).facets == k.facets);
}
