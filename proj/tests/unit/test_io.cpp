#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resupal/catalog.hpp"
#include "resupal/errors.hpp"
#include "resupal/io.hpp"

using namespace resupal;

TEST_CASE("JSON round trip of every catalog algebra and p-map") {
  for (Field f : {Field::prime(3), Field::prime(7), Field::quadratic(5)})
    for (const auto& name : catalog_names()) {
      CatalogAlgebra A = catalog_get(name, f);
      const PMap* P = A.pmaps.empty() ? nullptr : &A.pmaps.back().pmap;
      AlgebraDef def = parse_algebra_json(algebra_to_json(A.algebra, P));
      CAPTURE(name);
      CHECK(def.p == f.characteristic());
      CHECK(def.field_degree == f.degree());
      SuperAlgebra back = instantiate(def, field_for(def, f.characteristic()));
      CHECK(back == A.algebra);
      if (P) {
        REQUIRE(def.pmaps.size() == 1);
        CHECK(instantiate_pmap(def.pmaps[0], back) == *P);
      }
    }
}

TEST_CASE("coefficient formats") {
  const char* doc = R"({"p": 5, "even": ["a", "b"], "odd": ["y"],
    "brackets": [{"left": "y", "right": "y", "value": {"a": {"num": 1, "den": 2}, "b": -1}}]})";
  AlgebraDef def = parse_algebra_json(doc);
  SuperAlgebra L = instantiate(def, field_for(def, 5));
  Field f = L.field();
  CHECK(L.structure(2, 2)[0] == f.from_rational(1, 2));
  CHECK(L.structure(2, 2)[1] == f.from_int(-1));

  const char* quad = R"({"p": 3, "field_degree": 2, "even": ["a"], "odd": ["y"],
    "brackets": [{"left": "y", "right": "y", "value": {"a": [1, 2]}}]})";
  AlgebraDef q = parse_algebra_json(quad);
  SuperAlgebra Q = instantiate(q, field_for(q, 3));
  CHECK(Q.structure(1, 1)[0] == Q.field().make(1, 2));
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(parse_algebra_json("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json(R"({"even": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json(R"({"even": ["a"], "field_degree": 3})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json(R"({"even": ["a"], "brackets": [{"left": "a"}]})"), ParseError);
  CHECK_THROWS_AS(
      parse_algebra_json(R"({"even": ["a"], "brackets": [{"left": "a", "right": "a", "value": {"a": "x"}}]})"),
      ParseError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(load_algebra("catalog:L_{7|7}^q"), UnknownName);
}

TEST_CASE("text bracket lists") {
  auto br = parse_brackets("[e1,e2]=e3; [y,y]=2*x - 1/2*z");
  REQUIRE(br.size() == 2);
  CHECK(br[0].left == "e1");
  CHECK(br[1].value.size() == 2);
  CHECK(br[1].value[1].second.den == 2);
}
