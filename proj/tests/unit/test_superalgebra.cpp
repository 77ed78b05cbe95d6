#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "resupal/catalog.hpp"
#include "resupal/errors.hpp"
#include "resupal/superalgebra.hpp"

using namespace resupal;

TEST_CASE("super-antisymmetry of the bracket") {
  std::mt19937_64 rng(5);
  for (const auto& name : catalog_names()) {
    SuperAlgebra L = catalog_get(name, 5u).algebra;
    for (int t = 0; t < 10; ++t) {
      int a = rng() % 2, b = rng() % 2;
      Vec x = gen::homogeneous(L, a, rng), y = gen::homogeneous(L, b, rng);
      Vec lhs = L.bracket(x, y);
      Vec rhs = L.bracket(y, x);
      CHECK(lhs == vec_scale(L.field(), L.field().from_int(-koszul(a, b)), rhs));
    }
  }
}

TEST_CASE("check_axioms rejects broken structure constants") {
  Field f = Field::prime(3);
  // [e1,e1] = e2 for even e1 violates antisymmetry.
  SuperAlgebra L(f, {"e1", "e2"}, {});
  L.set_raw(0, 0, L.basis_vector(1));
  CHECK_FALSE(check_axioms(L).ok());

  // [x,y]=x, [x,z]=y: Jacobi on (x,y,z) gives -y.
  SuperAlgebra J(f, {"x", "y", "z"}, {});
  J.set_bracket(0, 1, J.basis_vector(0));
  J.set_bracket(0, 2, J.basis_vector(1));
  CHECK_FALSE(check_axioms(J).ok());

  // Odd y with [y,[y,y]] != 0.
  SuperAlgebra Y(f, {"x"}, {"y"});
  Y.set_bracket(1, 1, Y.basis_vector(0));
  Y.set_bracket(0, 1, Y.basis_vector(1));
  CHECK_FALSE(check_axioms(Y).ok());
}

TEST_CASE("catalog algebras pass the axioms over every small field") {
  for (Field f : {Field::prime(3), Field::prime(5), Field::prime(7), Field::quadratic(3)})
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      CHECK(check_axioms(catalog_get(name, f).algebra).ok());
    }
}

TEST_CASE("transport along random graded maps preserves brackets and axioms") {
  std::mt19937_64 rng(6);
  Field f = Field::prime(5);
  for (const auto& name : classification_names(4)) {
    SuperAlgebra L = catalog_get(name, f).algebra;
    GradedMap A = gen::graded_invertible(f, L.sdim(), rng);
    SuperAlgebra T = transport(L, A);
    CHECK(check_axioms(T).ok());
    CHECK(preserves_brackets(A, L, T));
    CHECK(center(T).sdim() == center(L).sdim());
    CHECK(derived_subalgebra(T).sdim() == derived_subalgebra(L).sdim());
    CHECK(nilindex(T) == nilindex(L));
  }
}

TEST_CASE("graded maps compose and invert") {
  std::mt19937_64 rng(7);
  Field f = Field::prime(3);
  SDim s{2, 3};
  GradedMap A = gen::graded_invertible(f, s, rng), B = gen::graded_invertible(f, s, rng);
  auto Ai = A.inverse();
  REQUIRE(Ai);
  CHECK(A.compose(*Ai) == GradedMap::identity(f, s));
  Vec v{1, 2, 0, 1, 2};
  CHECK(A.compose(B).apply(v) == A.apply(B.apply(v)));
  CHECK_THROWS(GradedMap::from_images(f, {1, 1}, {unit_vec(2, 1), unit_vec(2, 0)}));
}

TEST_CASE("centre, derived algebra and nilindex on known algebras") {
  Field f = Field::prime(3);
  SuperAlgebra H = catalog_get("L_{3|0}^2", f).algebra;  // Heisenberg
  CHECK(center(H).sdim() == SDim{1, 0});
  CHECK(derived_subalgebra(H).sdim() == SDim{1, 0});
  CHECK(nilindex(H) == 2);
  SuperAlgebra F = catalog_get("L_{4|0}^3", f).algebra;  // filiform
  CHECK(nilindex(F) == 3);
  CHECK(lower_central_series(F).size() >= 3);
  SuperAlgebra A = catalog_get("L_{0|3}^1", f).algebra;
  CHECK(A.is_abelian());
  CHECK(nilindex(A) == 1);

  SuperAlgebra N(f, {"h", "x"}, {});
  N.set_bracket(0, 1, N.basis_vector(1));
  CHECK_THROWS_AS(nilindex(N), NotNilpotent);
}

TEST_CASE("K-families satisfy the super-Jacobi identity") {
  for (unsigned p : {3u, 5u, 7u})
    for (int n = 2; n <= 4; ++n)
      for (int m = 1; m <= 7; ++m) {
        if (n == 4 && m % 2 && m != 5) {
          CHECK_THROWS_AS(build_K(n, m, p), UnsupportedPair);
          continue;
        }
        CAPTURE(n);
        CAPTURE(m);
        CHECK(check_axioms(build_K(n, m, p)).ok());
      }
}

TEST_CASE("catalog name normalisation") {
  CHECK(canonical_name("L^a_{2|2}") == canonical_name("L_{2|2}^a"));
  CHECK_THROWS_AS(catalog_def("L_{9|9}^z"), UnknownName);
  CHECK(classification_names(3).size() > 0);
  CHECK(working_names().size() == extension_recipes().size());
}
