#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "resupal/linalg.hpp"

using namespace resupal;

TEST_CASE("rank-nullity and nullspace vectors") {
  std::mt19937_64 rng(1);
  for (Field f : {Field::prime(3), Field::prime(7), Field::quadratic(3)})
    for (int t = 0; t < 40; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m = gen::matrix(f, r, c, rng);
      auto ns = nullspace(m);
      CHECK(rank(m) + ns.size() == c);
      for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
      CHECK(Subspace(f, c, ns).dim() == ns.size());
    }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(2);
  Field f = Field::prime(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 5;
    Matrix a = gen::invertible(f, n, rng);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(f, n));
    Vec x = gen::matrix(f, n, 1, rng).col_vec(0);
    auto y = solve(a, a.apply(x));
    REQUIRE(y);
    CHECK(*y == x);
  }
  Matrix singular(f, 2, 2);
  singular.at(0, 0) = 1;
  CHECK_FALSE(inverse(singular));
  CHECK_FALSE(solve(singular, Vec{0, 1}));
  auto empty = inverse(Matrix(f, 0, 0));
  CHECK(empty);
}

TEST_CASE("subspace membership, normal forms and coordinates") {
  std::mt19937_64 rng(3);
  Field f = Field::prime(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen::matrix(f, 6, 1, rng).col_vec(0));
    Subspace S(f, 6, gens);
    for (const auto& g : gens) {
      CHECK(S.contains(g));
      CHECK(is_zero(S.reduce(g)));
      auto c = S.coordinates(g);
      REQUIRE(c);
      Vec back(6, 0);
      for (std::size_t i = 0; i < c->size(); ++i) vec_axpy(f, back, (*c)[i], S.basis()[i]);
      CHECK(back == g);
    }
    Vec v = gen::matrix(f, 6, 1, rng).col_vec(0);
    Vec nf = S.reduce(v);
    CHECK(S.contains(vec_sub(f, v, nf)));
    for (std::size_t pc : S.pivots()) CHECK(nf[pc] == 0);
    CHECK(S.reduce(nf) == nf);
  }
}

TEST_CASE("matrix product is associative and transposes reverse order") {
  std::mt19937_64 rng(4);
  Field f = Field::quadratic(5);
  Matrix a = gen::matrix(f, 3, 4, rng), b = gen::matrix(f, 4, 2, rng), c = gen::matrix(f, 2, 5, rng);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}
