#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "generators.hpp"
#include "resupal/catalog.hpp"
#include "resupal/errors.hpp"
#include "resupal/restricted.hpp"

using namespace resupal;

namespace {

// Correction term by interpolation: ad(t x + y)^{p-1}(x) = sum_i i s_i t^{i-1}, read off at t = 0..p-1.
Vec s_sum_by_interpolation(const SuperAlgebra& L, const Vec& x, const Vec& y) {
  const Field& f = L.field();
  const unsigned p = f.characteristic();
  std::vector<Vec> values;
  for (Scalar t = 0; t < p; ++t) {
    Vec z = vec_add(f, vec_scale(f, t, x), y);
    Vec v = x;
    for (unsigned k = 0; k + 1 < p; ++k) v = L.bracket(z, v);
    values.push_back(v);
  }
  // Lagrange: coefficients of the degree <= p-2 polynomial through the p points.
  std::vector<Vec> coeff(p, Vec(L.dim(), 0));
  for (Scalar j = 0; j < p; ++j) {
    std::vector<Scalar> basis = {1};
    Scalar denom = 1;
    for (Scalar m = 0; m < p; ++m) {
      if (m == j) continue;
      std::vector<Scalar> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], basis[k]);
        next[k] = f.sub(next[k], f.mul(m, basis[k]));
      }
      basis = next;
      denom = f.mul(denom, f.sub(j, m));
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
      vec_axpy(f, coeff[k], f.div(basis[k], denom), values[j]);
  }
  Vec s(L.dim(), 0);
  for (unsigned i = 1; i < p; ++i) vec_axpy(f, s, f.inv(f.from_int(i)), coeff[i - 1]);
  return s;
}

}  // namespace

TEST_CASE("s_sum agrees with the interpolated lambda-expansion") {
  std::mt19937_64 rng(8);
  for (unsigned p : {3u, 5u, 7u}) {
    std::vector<SuperAlgebra> algs = {catalog_get("L_{4|0}^3", p).algebra, build_K(4, 2, p), build_K(3, 3, p)};
    for (const auto& L : algs)
      for (int t = 0; t < 20; ++t) {
        Vec x = random_even(L, rng), y = random_even(L, rng);
        CHECK(s_sum(L, x, y) == s_sum_by_interpolation(L, x, y));
      }
  }
}

TEST_CASE("p-map laws on the catalog: additivity defect and semilinearity") {
  std::mt19937_64 rng(9);
  for (unsigned p : {3u, 5u})
    for (std::size_t n : {3u, 4u})
      for (const auto& name : classification_names(n)) {
        CatalogAlgebra A = catalog_get(name, p);
        const Field& f = A.algebra.field();
        for (const auto& lp : A.pmaps) {
          for (int t = 0; t < 10; ++t) {
            Vec x = random_even(A.algebra, rng), y = random_even(A.algebra, rng);
            Scalar l = gen::scalar(f, rng);
            Vec sum = vec_add(f, pmap_eval(A.algebra, lp.pmap, x), pmap_eval(A.algebra, lp.pmap, y));
            sum = vec_add(f, sum, s_sum(A.algebra, x, y));
            CHECK(pmap_eval(A.algebra, lp.pmap, vec_add(f, x, y)) == sum);
            CHECK(pmap_eval(A.algebra, lp.pmap, vec_scale(f, l, x)) ==
                  vec_scale(f, f.pow(l, p), pmap_eval(A.algebra, lp.pmap, x)));
            // ad of x^[p] is the p-th power of ad x.
            CHECK(A.algebra.ad(pmap_eval(A.algebra, lp.pmap, x)) == matrix_power(A.algebra.ad(x), p));
          }
        }
      }
}

TEST_CASE("enumerate_pmaps matches counting oracles") {
  // Abelian with even part of dim 2: any values in the even part, q^(2*2) maps.
  for (unsigned p : {3u, 5u}) {
    SuperAlgebra L = catalog_get("L_{2|1}^1", p).algebra;
    CHECK(enumerate_pmaps(L).size() == std::size_t(p) * p * p * p);
  }
  // Heisenberg: e^[p] must be central, values in span(e3): q^3 maps.
  SuperAlgebra H = catalog_get("L_{3|0}^2", 3u).algebra;
  CHECK(enumerate_pmaps(H).size() == 27);
  // Purely odd: only the empty map.
  CHECK(enumerate_pmaps(catalog_get("L_{0|3}^1", 3u).algebra).size() == 1);
}

TEST_CASE("enumeration respects the bound") {
  SuperAlgebra L = catalog_get("L_{3|0}^1", 5u).algebra;
  setenv("RESUPAL_BOUND", "100", 1);
  CHECK_THROWS_AS(enumerate_pmaps(L), BoundExceeded);
  unsetenv("RESUPAL_BOUND");
}

TEST_CASE("p-nilpotency") {
  Field f = Field::prime(3);
  SuperAlgebra L = catalog_get("L_{3|0}^1", f).algebra;
  PMap shift = PMap::zero(L);
  shift.values[0] = L.basis_vector(1);
  shift.values[1] = L.basis_vector(2);
  CHECK(is_p_nilpotent(RestrictedAlgebra::make(L, shift)));
  PMap identity = PMap::zero(L);
  identity.values[0] = L.basis_vector(0);
  CHECK_FALSE(is_p_nilpotent(RestrictedAlgebra::make(L, identity)));
}

TEST_CASE("invalid p-maps are rejected") {
  Field f = Field::prime(3);
  SuperAlgebra H = catalog_get("L_{3|0}^2", f).algebra;
  PMap bad = PMap::zero(H);
  bad.values[0] = H.basis_vector(1);  // not central
  CHECK_FALSE(check_pmap_axioms(H, bad).ok());
  CHECK_THROWS(RestrictedAlgebra::make(H, bad));
}

TEST_CASE("restricted derivations contain the inner ones") {
  for (const auto& name : classification_names(3)) {
    CatalogAlgebra A = catalog_get(name, 3u);
    for (const auto& lp : A.pmaps) {
      DerivationReport D = restricted_derivations(RestrictedAlgebra::make(A.algebra, lp.pmap));
      CHECK(D.inner.even <= D.derivations.even);
      CHECK(D.inner.odd <= D.derivations.odd);
      CHECK(D.verified);
    }
  }
  // Abelian with the zero map: every endomorphism is a restricted derivation.
  RestrictedAlgebra R = RestrictedAlgebra::make(catalog_get("L_{3|0}^1", 3u).algebra,
                                                PMap::zero(catalog_get("L_{3|0}^1", 3u).algebra));
  CHECK(restricted_derivations(R).derivations == SDim{9, 0});
}

TEST_CASE("restricted morphisms") {
  CatalogAlgebra A = catalog_get("L_{3|0}^1", 3u);
  RestrictedAlgebra R = RestrictedAlgebra::make(A.algebra, A.pmaps[2].pmap);
  CHECK(check_restricted_morphism(GradedMap::identity(R.algebra.field(), R.algebra.sdim()), R, R));
  GradedMap scale(Matrix::identity(R.algebra.field(), 3).scaled(2), Matrix(R.algebra.field(), 0, 0));
  // x -> 2x is a Lie map on an abelian algebra; it respects x^[3] only because 2^3 = 2.
  CHECK(check_restricted_morphism(scale, R, R));
}
