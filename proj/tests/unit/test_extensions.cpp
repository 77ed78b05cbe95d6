#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "resupal/catalog.hpp"
#include "resupal/cohomology.hpp"
#include "resupal/errors.hpp"
#include "resupal/extensions.hpp"

using namespace resupal;

namespace {

// Random combination of the homogeneous cocycle basis vectors of one parity.
std::optional<Vec> random_cocycle(const SuperAlgebra& L, int parity, std::mt19937_64& rng) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Vec d(C.dim(), 0);
  for (const auto& z : ce_cocycles(L, CoeffModule::trivial(L), 2, CochainModel::Polynomial)) {
    std::size_t lead = 0;
    while (!z[lead]) ++lead;
    if (C.parity(lead) == parity) vec_axpy(L.field(), d, gen::scalar(L.field(), rng), z);
  }
  if (is_zero(d)) return std::nullopt;
  return d;
}

RestrictedCochain2 add(const Field& f, const RestrictedCochain2& a, const RestrictedCochain2& b) {
  RestrictedCochain2 c{vec_add(f, a.phi, b.phi), {}};
  for (std::size_t j = 0; j < a.omega.size(); ++j) c.omega.push_back(vec_add(f, a.omega[j], b.omega[j]));
  return c;
}

}  // namespace

TEST_CASE("scalar extensions satisfy the axioms and quotient back to the base") {
  std::mt19937_64 rng(14);
  for (unsigned p : {3u, 5u})
    for (const auto& name : classification_names(3)) {
      SuperAlgebra L = catalog_get(name, p).algebra;
      for (int parity : {0, 1})
        for (int t = 0; t < 5; ++t) {
          auto d = random_cocycle(L, parity, rng);
          if (!d) break;
          SuperAlgebra E = central_extend(L, *d);
          CAPTURE(name);
          CHECK(check_axioms(E).ok());
          std::size_t x = extension_layout(L, parity).x_index;
          CHECK(E.parity(x) == parity);
          Quotient Q = quotient_by_central(E, E.basis_vector(x));
          CHECK(Q.dropped == x);
          CHECK(Q.algebra == L);
          // The new bracket adds delta(e_i, e_j) X.
          for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
              auto li = extension_layout(L, parity).new_index;
              CHECK(E.structure(li[i], li[j])[x] == scalar_cochain_at(L, *d, i, j));
            }
        }
    }
}

TEST_CASE("non-cocycles and mixed parities are rejected") {
  SuperAlgebra L = catalog_get("L_{1|2}^3", 3u).algebra;  // [e1,e2] = e3
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Matrix d2 = d2_on_forms(L, CoeffModule::trivial(L), CochainModel::Multilinear);
  bool found = false;
  for (std::size_t c = 0; c < C.dim() && !found; ++c) {
    Vec v = unit_vec(C.dim(), c);
    if (!is_zero(d2.apply(v))) {
      CHECK_THROWS_AS(central_extend(L, v), NotACocycle);
      found = true;
    }
  }
  CHECK(found);
  Vec mixed(C.dim(), 0);
  for (std::size_t c = 0; c < C.dim(); ++c)
    if (C.parity(c) == 0) mixed[c] = 1;
  for (std::size_t c = 0; c < C.dim(); ++c)
    if (C.parity(c) == 1) {
      mixed[c] = 1;
      break;
    }
  CHECK_THROWS_AS(central_extend(L, mixed), NotACocycle);
  CHECK_THROWS_AS(central_extend(L, Vec(C.dim(), 0)), NotACocycle);
  CHECK(central_extend(L, Vec(C.dim(), 0), 1).sdim() == SDim{1, 3});
}

TEST_CASE("cohomologous restricted cocycles give equivalent extensions") {
  std::mt19937_64 rng(15);
  std::size_t checked = 0;
  while (checked < 120)
    for (const auto& name : classification_names(3)) {
      CatalogAlgebra A = catalog_get(name, 3u);
      const Field& f = A.algebra.field();
      for (const auto& lp : A.pmaps) {
        RestrictedAlgebra R = RestrictedAlgebra::make(A.algebra, lp.pmap);
        CoeffModule K = CoeffModule::trivial(R.algebra);
        RestrictedH2 H = h2_res_plus_even(R, K, CochainModel::Polynomial);
        if (H.cocycles.empty()) continue;
        Vec v(H.cocycles[0].size(), 0);
        for (const auto& z : H.cocycles) vec_axpy(f, v, gen::scalar(f, rng), z);
        RestrictedCochain2 a = H.unpack(v);
        Vec psi(R.algebra.dim(), 0);
        for (std::size_t j = 0; j < R.algebra.even_dim(); ++j) psi[j] = gen::scalar(f, rng);
        RestrictedCochain2 b = add(f, a, d1_star(R, K, psi));
        RestrictedExtension Ea = central_extend(R, a), Eb = central_extend(R, b);
        ExtensionEquivalence e = extensions_equivalent(Ea, Eb);
        CAPTURE(name);
        CHECK(e.equivalent);
        CHECK(e.sigma_verified);
        REQUIRE(e.sigma);
        CHECK(preserves_brackets(*e.sigma, Ea.algebra.algebra, Eb.algebra.algebra));
        ++checked;
      }
    }
}

TEST_CASE("non-cohomologous cocycles give inequivalent extensions") {
  RestrictedAlgebra R = RestrictedAlgebra::make(catalog_get("L_{1|2}^2", 3u).algebra,
                                                PMap::zero(catalog_get("L_{1|2}^2", 3u).algebra));
  CochainSpace C(R.algebra, CoeffModule::trivial(R.algebra), 2);
  Vec phi(C.dim(), 0);
  phi[C.column(*C.tuple_index({1, 1}), 0)] = 1;
  RestrictedExtension a = central_extend(R, {phi, {Vec{0}}});
  RestrictedExtension b = central_extend(R, {phi, {Vec{1}}});
  CHECK_FALSE(extensions_equivalent(a, b).equivalent);
  RestrictedAlgebra other = RestrictedAlgebra::make(catalog_get("L_{1|2}^1", 3u).algebra,
                                                    PMap::zero(catalog_get("L_{1|2}^1", 3u).algebra));
  RestrictedExtension c = central_extend(other, {Vec(C.dim(), 0), {Vec{0}}});
  CHECK_THROWS_AS(extensions_equivalent(a, c), BaseMismatch);
}

TEST_CASE("restricted extensions put omega into the p-map") {
  RestrictedAlgebra R = RestrictedAlgebra::make(catalog_get("L_{2|1}^1", 5u).algebra,
                                                PMap::zero(catalog_get("L_{2|1}^1", 5u).algebra));
  CochainSpace C(R.algebra, CoeffModule::trivial(R.algebra), 2);
  RestrictedExtension E = central_extend(R, {Vec(C.dim(), 0), {Vec{3}, Vec{0}}});
  Vec e1 = E.algebra.algebra.basis_vector(extension_layout(R.algebra, 0).new_index[0]);
  CHECK(pmap_eval(E.algebra, e1) == vec_scale(E.algebra.algebra.field(), 3, E.algebra.algebra.basis_vector(E.x_index)));
  CHECK(is_zero(pmap_eval(E.algebra, E.algebra.algebra.basis_vector(E.x_index))));
}

TEST_CASE("quotient errors") {
  CatalogAlgebra A = catalog_get("L_{3|0}^1", 3u);
  RestrictedAlgebra R = RestrictedAlgebra::make(A.algebra, A.pmaps[2].pmap);  // e1 -> e2 -> e3
  CHECK_THROWS_AS(quotient_by_central(R, R.algebra.basis_vector(1)), NotPClosed);
  CHECK_NOTHROW(quotient_by_central(R, R.algebra.basis_vector(2)));
  SuperAlgebra H = catalog_get("L_{3|0}^2", 3u).algebra;
  CHECK_THROWS_AS(quotient_by_central(H, H.basis_vector(0)), NotCentral);
}

TEST_CASE("decomposition of catalog algebras and of algebras without centre") {
  for (const auto& name : classification_names(4)) {
    CatalogAlgebra A = catalog_get(name, 5u);
    for (const auto& lp : A.pmaps) {
      Decomposition D = decompose_as_extension(RestrictedAlgebra::make(A.algebra, lp.pmap));
      CAPTURE(name);
      CHECK(D.verified);
      CHECK(D.quotient.algebra.dim() + 1 == A.algebra.dim());
    }
  }
  Field f = Field::prime(3);
  SuperAlgebra N(f, {"h", "x"}, {});
  N.set_bracket(0, 1, N.basis_vector(1));
  PMap P = PMap::zero(N);
  P.values[0] = N.basis_vector(0);
  CHECK_THROWS_AS(decompose_as_extension(RestrictedAlgebra::make(N, P)), NoCenter);
}
