#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>

#include "generators.hpp"
#include "resupal/catalog.hpp"
#include "resupal/cohomology.hpp"
#include "resupal/equivalence.hpp"
#include "resupal/errors.hpp"

using namespace resupal;

namespace {

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1, qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  for (std::size_t i = 0, qi = 1; i < n; ++i, qi *= q) r *= qn - qi;
  return r;
}

Vec delta(const SuperAlgebra& L, std::size_t i, std::size_t j, Scalar c = 1) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Vec v(C.dim(), 0);
  v[C.column(*C.tuple_index({i, j}), 0)] = c;
  return v;
}

}  // namespace

TEST_CASE("graded GL order") {
  Field f3 = Field::prime(3);
  CHECK(graded_gl_order(f3, {1, 2}) == 96);
  CHECK(graded_gl_order(f3, {2, 2}) == 48 * 48);
  CHECK(graded_gl_order(Field::prime(5), {3, 1}) == gl_order(5, 3) * 4);
  CHECK(graded_gl_order(Field::quadratic(3), {2, 0}) == gl_order(9, 2));
}

TEST_CASE("automorphism groups by counting") {
  Field f = Field::prime(3);
  // Abelian: the whole graded GL.
  AutGroup A = enumerate_aut(catalog_get("L_{1|2}^1", f).algebra);
  CHECK(A.elements.size() == 96);
  CHECK(A.complete);
  // Heisenberg: GL_2 on (e1, e2) with e3 -> det e3, plus e1, e2 shifted along e3.
  SuperAlgebra H = catalog_get("L_{3|0}^2", f).algebra;
  AutGroup G = enumerate_aut(H);
  CHECK(G.elements.size() == 48 * 9);
  for (const auto& g : G.elements) CHECK(preserves_brackets(g, H, H));
  // Closed under composition on a sample.
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    const auto& a = G.elements[rng() % G.elements.size()];
    const auto& b = G.elements[rng() % G.elements.size()];
    CHECK(preserves_brackets(a.compose(b), H, H));
  }
}

TEST_CASE("generating sets close up to the whole group") {
  for (const char* name : {"L_{3|0}^2", "L_{1|2}^4", "L_{2|1}^2"}) {
    AutGroup G = enumerate_aut(catalog_get(name, 3u).algebra);
    auto gens = generating_set(G);
    CHECK(gens.size() < 8);
    std::vector<GradedMap> seen{G.elements.front().compose(*G.elements.front().inverse())};
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (const auto& g : gens) {
        GradedMap h = seen[k].compose(g);
        if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(h);
      }
    CAPTURE(name);
    CHECK(seen.size() == G.elements.size());
  }
}

TEST_CASE("automorphisms preserve p-maps") {
  CatalogAlgebra A = catalog_get("L_{3|0}^1", 3u);
  RestrictedAlgebra R = RestrictedAlgebra::make(A.algebra, A.pmaps[2].pmap);
  AutGroup G = enumerate_aut_p(R);
  CHECK(!G.elements.empty());
  for (const auto& g : G.elements) CHECK(check_restricted_morphism(g, R, R));
  CHECK(G.elements.size() < enumerate_aut(R.algebra).elements.size());
}

TEST_CASE("pull-back of cocycles: explicit values and contravariance") {
  Field f = Field::prime(3);
  SuperAlgebra L = catalog_get("L_{1|2}^1", f).algebra;
  Matrix ev = Matrix::identity(f, 1), od = Matrix::identity(f, 2);
  od.at(0, 0) = 2;  // e2 -> 2 e2
  GradedMap A(ev, od);
  CHECK(act_on_cocycle(L, A, delta(L, 1, 1)) == delta(L, 1, 1));  // 2*2 = 1
  CHECK(act_on_cocycle(L, A, delta(L, 1, 2)) == delta(L, 1, 2, 2));
  CHECK(act_on_cocycle(L, A, delta(L, 2, 2)) == delta(L, 2, 2));

  std::mt19937_64 rng(17);
  AutGroup G = enumerate_aut(L);
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  for (int t = 0; t < 30; ++t) {
    const auto& a = G.elements[rng() % G.elements.size()];
    const auto& b = G.elements[rng() % G.elements.size()];
    Vec phi = random_vector(f, C.dim(), rng);
    CHECK(act_on_cocycle(L, b, act_on_cocycle(L, a, phi)) == act_on_cocycle(L, a.compose(b), phi));
  }
}

TEST_CASE("the action preserves cocycles and coboundaries") {
  std::mt19937_64 rng(18);
  SuperAlgebra L = catalog_get("L_{1|2}^4", 3u).algebra;
  CoeffModule K = CoeffModule::trivial(L);
  AutGroup G = enumerate_aut(L);
  auto Z = ce_cocycles(L, K, 2, CochainModel::Polynomial);
  CochainSpace C(L, K, 2);
  Subspace Zs(L.field(), C.dim(), Z);
  Matrix d1 = d_ce(L, K, 1);
  std::vector<Vec> B;
  for (std::size_t c = 0; c < d1.cols(); ++c) B.push_back(d1.col_vec(c));
  Subspace Bs(L.field(), C.dim(), B);
  for (int t = 0; t < 20; ++t) {
    const auto& g = G.elements[rng() % G.elements.size()];
    for (const auto& z : Z) CHECK(Zs.contains(act_on_cocycle(L, g, z)));
    for (const auto& b : Bs.basis()) CHECK(Bs.contains(act_on_cocycle(L, g, b)));
  }
  SuperAlgebra H = catalog_get("L_{3|0}^2", 3u).algebra;
  Matrix m = Matrix::identity(H.field(), 3);
  m.at(2, 2) = 2;  // e3 -> 2 e3 alone breaks [e1,e2] = e3
  CHECK_THROWS_AS(act_on_cocycle(H, GradedMap(m, Matrix(H.field(), 0, 0)), Vec(CochainSpace(H, CoeffModule::trivial(H), 2).dim(), 0)),
                  NotAutomorphism);
}

TEST_CASE("fingerprints are invariant under random changes of basis") {
  std::mt19937_64 rng(19);
  // Purely even 4-dim algebras have |GL_4(F_3)| above the search bound.
  std::vector<std::string> names;
  for (const auto& n : classification_names(4))
    if (catalog_get(n, 3u).algebra.odd_dim() > 0) names.push_back(n);
  for (int t = 0; t < 24; ++t) {
    const auto& name = names[rng() % names.size()];
    SuperAlgebra L = catalog_get(name, 3u).algebra;
    GradedMap A = gen::graded_invertible(L.field(), L.sdim(), rng);
    SuperAlgebra T = transport(L, A);
    CAPTURE(name);
    CHECK(fingerprint(T) == fingerprint(L));
    auto w = isomorphism_search(L, T);
    REQUIRE(w);
    CHECK(preserves_brackets(*w, L, T));
  }
}

TEST_CASE("isomorphism search separates distinct algebras") {
  Field f = Field::prime(3);
  CHECK_FALSE(isomorphism_search(catalog_get("L_{2|2}^b", f).algebra, catalog_get("L_{2|2}^c", f).algebra));
  CHECK_THROWS_AS(isomorphism_search(catalog_get("L_{2|2}^b", f).algebra, catalog_get("L_{1|3}^b", f).algebra),
                  DimensionMismatch);
  CatalogAlgebra A = catalog_get("L_{2|2}^3", f);
  RestrictedAlgebra Ra = RestrictedAlgebra::make(A.algebra, A.pmaps[0].pmap);
  RestrictedAlgebra Rb = RestrictedAlgebra::make(A.algebra, A.pmaps[1].pmap);
  CHECK_FALSE(restricted_isomorphism_search(Ra, Rb));
  CHECK(restricted_isomorphism_search(Rb, Rb));
}

TEST_CASE("cocycle orbits partition the class space") {
  for (const char* name : {"L_{1|2}^1", "L_{1|2}^4", "L_{2|1}^1"}) {
    SuperAlgebra L = catalog_get(name, 3u).algebra;
    OrbitTable T = cocycle_orbits(L);
    std::size_t total = 0;
    for (std::size_t k = 0; k < T.orbits.size(); ++k) {
      total += T.orbits[k].size;
      CHECK(T.orbit_of(T.orbits[k].representative) == k);
      CHECK(T.aut_order % T.orbits[k].size == 0);
    }
    CHECK(total == count_vectors(L.field(), T.classes.dim()));
    CHECK(T.aut_order == enumerate_aut(L).elements.size());
  }
}

TEST_CASE("automorphism enumeration respects the bound") {
  setenv("RESUPAL_BOUND", "1000", 1);
  CHECK_THROWS_AS(enumerate_aut(catalog_get("L_{2|2}^a", 3u).algebra), BoundExceeded);
  unsetenv("RESUPAL_BOUND");
}
