#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resupal/catalog.hpp"
#include "resupal/cohomology.hpp"
#include "resupal/restricted.hpp"
#include "resupal/superalgebra.hpp"

namespace resupal {

struct AutGroup {
  std::vector<GradedMap> elements;
  bool complete = true;
};

// |GL_n(q)| * |GL_m(q)|, saturating at UINT64_MAX.
std::uint64_t graded_gl_order(const Field& f, SDim s);

// Exhaustive, in a fixed order. Throws BoundExceeded when the graded GL order exceeds the bound.
AutGroup enumerate_aut(const SuperAlgebra& L);
AutGroup enumerate_aut_p(const RestrictedAlgebra& R);
// A subset of G.elements generating the same group, checked by closure.
std::vector<GradedMap> generating_set(const AutGroup& G);

// Bracket- (and p-map-) preserving invertible graded maps, or nullopt when none exists over the
// field of definition. Throws DimensionMismatch, BoundExceeded.
std::optional<GradedMap> isomorphism_search(const SuperAlgebra& a, const SuperAlgebra& b);
std::optional<GradedMap> restricted_isomorphism_search(const RestrictedAlgebra& a, const RestrictedAlgebra& b);

// Matrix of phi -> phi(A., ..., A.) on scalar k-cochains.
Matrix cochain_action_matrix(const SuperAlgebra& L, const GradedMap& A, std::size_t k);
// Pull-back of a scalar cochain. Throws NotAutomorphism.
Vec act_on_cocycle(const SuperAlgebra& L, const GradedMap& A, const Vec& phi, std::size_t k = 2);
RestrictedCochain2 act_on_cocycle(const RestrictedAlgebra& R, const GradedMap& A, const RestrictedCochain2& c);

struct Orbit {
  Vec representative;  // lexicographically least normal form in the orbit
  std::size_t size = 0;
};

// Classes of H^2(L;K) as normal forms modulo B^2, indexed by base-q digits of their
// coordinates in the echelon basis of the class space.
struct OrbitTable {
  OrbitTable(const Field& f, std::size_t n) : coboundaries(f, n), classes(f, n) {}

  Subspace coboundaries;
  Subspace classes;
  std::vector<std::size_t> orbit_id;
  std::vector<Orbit> orbits;
  std::size_t aut_order = 0;

  Vec normal_form(const Vec& cocycle) const { return coboundaries.reduce(cocycle); }
  // Throws NotACocycle when the normal form is outside the class space.
  std::uint64_t class_index(const Vec& cocycle) const;
  std::size_t orbit_of(const Vec& cocycle) const { return orbit_id.at(class_index(cocycle)); }
};

// The polynomial model excludes forms that are cocycles only because 3 = 0 and whose
// extensions break [y,[y,y]] = 0. Throws BoundExceeded when the class space exceeds 10^6.
OrbitTable cocycle_orbits(const SuperAlgebra& L, std::optional<int> parity = std::nullopt,
                          CochainModel model = CochainModel::Polynomial);

struct Fingerprint {
  SDim sdim;
  SDim derived;
  SDim center;
  std::optional<std::size_t> nilindex;
  SDim h[4];  // H^1..H^4 with trivial coefficients
  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

Fingerprint fingerprint(const SuperAlgebra& L, CochainModel model = CochainModel::Polynomial);
std::vector<Fingerprint> fingerprint(const AlgebraDef& def, const std::vector<unsigned>& primes);

}  // namespace resupal
