#pragma once

#include <cstdint>
#include <vector>

#include "resupal/superalgebra.hpp"

namespace resupal {

// Upper limit on enumeration sizes; RESUPAL_BOUND overrides the default of 10^7.
std::uint64_t enumeration_bound();

// Values e_j^[p] for the even basis vectors, in index order.
struct PMap {
  std::vector<Vec> values;
  bool verified = false;

  static PMap zero(const SuperAlgebra& L);
  bool operator==(const PMap& o) const { return values == o.values; }
};

struct RestrictedAlgebra {
  SuperAlgebra algebra;
  PMap pmap;

  // Runs check_pmap_axioms and throws on any violation.
  static RestrictedAlgebra make(SuperAlgebra L, PMap P);
  static RestrictedAlgebra unverified(SuperAlgebra L, PMap P);
};

struct VerifyBudget {
  std::uint64_t exhaustive_limit = 2000;
  int random_samples = 200;
  std::uint64_t seed = 7;
};

Vec s_sum(const SuperAlgebra& L, const Vec& x, const Vec& y);
Vec pmap_eval(const SuperAlgebra& L, const PMap& P, const Vec& x);
inline Vec pmap_eval(const RestrictedAlgebra& R, const Vec& x) { return pmap_eval(R.algebra, R.pmap, x); }
AxiomReport check_pmap_axioms(const SuperAlgebra& L, const PMap& P, const VerifyBudget& budget = {});
// All p|2p-maps on L over its field, each verified; throws BoundExceeded.
std::vector<PMap> enumerate_pmaps(const SuperAlgebra& L);
bool is_p_nilpotent(const RestrictedAlgebra& R, bool force_exhaustive = false);

struct DerivationReport {
  std::vector<Matrix> even;  // full N x N matrices of even restricted derivations
  std::vector<Matrix> odd;
  SDim derivations;
  SDim inner;
  SDim quotient() const { return {derivations.even - inner.even, derivations.odd - inner.odd}; }
  bool verified = true;
};

DerivationReport restricted_derivations(const RestrictedAlgebra& R);
bool check_restricted_morphism(const GradedMap& f, const RestrictedAlgebra& R1, const RestrictedAlgebra& R2,
                               std::uint64_t seed = 11);

Matrix matrix_power(const Matrix& m, std::uint64_t e);

}  // namespace resupal
