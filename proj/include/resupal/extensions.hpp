#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "resupal/cohomology.hpp"
#include "resupal/restricted.hpp"
#include "resupal/superalgebra.hpp"

namespace resupal {

// The new central element is appended at the end of its parity block.
// new_index[i] is the position of old basis vector i; x_index the position of X.
struct ExtensionLayout {
  std::vector<std::size_t> new_index;
  std::size_t x_index = 0;
};
ExtensionLayout extension_layout(const SuperAlgebra& base, int x_parity);

// Scalar 2-cochain evaluated on basis vectors e_i, e_j.
Scalar scalar_cochain_at(const SuperAlgebra& L, const Vec& delta, std::size_t i, std::size_t j);

// [x,y]_new = [x,y] + delta(x,y) X. The parity of X is inferred from a nonzero delta
// and must be given for delta = 0. Throws NotACocycle.
SuperAlgebra central_extend(const SuperAlgebra& L, const Vec& delta, std::optional<int> x_parity = std::nullopt,
                            const std::string& name = "X");

struct RestrictedExtension {
  RestrictedAlgebra base;
  RestrictedCochain2 cocycle;  // scalar: phi on C^2(L;K), omega values of size 1
  RestrictedAlgebra algebra;
  std::size_t x_index = 0;
};

// Even X with X^[p] = 0 and e_j^[p] = e_j^[p] + omega(e_j) X. The pair must be an even
// restricted cocycle with scalar values; throws NotACocycle.
RestrictedExtension central_extend(const RestrictedAlgebra& R, const RestrictedCochain2& c,
                                   const std::string& name = "X");

struct ExtensionEquivalence {
  bool equivalent = false;
  Vec psi;                           // even 1-cochain with b - a = d1_*(psi)
  std::optional<GradedMap> sigma;    // x + m  ->  x + m + psi(x) X, from the first extension to the second
  bool sigma_verified = false;
};

// Throws BaseMismatch when the two extensions do not share base algebra and p-map.
ExtensionEquivalence extensions_equivalent(const RestrictedExtension& a, const RestrictedExtension& b);

struct Quotient {
  SuperAlgebra algebra;
  PMap pmap;
  Matrix projection;           // dim(L)-1 x dim(L)
  std::size_t dropped = 0;     // basis index removed from L; the rest keep their order
};

// Quotient by the line spanned by a homogeneous central vector. For an even generator
// x^[p] = 0 is required. Throws NotCentral, NotPClosed.
Quotient quotient_by_central(const SuperAlgebra& L, const Vec& generator);
Quotient quotient_by_central(const RestrictedAlgebra& R, const Vec& generator);

struct Decomposition {
  Vec central;                 // X in the coordinates of the input
  int parity = 0;
  Quotient quotient;
  Vec delta;                   // scalar 2-cochain on the quotient
  std::vector<Scalar> omega;   // omega on the quotient's even basis; zero for odd X
  RestrictedAlgebra rebuilt;   // central extension of the quotient by (delta, omega)
  GradedMap iso;               // rebuilt -> input
  bool verified = false;
};

// Throws NoCenter.
Decomposition decompose_as_extension(const RestrictedAlgebra& R);

}  // namespace resupal
