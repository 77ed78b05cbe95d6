#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resupal/restricted.hpp"
#include "resupal/superalgebra.hpp"

namespace resupal {

// Coefficient module: graded basis m_0..m_{d-1} and one action matrix per basis element of L.
struct CoeffModule {
  std::string kind;
  std::vector<int> parity;
  std::vector<Matrix> action;

  std::size_t dim() const { return parity.size(); }
  SDim sdim() const;
  // Sum of x_i * action_i.
  Matrix act(const Field& f, const Vec& x) const;

  static CoeffModule trivial(const SuperAlgebra& L, int parity = 0);
  static CoeffModule adjoint(const SuperAlgebra& L);
};

// Super module law on basis pairs; with a p-map also the restricted law on the even basis.
AxiomReport check_module(const SuperAlgebra& L, const CoeffModule& M, const PMap* P = nullptr);

// Basis of C^k(L;M): canonical argument tuples (nondecreasing, no repeated even index) times module slots.
class CochainSpace {
 public:
  CochainSpace(const SuperAlgebra& L, const CoeffModule& M, std::size_t k);

  std::size_t degree() const { return k_; }
  std::size_t module_dim() const { return parity_m_.size(); }
  std::size_t tuple_count() const { return tuples_.size(); }
  std::size_t dim() const { return tuples_.size() * parity_m_.size(); }
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
  std::size_t column(std::size_t tuple, std::size_t slot) const { return tuple * module_dim() + slot; }
  int parity(std::size_t column) const;
  SDim sdim() const;
  // Sign (0, 1 or -1) and tuple index of an argument list of basis indices.
  std::pair<int, std::size_t> canonical(std::vector<std::size_t> args) const;
  std::optional<std::size_t> tuple_index(const std::vector<std::size_t>& t) const;
  // "D13" for scalar modules, "e2⊗D13" otherwise; indices are 1-based.
  std::string describe(std::size_t column, const SuperAlgebra& L) const;
  std::string describe_vector(const Vec& coeffs, const SuperAlgebra& L) const;

 private:
  std::size_t k_;
  std::vector<int> parity_l_;
  std::vector<int> parity_m_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> lookup_;
};

// Multilinear: cochains are super-antisymmetric multilinear maps, differential as printed.
// Polynomial: cochains are polynomials in the parity-shifted dual basis, differential a derivation.
// The two agree in degrees below the characteristic.
enum class CochainModel { Multilinear, Polynomial };

SDim cochain_dims(const SuperAlgebra& L, const CoeffModule& M, std::size_t k);
// Multilinear super-antisymmetric evaluation; throws DegreeMismatch.
Vec evaluate_cochain(const SuperAlgebra& L, const CochainSpace& C, const Vec& coeffs, const std::vector<Vec>& args);
// Matrix of d^k from C^k to C^{k+1}.
Matrix d_ce(const SuperAlgebra& L, const CoeffModule& M, std::size_t k,
            CochainModel model = CochainModel::Multilinear);
SDim h_ce_dims(const SuperAlgebra& L, const CoeffModule& M, std::size_t k,
               CochainModel model = CochainModel::Multilinear);
// d^2 on multilinear 2-cochains; for the polynomial model the form is first mapped to its polynomial.
Matrix d2_on_forms(const SuperAlgebra& L, const CoeffModule& M, CochainModel model);
// Basis of Z^k(L;M) in multilinear coordinates. The polynomial model is supported up to degree 2.
std::vector<Vec> ce_cocycles(const SuperAlgebra& L, const CoeffModule& M, std::size_t k,
                             CochainModel model = CochainModel::Multilinear);

// (phi, omega) with omega given on the even basis.
struct RestrictedCochain2 {
  Vec phi;
  std::vector<Vec> omega;
};

// omega extended to any even vector by the ascending fold of the compatibility rule.
Vec omega_extend(const SuperAlgebra& L, const CoeffModule& M, const RestrictedCochain2& c, const Vec& x);
// Correction term of the compatibility rule for the pair (x, y).
Vec compat_correction(const SuperAlgebra& L, const CoeffModule& M, const Vec& phi, const Vec& x, const Vec& y);
AxiomReport phi_compat_check(const SuperAlgebra& L, const CoeffModule& M, const RestrictedCochain2& c,
                             const VerifyBudget& budget = {});

// Values on the even basis.
std::vector<Vec> ind1(const RestrictedAlgebra& R, const CoeffModule& M, const Vec& psi);
RestrictedCochain2 d1_star(const RestrictedAlgebra& R, const CoeffModule& M, const Vec& psi);
// beta(x, y) for an arbitrary x and even y.
Vec ind2_at(const RestrictedAlgebra& R, const CoeffModule& M, const RestrictedCochain2& c, const Vec& x, const Vec& y);
// beta on basis pairs: result[i][j] for basis e_i and even basis e_j.
std::vector<std::vector<Vec>> ind2(const RestrictedAlgebra& R, const CoeffModule& M, const RestrictedCochain2& c);

// Degree-2 restricted cohomology. Vectors are laid out as [phi coefficients | omega(e_j) slots].
struct RestrictedH2 {
  std::size_t phi_dim = 0;
  std::size_t module_dim = 0;
  std::size_t even_dim = 0;
  std::vector<Vec> cocycles;
  std::vector<Vec> coboundaries;  // spanning set of B, reduced to a basis
  std::vector<Vec> representatives;
  bool verified = true;  // every cocycle basis vector passed phi_compat_check
  std::size_t dim() const { return representatives.size(); }

  RestrictedCochain2 unpack(const Vec& v) const;
  Vec pack(const RestrictedCochain2& c) const;
};

// The model only selects the d^2 used for the cocycle condition; cochains stay multilinear forms.
RestrictedH2 h2_res(const RestrictedAlgebra& R, const CoeffModule& M,
                    CochainModel model = CochainModel::Multilinear);
// Cocycles with even phi and omega into M_ev, modulo coboundaries of even 1-cochains.
RestrictedH2 h2_res_plus_even(const RestrictedAlgebra& R, const CoeffModule& M,
                              CochainModel model = CochainModel::Multilinear);
SDim h1_res_dims(const RestrictedAlgebra& R, const CoeffModule& M);

}  // namespace resupal
