#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "resupal/field.hpp"
#include "resupal/linalg.hpp"

namespace resupal {

// Superdimension (even|odd).
struct SDim {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::size_t total() const { return even + odd; }
  bool operator==(const SDim& o) const { return even == o.even && odd == o.odd; }
  bool operator!=(const SDim& o) const { return !(*this == o); }
};

std::string to_string(const SDim& s);

inline int koszul(int a, int b) { return (a & b) ? -1 : 1; }

// Finite-dimensional Lie superalgebra given by structure constants over F_q.
// Basis indices 0..n-1 are even, n..n+m-1 are odd.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(const Field& f, std::vector<std::string> even_names, std::vector<std::string> odd_names);

  const Field& field() const { return field_; }
  std::size_t even_dim() const { return n_; }
  std::size_t odd_dim() const { return m_; }
  std::size_t dim() const { return n_ + m_; }
  SDim sdim() const { return {n_, m_}; }
  int parity(std::size_t i) const { return i < n_ ? 0 : 1; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Sets [e_i, e_j] = v and [e_j, e_i] by super-antisymmetry.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  // Sets only [e_i, e_j]; used when loading possibly inconsistent input.
  void set_raw(std::size_t i, std::size_t j, const Vec& v);
  const Vec& structure(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }
  Vec zero_vector() const { return Vec(dim(), 0); }
  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad_x acting on column vectors.
  Matrix ad(const Vec& x) const;
  // 0 or 1 for homogeneous nonzero vectors, nullopt for mixed; zero counts as even.
  std::optional<int> vector_parity(const Vec& v) const;
  bool is_even(const Vec& v) const;
  bool is_abelian() const;

  bool operator==(const SuperAlgebra& o) const;
  bool operator!=(const SuperAlgebra& o) const { return !(*this == o); }

  std::string describe_brackets() const;
  std::string format_vector(const Vec& v) const;

 private:
  Field field_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec> c_;
};

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(const SuperAlgebra& L, std::uint64_t seed = 1);

// Homogeneous subspace stored as reduced echelon bases of its even and odd parts.
class GradedSubspace {
 public:
  GradedSubspace(const SuperAlgebra& L) : even_(L.field(), L.dim()), odd_(L.field(), L.dim()), n_(L.even_dim()) {}

  // Adds the even and odd components of v separately.
  void add(const Vec& v);
  bool contains(const Vec& v) const;
  SDim sdim() const { return {even_.dim(), odd_.dim()}; }
  std::size_t dim() const { return even_.dim() + odd_.dim(); }
  const Subspace& even_part() const { return even_; }
  const Subspace& odd_part() const { return odd_; }
  std::vector<Vec> basis() const;

 private:
  Subspace even_;
  Subspace odd_;
  std::size_t n_;
};

GradedSubspace center(const SuperAlgebra& L);
GradedSubspace derived_subalgebra(const SuperAlgebra& L);
std::vector<GradedSubspace> lower_central_series(const SuperAlgebra& L);
// Smallest k with C^k = 0 where C^0 = L; throws NotNilpotent.
std::size_t nilindex(const SuperAlgebra& L);

// Parity-preserving linear map given by its even and odd blocks.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(Matrix even_block, Matrix odd_block);
  static GradedMap identity(const Field& f, SDim s);
  // Columns are images of basis vectors; throws if an image is not homogeneous of the right parity.
  static GradedMap from_images(const Field& f, SDim s, const std::vector<Vec>& images);

  const Matrix& even_block() const { return even_; }
  const Matrix& odd_block() const { return odd_; }
  SDim sdim() const { return {even_.rows(), odd_.rows()}; }
  Matrix full() const;
  Vec apply(const Vec& v) const;
  GradedMap compose(const GradedMap& inner) const;
  std::optional<GradedMap> inverse() const;
  bool operator==(const GradedMap& o) const { return even_ == o.even_ && odd_ == o.odd_; }

 private:
  Matrix even_;
  Matrix odd_;
};

// True if f[e_i,e_j] = [f e_i, f e_j] for all basis pairs.
bool preserves_brackets(const GradedMap& f, const SuperAlgebra& src, const SuperAlgebra& dst);
// Structure constants of the algebra transported along an invertible graded map.
SuperAlgebra transport(const SuperAlgebra& L, const GradedMap& A);

// Random helpers used by samplers.
Vec random_vector(const Field& f, std::size_t n, std::mt19937_64& rng);
Vec random_even(const SuperAlgebra& L, std::mt19937_64& rng);
Vec random_odd(const SuperAlgebra& L, std::mt19937_64& rng);
// Vector with coordinates given by the base-q digits of idx over the index range [lo, hi).
Vec vector_from_index(const SuperAlgebra& L, std::size_t lo, std::size_t hi, std::uint64_t idx);
std::uint64_t count_vectors(const Field& f, std::size_t k);

}  // namespace resupal
