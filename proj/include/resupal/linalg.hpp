#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "resupal/field.hpp"

namespace resupal {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Scalar s, const Vec& a);
// a += s*b
void vec_axpy(const Field& f, Vec& a, Scalar s, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar* row(std::size_t r) { return a_.data() + r * cols_; }
  const Scalar* row(std::size_t r) const { return a_.data() + r * cols_; }
  Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
  Vec col_vec(std::size_t c) const;

  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  void append_row(const Vec& r);
  // Stacks the rows of o under this matrix.
  void append_rows(const Matrix& o);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace of F_q^n kept in reduced echelon form.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t n) : field_(f), n_(n) {}
  Subspace(const Field& f, std::size_t n, const std::vector<Vec>& gens);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Adds v; returns false if v was already in the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  // Normal form of v modulo the subspace: pivot coordinates cleared.
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the echelon basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace resupal
