#include "resupal/linalg.hpp"

#include <algorithm>

#include "resupal/errors.hpp"

namespace resupal {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, Scalar s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

void vec_axpy(const Field& f, Vec& a, Scalar s, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] = f.add(a[i], f.mul(s, b[i]));
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = 0;
    const Scalar* rp = row(r);
    for (std::size_t c = 0; c < cols_; ++c)
      if (rp[c] && v[c]) s = field_.add(s, field_.mul(rp[c], v[c]));
    out[r] = s;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product size");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = at(r, k);
      if (!a) continue;
      const Scalar* orow = o.row(k);
      Scalar* dst = out.row(r);
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (orow[c]) dst[c] = field_.add(dst[c], field_.mul(a, orow[c]));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum size");
  Matrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.a_) x = field_.mul(s, x);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::is_zero() const { return resupal::is_zero(a_); }

void Matrix::append_row(const Vec& r) {
  if (r.size() != cols_) throw DimensionMismatch("row length");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& o) {
  if (o.cols_ != cols_) throw DimensionMismatch("row length");
  a_.insert(a_.end(), o.a_.begin(), o.a_.end());
  rows_ += o.rows_;
}

std::vector<std::size_t> rref(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(piv, k), m.at(r, k));
    Scalar inv = f.inv(m.at(r, c));
    Scalar* rr = m.row(r);
    for (std::size_t k = c; k < m.cols(); ++k) rr[k] = f.mul(rr[k], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Scalar s = m.at(i, c);
      if (!s) continue;
      Scalar ns = f.neg(s);
      Scalar* ri = m.row(i);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (rr[k]) ri[k] = f.add(ri[k], f.mul(ns, rr[k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix t(m);
  return rref(t).size();
}

std::vector<Vec> nullspace(const Matrix& m) {
  const Field& f = m.field();
  Matrix t(m);
  auto pivots = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(t.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

Subspace::Subspace(const Field& f, std::size_t n, const std::vector<Vec>& gens) : field_(f), n_(n) {
  for (const auto& g : gens) add(g);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw DimensionMismatch("vector does not live in the ambient space");
  Vec r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar s = r[pivots_[i]];
    if (s) vec_axpy(field_, r, field_.neg(s), basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Scalar s) { return s != 0; });
  if (it == r.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - r.begin());
  r = vec_scale(field_, field_.inv(r[piv]), r);
  for (auto& b : basis_) {
    Scalar s = b[piv];
    if (s) vec_axpy(field_, b, field_.neg(s), r);
  }
  std::size_t pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

}  // namespace resupal
