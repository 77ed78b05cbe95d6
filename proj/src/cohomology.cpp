#include "resupal/cohomology.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "resupal/errors.hpp"

namespace resupal {

SDim CoeffModule::sdim() const {
  SDim s;
  for (int q : parity) (q ? s.odd : s.even)++;
  return s;
}

Matrix CoeffModule::act(const Field& f, const Vec& x) const {
  Matrix out(f, dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Matrix& a = action[i];
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c)
        if (a.at(r, c)) out.at(r, c) = f.add(out.at(r, c), f.mul(x[i], a.at(r, c)));
  }
  return out;
}

CoeffModule CoeffModule::trivial(const SuperAlgebra& L, int parity) {
  CoeffModule M;
  M.kind = "trivial";
  M.parity = {parity};
  M.action.assign(L.dim(), Matrix(L.field(), 1, 1));
  return M;
}

CoeffModule CoeffModule::adjoint(const SuperAlgebra& L) {
  CoeffModule M;
  M.kind = "adjoint";
  for (std::size_t i = 0; i < L.dim(); ++i) {
    M.parity.push_back(L.parity(i));
    M.action.push_back(L.ad(L.basis_vector(i)));
  }
  return M;
}

AxiomReport check_module(const SuperAlgebra& L, const CoeffModule& M, const PMap* P) {
  AxiomReport rep;
  const Field& f = L.field();
  if (M.action.size() != L.dim()) {
    rep.violations.push_back("module has the wrong number of action matrices");
    return rep;
  }
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t r = 0; r < M.dim(); ++r)
      for (std::size_t c = 0; c < M.dim(); ++c)
        if (M.action[i].at(r, c) && ((M.parity[r] ^ M.parity[c]) != L.parity(i)))
          rep.violations.push_back("action of " + L.name(i) + " does not respect the grading");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Matrix lhs = M.act(f, L.structure(i, j));
      Matrix rhs = M.action[i] * M.action[j];
      Matrix ji = M.action[j] * M.action[i];
      if (koszul(L.parity(i), L.parity(j)) == 1) ji = ji.scaled(f.neg(1));
      if (!(lhs == rhs + ji)) rep.violations.push_back("module law fails for (" + L.name(i) + ", " + L.name(j) + ")");
    }
  if (P)
    for (std::size_t j = 0; j < L.even_dim(); ++j)
      if (!(matrix_power(M.action[j], f.characteristic()) == M.act(f, P->values[j])))
        rep.violations.push_back("restricted module law fails for " + L.name(j));
  return rep;
}

CochainSpace::CochainSpace(const SuperAlgebra& L, const CoeffModule& M, std::size_t k) : k_(k), parity_m_(M.parity) {
  for (std::size_t i = 0; i < L.dim(); ++i) parity_l_.push_back(L.parity(i));
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k_) {
      lookup_[cur] = tuples_.size();
      tuples_.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < parity_l_.size(); ++i) {
      if (!cur.empty() && cur.back() == i && parity_l_[i] == 0) continue;
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

int CochainSpace::parity(std::size_t column) const {
  int q = parity_m_[column % module_dim()];
  for (std::size_t i : tuples_[column / module_dim()]) q ^= parity_l_[i];
  return q;
}

SDim CochainSpace::sdim() const {
  SDim s;
  for (std::size_t c = 0; c < dim(); ++c) (parity(c) ? s.odd : s.even)++;
  return s;
}

std::pair<int, std::size_t> CochainSpace::canonical(std::vector<std::size_t> args) const {
  int sign = 1;
  for (std::size_t a = 1; a < args.size(); ++a)
    for (std::size_t b = a; b > 0 && args[b - 1] > args[b]; --b) {
      std::swap(args[b - 1], args[b]);
      sign = (parity_l_[args[b - 1]] & parity_l_[args[b]]) ? sign : -sign;
    }
  for (std::size_t a = 1; a < args.size(); ++a)
    if (args[a] == args[a - 1] && parity_l_[args[a]] == 0) return {0, 0};
  return {sign, lookup_.at(args)};
}

std::optional<std::size_t> CochainSpace::tuple_index(const std::vector<std::size_t>& t) const {
  auto it = lookup_.find(t);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::string CochainSpace::describe(std::size_t column, const SuperAlgebra& L) const {
  const auto& t = tuples_[column / module_dim()];
  std::size_t s = column % module_dim();
  bool wide = false;
  for (std::size_t i : t) wide = wide || i >= 9;
  std::string d;
  if (!t.empty()) {
    d = wide ? "D_{" : "D";
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (wide && a) d += ",";
      d += std::to_string(t[a] + 1);
    }
    if (wide) d += "}";
  }
  if (module_dim() == 1) return d.empty() ? "1" : d;
  std::string slot = module_dim() == L.dim() ? L.name(s) : "m" + std::to_string(s + 1);
  return d.empty() ? slot : slot + "⊗" + d;
}

std::string CochainSpace::describe_vector(const Vec& coeffs, const SuperAlgebra& L) const {
  const Field& f = L.field();
  std::string out;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == 0) continue;
    if (!out.empty()) out += "+";
    if (coeffs[c] != 1) {
      std::string k = f.format(coeffs[c]);
      if (k.find('+') != std::string::npos) k = "(" + k + ")";
      out += k + "*";
    }
    out += describe(c, L);
  }
  return out.empty() ? "0" : out;
}

SDim cochain_dims(const SuperAlgebra& L, const CoeffModule& M, std::size_t k) { return CochainSpace(L, M, k).sdim(); }

Vec evaluate_cochain(const SuperAlgebra& L, const CochainSpace& C, const Vec& coeffs, const std::vector<Vec>& args) {
  if (args.size() != C.degree()) throw DegreeMismatch("cochain of degree " + std::to_string(C.degree()) + " given " +
                                                      std::to_string(args.size()) + " arguments");
  if (coeffs.size() != C.dim()) throw DimensionMismatch("cochain coefficient vector has the wrong length");
  const Field& f = L.field();
  Vec out(C.module_dim(), 0);
  std::vector<std::size_t> idx(args.size());
  std::function<void(std::size_t, Scalar)> rec = [&](std::size_t a, Scalar w) {
    if (a == args.size()) {
      auto [sign, t] = C.canonical(idx);
      if (sign == 0) return;
      Scalar sw = sign > 0 ? w : f.neg(w);
      for (std::size_t s = 0; s < C.module_dim(); ++s)
        out[s] = f.add(out[s], f.mul(sw, coeffs[C.column(t, s)]));
      return;
    }
    for (std::size_t i = 0; i < L.dim(); ++i) {
      if (args[a][i] == 0) continue;
      idx[a] = i;
      rec(a + 1, f.mul(w, args[a][i]));
    }
  };
  rec(0, 1);
  return out;
}

namespace {

Matrix d_polynomial(const SuperAlgebra& L, const CoeffModule& M, std::size_t k) {
  const Field& f = L.field();
  CochainSpace src(L, M, k), dst(L, M, k + 1);
  const std::size_t N = L.dim(), dm = M.dim();
  const Scalar half = f.inv(2);
  Matrix D(f, dst.dim(), src.dim());
  auto add = [&](std::size_t r, std::size_t c, Scalar v) { D.at(r, c) = f.add(D.at(r, c), v); };
  for (std::size_t c = 0; c < src.tuple_count(); ++c) {
    const auto& t = src.tuples()[c];
    int fpar = 0;
    for (std::size_t g : t) fpar ^= L.parity(g);
    // Leibniz rule with d(e_g^*) = -sum_{i<=j} c_ij^g e_i^* e_j^* (halved on odd squares)
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
      const std::size_t g = t[pos];
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
          Scalar a = L.structure(i, j)[g];
          if (!a) continue;
          if (i == j) {
            if (L.parity(i) == 0) continue;
            a = f.mul(a, half);
          }
          std::vector<std::size_t> m(t.begin(), t.begin() + pos);
          m.push_back(i);
          m.push_back(j);
          m.insert(m.end(), t.begin() + pos + 1, t.end());
          auto [sign, r] = dst.canonical(m);
          if (sign == 0) continue;
          if ((pos % 2 == 0) == (sign > 0)) a = f.neg(a);
          for (std::size_t s = 0; s < dm; ++s) add(dst.column(r, s), src.column(c, s), a);
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
      std::vector<std::size_t> m{i};
      m.insert(m.end(), t.begin(), t.end());
      auto [sign, r] = dst.canonical(m);
      if (sign == 0) continue;
      for (std::size_t s = 0; s < dm; ++s) {
        int phi_par = fpar ^ M.parity[s];
        for (std::size_t q = 0; q < dm; ++q) {
          Scalar a = M.action[i].at(q, s);
          if (!a) continue;
          if (((L.parity(i) & phi_par) != 0) != (sign < 0)) a = f.neg(a);
          add(dst.column(r, q), src.column(c, s), a);
        }
      }
    }
  }
  return D;
}

}  // namespace

Matrix d_ce(const SuperAlgebra& L, const CoeffModule& M, std::size_t k, CochainModel model) {
  if (model == CochainModel::Polynomial) return d_polynomial(L, M, k);
  const Field& f = L.field();
  CochainSpace src(L, M, k), dst(L, M, k + 1);
  const std::size_t dm = M.dim();
  Matrix D(f, dst.dim(), src.dim());
  auto add = [&](std::size_t r, std::size_t c, Scalar v) { D.at(r, c) = f.add(D.at(r, c), v); };
  if (k == 0) {
    // d(m)(x) = (-1)^{|m||x|} x.m
    for (std::size_t x = 0; x < L.dim(); ++x)
      for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t s = 0; s < dm; ++s) {
          Scalar a = M.action[x].at(r, s);
          if (!a) continue;
          add(dst.column(x, r), src.column(0, s), (L.parity(x) & M.parity[s]) ? f.neg(a) : a);
        }
    return D;
  }
  for (std::size_t rt = 0; rt < dst.tuple_count(); ++rt) {
    const auto& xs = dst.tuples()[rt];
    const std::size_t n1 = xs.size();
    // bracket terms, 1-based i < j
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = i + 1; j < n1; ++j) {
        int e = static_cast<int>(j + 1);
        int between = 0;
        for (std::size_t t = i + 1; t < j; ++t) between += L.parity(xs[t]);
        e += L.parity(xs[j]) * between;
        const Vec& br = L.structure(xs[i], xs[j]);
        for (std::size_t l = 0; l < L.dim(); ++l) {
          if (br[l] == 0) continue;
          std::vector<std::size_t> args;
          for (std::size_t t = 0; t < n1; ++t) {
            if (t == j) continue;
            args.push_back(t == i ? l : xs[t]);
          }
          auto [sign, ct] = src.canonical(args);
          if (sign == 0) continue;
          Scalar v = br[l];
          if ((e % 2 != 0) != (sign < 0)) v = f.neg(v);
          for (std::size_t s = 0; s < dm; ++s) add(dst.column(rt, s), src.column(ct, s), v);
        }
      }
    // action terms
    for (std::size_t j = 0; j < n1; ++j) {
      std::vector<std::size_t> rest;
      int before = 0, rest_par = 0;
      for (std::size_t t = 0; t < n1; ++t) {
        if (t == j) continue;
        rest.push_back(xs[t]);
        rest_par += L.parity(xs[t]);
        if (t < j) before += L.parity(xs[t]);
      }
      auto [sign, ct] = src.canonical(rest);
      if (sign == 0) continue;
      const Matrix& A = M.action[xs[j]];
      for (std::size_t s = 0; s < dm; ++s) {
        int phi_par = (rest_par + M.parity[s]) % 2;
        int e = static_cast<int>(j + 1) + L.parity(xs[j]) * (phi_par + before);
        for (std::size_t r = 0; r < dm; ++r) {
          Scalar a = A.at(r, s);
          if (!a) continue;
          if ((e % 2 != 0) != (sign < 0)) a = f.neg(a);
          add(dst.column(rt, r), src.column(ct, s), a);
        }
      }
    }
  }
  return D;
}

namespace {

Matrix column_block(const Matrix& m, const std::vector<std::size_t>& cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(r, cols[c]);
  return out;
}

std::vector<std::size_t> columns_of_parity(const CochainSpace& C, int q) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < C.dim(); ++c)
    if (C.parity(c) == q) out.push_back(c);
  return out;
}

}  // namespace

SDim h_ce_dims(const SuperAlgebra& L, const CoeffModule& M, std::size_t k, CochainModel model) {
  CochainSpace Ck(L, M, k);
  Matrix dk = d_ce(L, M, k, model);
  SDim out;
  for (int q = 0; q < 2; ++q) {
    auto cols = columns_of_parity(Ck, q);
    std::size_t ker = cols.size() - rank(column_block(dk, cols));
    std::size_t im = 0;
    if (k > 0) {
      CochainSpace Cp(L, M, k - 1);
      im = rank(column_block(d_ce(L, M, k - 1, model), columns_of_parity(Cp, q)));
    }
    (q ? out.odd : out.even) = ker - im;
  }
  return out;
}

// d^2 acting on multilinear 2-cochains. In the polynomial model a multilinear form is first
// converted to its polynomial: coefficient -1 off the diagonal, -1/2 on odd squares.
Matrix d2_on_forms(const SuperAlgebra& L, const CoeffModule& M, CochainModel model) {
  if (model == CochainModel::Multilinear) return d_ce(L, M, 2);
  const Field& f = L.field();
  CochainSpace C2(L, M, 2);
  Matrix t(f, C2.dim(), C2.dim());
  const Scalar minus_one = f.neg(f.one()), minus_half = f.neg(f.inv(f.from_int(2)));
  for (std::size_t i = 0; i < C2.tuple_count(); ++i) {
    const auto& tu = C2.tuples()[i];
    for (std::size_t s = 0; s < C2.module_dim(); ++s)
      t.at(C2.column(i, s), C2.column(i, s)) = tu[0] == tu[1] ? minus_half : minus_one;
  }
  return d_ce(L, M, 2, model) * t;
}

std::vector<Vec> ce_cocycles(const SuperAlgebra& L, const CoeffModule& M, std::size_t k, CochainModel model) {
  if (model == CochainModel::Polynomial && k == 2) return nullspace(d2_on_forms(L, M, model));
  if (model == CochainModel::Polynomial && k > 2)
    throw DegreeMismatch("polynomial cocycles in multilinear coordinates are available up to degree 2");
  return nullspace(d_ce(L, M, k));
}

namespace {

// M-valued expressions that are linear in a vector of unknowns, stored as dim(M) x U matrices.
// The numeric case is U = 1 with the values of a fixed cochain.
class FormModel {
 public:
  FormModel(const SuperAlgebra& L, const CoeffModule& M, const Vec* phi, const std::vector<Vec>* omega)
      : L_(L), M_(M), f_(L.field()), C2_(L, M, 2) {
    const std::size_t dm = M.dim(), n = L.even_dim(), N = L.dim();
    symbolic_ = phi == nullptr;
    U_ = symbolic_ ? C2_.dim() + n * dm : 1;
    if (!symbolic_) {
      if (phi->size() != C2_.dim()) throw DimensionMismatch("phi has the wrong length");
      if (omega->size() != n) throw DimensionMismatch("omega must be given on every even basis vector");
    }
    phiB_.assign(N * N, zero());
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t l = 0; l < N; ++l) {
        auto [sign, t] = C2_.canonical({k, l});
        if (sign == 0) continue;
        Matrix& F = phiB_[k * N + l];
        for (std::size_t s = 0; s < dm; ++s) {
          std::size_t col = C2_.column(t, s);
          Scalar v = symbolic_ ? Scalar(1) : (*phi)[col];
          if (sign < 0) v = f_.neg(v);
          if (symbolic_)
            F.at(s, col) = v;
          else
            F.at(s, 0) = v;
        }
      }
    for (std::size_t j = 0; j < n; ++j) {
      Matrix F = zero();
      for (std::size_t s = 0; s < dm; ++s) {
        if (symbolic_)
          F.at(s, C2_.dim() + j * dm + s) = 1;
        else
          F.at(s, 0) = (*omega)[j].at(s);
      }
      omegaB_.push_back(F);
    }
  }

  std::size_t unknowns() const { return U_; }
  const CochainSpace& c2() const { return C2_; }
  Matrix zero() const { return Matrix(f_, M_.dim(), U_); }

  void axpy(Matrix& F, Scalar s, const Matrix& G) const {
    if (s == 0) return;
    for (std::size_t r = 0; r < F.rows(); ++r) {
      Scalar* a = F.row(r);
      const Scalar* b = G.row(r);
      for (std::size_t c = 0; c < F.cols(); ++c)
        if (b[c]) a[c] = f_.add(a[c], f_.mul(s, b[c]));
    }
  }

  Matrix phi(const Vec& a, const Vec& b) const {
    Matrix F = zero();
    const std::size_t N = L_.dim();
    for (std::size_t k = 0; k < N; ++k) {
      if (a[k] == 0) continue;
      for (std::size_t l = 0; l < N; ++l)
        if (b[l]) axpy(F, f_.mul(a[k], b[l]), phiB_[k * N + l]);
    }
    return F;
  }

  Matrix act(const Vec& x, const Matrix& F) const { return M_.act(f_, x) * F; }

  Matrix corr(const Vec& x, const Vec& y) const {
    const unsigned p = f_.characteristic();
    // heads[h][c]: left-nested brackets of length h with c copies of x among positions 3..h
    std::vector<std::vector<Vec>> heads(p);
    heads[1] = {x};
    if (p > 2) heads[2] = {L_.bracket(x, y)};
    for (unsigned h = 2; h + 1 < p; ++h) {
      heads[h + 1].assign(h, L_.zero_vector());
      for (unsigned c = 0; c + 1 < h; ++c) {
        const Vec& v = heads[h][c];
        if (is_zero(v)) continue;
        heads[h + 1][c + 1] = vec_add(f_, heads[h + 1][c + 1], L_.bracket(v, x));
        heads[h + 1][c] = vec_add(f_, heads[h + 1][c], L_.bracket(v, y));
      }
    }
    Matrix total = zero();
    for (unsigned k = 0; k + 2 <= p; ++k) {
      unsigned h = p - k - 1;
      std::vector<Matrix> F(p - 1, zero());
      if (h == 1) {
        F[0] = phi(x, y);
      } else {
        for (unsigned c = 0; c + 1 < h; ++c) {
          if (is_zero(heads[h][c])) continue;
          axpy(F[c + 1], 1, phi(heads[h][c], x));
          axpy(F[c], 1, phi(heads[h][c], y));
        }
      }
      for (unsigned t = 0; t < k; ++t) {
        std::vector<Matrix> G(p - 1, zero());
        for (unsigned c = 0; c + 1 < p; ++c) {
          if (F[c].is_zero()) continue;
          if (c + 2 < p) axpy(G[c + 1], 1, act(x, F[c]));
          axpy(G[c], 1, act(y, F[c]));
        }
        F = std::move(G);
      }
      Scalar sign = (k % 2) ? f_.neg(1) : Scalar(1);
      for (unsigned c = 0; c + 1 < p; ++c) axpy(total, f_.mul(sign, f_.inv(f_.from_int(c + 1))), F[c]);
    }
    return total;
  }

  Matrix omega(const Vec& x) const {
    const unsigned p = f_.characteristic();
    Matrix W = zero();
    Vec acc = L_.zero_vector();
    bool started = false;
    for (std::size_t j = 0; j < L_.even_dim(); ++j) {
      if (x[j] == 0) continue;
      Vec term = vec_scale(f_, x[j], L_.basis_vector(j));
      axpy(W, f_.pow(x[j], p), omegaB_[j]);
      if (started) axpy(W, 1, corr(acc, term));
      acc = vec_add(f_, acc, term);
      started = true;
    }
    return W;
  }

  Matrix defect(const Vec& x, const Vec& y) const {
    Matrix D = omega(vec_add(f_, x, y));
    axpy(D, f_.neg(1), omega(x));
    axpy(D, f_.neg(1), omega(y));
    axpy(D, f_.neg(1), corr(x, y));
    return D;
  }

  // beta(x, y) for homogeneous or mixed x and even y, given y^[p].
  Matrix ind2(const Vec& x, const Vec& y, const Vec& y_p) const {
    const unsigned p = f_.characteristic();
    Matrix B = phi(x, y_p);
    std::vector<Vec> nest{x};
    for (unsigned j = 1; j < p; ++j) nest.push_back(L_.bracket(nest.back(), y));
    Matrix Ay = M_.act(f_, y);
    for (unsigned i = 0; i < p; ++i) {
      unsigned j = p - 1 - i;
      if (is_zero(nest[j])) continue;
      Matrix T = phi(nest[j], y);
      for (unsigned t = 0; t < i; ++t) T = Ay * T;
      axpy(B, (i % 2) ? Scalar(1) : f_.neg(1), T);
    }
    Matrix W = omega(y);
    for (int q = 0; q < 2; ++q) {
      Vec xq = L_.zero_vector();
      bool any = false;
      for (std::size_t i = 0; i < L_.dim(); ++i)
        if (L_.parity(i) == q && x[i]) {
          xq[i] = x[i];
          any = true;
        }
      if (!any) continue;
      Matrix Wq = W;
      if (q)
        for (std::size_t s = 0; s < M_.dim(); ++s)
          if (M_.parity[s])
            for (std::size_t c = 0; c < U_; ++c) Wq.at(s, c) = f_.neg(Wq.at(s, c));
      axpy(B, 1, act(xq, Wq));
    }
    return B;
  }

 private:
  const SuperAlgebra& L_;
  const CoeffModule& M_;
  Field f_;
  CochainSpace C2_;
  bool symbolic_ = true;
  std::size_t U_ = 0;
  std::vector<Matrix> phiB_;
  std::vector<Matrix> omegaB_;
};

Vec first_column(const Matrix& F) {
  Vec v(F.rows());
  for (std::size_t r = 0; r < F.rows(); ++r) v[r] = F.at(r, 0);
  return v;
}

void append_form_rows(Matrix& sys, const Matrix& F) {
  for (std::size_t r = 0; r < F.rows(); ++r) {
    Vec row = F.row_vec(r);
    if (!is_zero(row)) sys.append_row(row);
  }
}

// Pairs of even vectors used to impose or test the compatibility rule.
std::vector<std::pair<Vec, Vec>> compat_pairs(const SuperAlgebra& L, std::uint64_t exhaustive_limit, int random_pairs,
                                              std::uint64_t seed) {
  const Field& f = L.field();
  const std::size_t n = L.even_dim();
  std::vector<std::pair<Vec, Vec>> out;
  std::uint64_t count = count_vectors(f, n);
  if (count <= exhaustive_limit && count * count <= exhaustive_limit) {
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b)
        out.push_back({vector_from_index(L, 0, n, a), vector_from_index(L, 0, n, b)});
    return out;
  }
  std::vector<Scalar> scales{1};
  for (Scalar s : f.elements())
    if (s > 1 && scales.size() < 4) scales.push_back(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Scalar a : scales)
        for (Scalar b : scales)
          out.push_back({vec_scale(f, a, L.basis_vector(i)), vec_scale(f, b, L.basis_vector(j))});
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_pairs; ++t) out.push_back({random_even(L, rng), random_even(L, rng)});
  return out;
}

}  // namespace

Vec omega_extend(const SuperAlgebra& L, const CoeffModule& M, const RestrictedCochain2& c, const Vec& x) {
  if (!L.is_even(x)) throw OddInput("omega is defined on even vectors only");
  FormModel fm(L, M, &c.phi, &c.omega);
  return first_column(fm.omega(x));
}

Vec compat_correction(const SuperAlgebra& L, const CoeffModule& M, const Vec& phi, const Vec& x, const Vec& y) {
  if (!L.is_even(x) || !L.is_even(y)) throw OddInput("compatibility correction needs even arguments");
  std::vector<Vec> omega(L.even_dim(), Vec(M.dim(), 0));
  FormModel fm(L, M, &phi, &omega);
  return first_column(fm.corr(x, y));
}

AxiomReport phi_compat_check(const SuperAlgebra& L, const CoeffModule& M, const RestrictedCochain2& c,
                             const VerifyBudget& budget) {
  AxiomReport rep;
  const Field& f = L.field();
  FormModel fm(L, M, &c.phi, &c.omega);
  int samples = std::max(500, budget.random_samples);
  for (const auto& [x, y] : compat_pairs(L, budget.exhaustive_limit, samples, budget.seed)) {
    if (!fm.defect(x, y).is_zero()) {
      rep.violations.push_back("additivity rule fails at (" + L.format_vector(x) + ", " + L.format_vector(y) + ")");
      if (rep.violations.size() > 10) return rep;
    }
  }
  std::mt19937_64 rng(budget.seed + 1);
  const unsigned p = f.characteristic();
  auto elems = f.elements();
  for (int t = 0; t < 20; ++t) {
    Vec x = random_even(L, rng);
    Matrix wx = fm.omega(x);
    for (Scalar lam : elems) {
      Matrix lhs = fm.omega(vec_scale(f, lam, x));
      if (!(lhs == wx.scaled(f.pow(lam, p)))) {
        rep.violations.push_back("omega(lambda x) differs from lambda^p omega(x) at x = " + L.format_vector(x));
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// ind^1 as a matrix from C^1 coefficients to omega slots (j, s).
Matrix ind1_matrix(const RestrictedAlgebra& R, const CoeffModule& M) {
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  const std::size_t dm = M.dim(), n = L.even_dim();
  CochainSpace C1(L, M, 1);
  Matrix out(f, n * dm, C1.dim());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix Apow = matrix_power(M.action[j], f.characteristic() - 1);
    const Vec& Pj = R.pmap.values[j];
    for (std::size_t s = 0; s < dm; ++s) {
      std::size_t row = j * dm + s;
      for (std::size_t i = 0; i < L.dim(); ++i)
        if (Pj[i]) out.at(row, C1.column(i, s)) = f.add(out.at(row, C1.column(i, s)), Pj[i]);
      for (std::size_t r = 0; r < dm; ++r)
        if (Apow.at(s, r)) out.at(row, C1.column(j, r)) = f.sub(out.at(row, C1.column(j, r)), Apow.at(s, r));
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> ind1(const RestrictedAlgebra& R, const CoeffModule& M, const Vec& psi) {
  Matrix I = ind1_matrix(R, M);
  if (psi.size() != I.cols()) throw DimensionMismatch("1-cochain has the wrong length");
  Vec flat = I.apply(psi);
  std::vector<Vec> out;
  for (std::size_t j = 0; j < R.algebra.even_dim(); ++j)
    out.emplace_back(flat.begin() + j * M.dim(), flat.begin() + (j + 1) * M.dim());
  return out;
}

RestrictedCochain2 d1_star(const RestrictedAlgebra& R, const CoeffModule& M, const Vec& psi) {
  return {d_ce(R.algebra, M, 1).apply(psi), ind1(R, M, psi)};
}

Vec ind2_at(const RestrictedAlgebra& R, const CoeffModule& M, const RestrictedCochain2& c, const Vec& x, const Vec& y) {
  if (!R.algebra.is_even(y)) throw OddInput("second argument of ind2 must be even");
  FormModel fm(R.algebra, M, &c.phi, &c.omega);
  return first_column(fm.ind2(x, y, pmap_eval(R, y)));
}

std::vector<std::vector<Vec>> ind2(const RestrictedAlgebra& R, const CoeffModule& M, const RestrictedCochain2& c) {
  const SuperAlgebra& L = R.algebra;
  FormModel fm(L, M, &c.phi, &c.omega);
  std::vector<std::vector<Vec>> out(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.even_dim(); ++j)
      out[i].push_back(first_column(fm.ind2(L.basis_vector(i), L.basis_vector(j), R.pmap.values[j])));
  return out;
}

RestrictedCochain2 RestrictedH2::unpack(const Vec& v) const {
  RestrictedCochain2 c;
  c.phi.assign(v.begin(), v.begin() + phi_dim);
  for (std::size_t j = 0; j < even_dim; ++j) {
    auto b = v.begin() + phi_dim + j * module_dim;
    c.omega.emplace_back(b, b + module_dim);
  }
  return c;
}

Vec RestrictedH2::pack(const RestrictedCochain2& c) const {
  Vec v = c.phi;
  for (const auto& w : c.omega) v.insert(v.end(), w.begin(), w.end());
  return v;
}

namespace {

RestrictedH2 solve_h2(const RestrictedAlgebra& R, const CoeffModule& M, bool plus_even, CochainModel model) {
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  const std::size_t dm = M.dim(), n = L.even_dim();
  if (count_vectors(f, L.dim()) > enumeration_bound())
    throw BoundExceeded("algebra too large for the restricted cohomology solver");

  FormModel fm(L, M, nullptr, nullptr);
  const std::size_t phi_dim = fm.c2().dim(), U = fm.unknowns();
  RestrictedH2 out;
  out.phi_dim = phi_dim;
  out.module_dim = dm;
  out.even_dim = n;

  Matrix sys(f, 0, U);
  Matrix d2 = d2_on_forms(L, M, model);
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    Vec row(U, 0);
    std::copy(d2.row(r), d2.row(r) + phi_dim, row.begin());
    if (!is_zero(row)) sys.append_row(row);
  }
  for (const auto& [x, y] : compat_pairs(L, 2000, 50, 17)) append_form_rows(sys, fm.defect(x, y));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      append_form_rows(sys, fm.ind2(L.basis_vector(i), L.basis_vector(j), R.pmap.values[j]));
  if (plus_even) {
    for (std::size_t c = 0; c < phi_dim; ++c)
      if (fm.c2().parity(c)) sys.append_row(unit_vec(U, c));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < dm; ++s)
        if (M.parity[s]) sys.append_row(unit_vec(U, phi_dim + j * dm + s));
  }
  out.cocycles = nullspace(sys);

  Matrix d1 = d_ce(L, M, 1);
  Matrix i1 = ind1_matrix(R, M);
  CochainSpace C1(L, M, 1);
  Subspace B(f, U);
  for (std::size_t c = 0; c < C1.dim(); ++c) {
    if (plus_even && C1.parity(c)) continue;
    Vec v(U, 0);
    for (std::size_t r = 0; r < phi_dim; ++r) v[r] = d1.at(r, c);
    for (std::size_t r = 0; r < n * dm; ++r) v[phi_dim + r] = i1.at(r, c);
    B.add(v);
  }
  out.coboundaries = B.basis();
  for (const auto& b : out.coboundaries)
    if (!is_zero(sys.apply(b))) out.verified = false;

  Subspace span = B;
  for (const auto& z : out.cocycles) {
    Vec r = span.reduce(z);
    if (is_zero(r)) continue;
    span.add(z);
    out.representatives.push_back(r);
  }
  VerifyBudget budget;
  budget.random_samples = 100;
  for (const auto& z : out.cocycles)
    if (!phi_compat_check(L, M, out.unpack(z), budget).ok()) out.verified = false;
  return out;
}

}  // namespace

RestrictedH2 h2_res(const RestrictedAlgebra& R, const CoeffModule& M, CochainModel model) {
  return solve_h2(R, M, false, model);
}

RestrictedH2 h2_res_plus_even(const RestrictedAlgebra& R, const CoeffModule& M, CochainModel model) {
  return solve_h2(R, M, true, model);
}

SDim h1_res_dims(const RestrictedAlgebra& R, const CoeffModule& M) {
  const SuperAlgebra& L = R.algebra;
  CochainSpace C0(L, M, 0), C1(L, M, 1);
  Matrix d0 = d_ce(L, M, 0), d1 = d_ce(L, M, 1), i1 = ind1_matrix(R, M);
  Matrix z = d1;
  z.append_rows(i1);
  SDim out;
  for (int q = 0; q < 2; ++q) {
    auto cols = columns_of_parity(C1, q);
    std::size_t ker = cols.size() - rank(column_block(z, cols));
    std::size_t im = rank(column_block(d0, columns_of_parity(C0, q)));
    (q ? out.odd : out.even) = ker - im;
  }
  return out;
}

}  // namespace resupal
