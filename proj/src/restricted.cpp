#include "resupal/restricted.hpp"

#include <cstdlib>
#include <set>
#include <string>

#include "resupal/errors.hpp"

namespace resupal {

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("RESUPAL_BOUND")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 10'000'000ULL;
}

PMap PMap::zero(const SuperAlgebra& L) {
  PMap P;
  P.values.assign(L.even_dim(), L.zero_vector());
  return P;
}

RestrictedAlgebra RestrictedAlgebra::make(SuperAlgebra L, PMap P) {
  auto rep = check_pmap_axioms(L, P);
  if (!rep.ok()) throw Error("not a p|2p-map: " + rep.violations.front());
  P.verified = true;
  return {std::move(L), std::move(P)};
}

RestrictedAlgebra RestrictedAlgebra::unverified(SuperAlgebra L, PMap P) {
  P.verified = false;
  return {std::move(L), std::move(P)};
}

Matrix matrix_power(const Matrix& m, std::uint64_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  Matrix b = m;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

namespace {

void require_even(const SuperAlgebra& L, const Vec& x) {
  if (x.size() != L.dim()) throw DimensionMismatch("vector does not live in the algebra");
  if (!L.is_even(x)) throw OddInput("argument must be even");
}

}  // namespace

Vec s_sum(const SuperAlgebra& L, const Vec& x, const Vec& y) {
  require_even(L, x);
  require_even(L, y);
  const Field& f = L.field();
  const unsigned p = f.characteristic();
  Matrix adx = L.ad(x), ady = L.ad(y);
  // acc[c]: sum of nestings [x_k,[...,[y,x]]] with c copies of x among the prefix chosen so far
  std::vector<Vec> acc(p - 1, L.zero_vector());
  acc[0] = ady.apply(x);
  for (unsigned step = 0; step + 2 < p; ++step) {
    std::vector<Vec> next(p - 1, L.zero_vector());
    for (unsigned c = 0; c <= step; ++c) {
      if (is_zero(acc[c])) continue;
      next[c + 1] = vec_add(f, next[c + 1], adx.apply(acc[c]));
      next[c] = vec_add(f, next[c], ady.apply(acc[c]));
    }
    acc = std::move(next);
  }
  Vec out = L.zero_vector();
  for (unsigned c = 0; c + 1 < p; ++c) vec_axpy(f, out, f.inv(f.from_int(c + 1)), acc[c]);
  return out;
}

Vec pmap_eval(const SuperAlgebra& L, const PMap& P, const Vec& x) {
  require_even(L, x);
  if (P.values.size() != L.even_dim()) throw DimensionMismatch("p-map needs one value per even basis vector");
  const Field& f = L.field();
  Vec acc = L.zero_vector(), accp = L.zero_vector();
  bool started = false;
  for (std::size_t j = 0; j < L.even_dim(); ++j) {
    if (!x[j]) continue;
    Vec v = L.zero_vector();
    v[j] = x[j];
    Vec vp = vec_scale(f, f.frobenius(x[j]), P.values[j]);
    if (!started) {
      accp = vp;
      started = true;
    } else {
      accp = vec_add(f, vec_add(f, accp, vp), s_sum(L, acc, v));
    }
    acc[j] = x[j];
  }
  return accp;
}

AxiomReport check_pmap_axioms(const SuperAlgebra& L, const PMap& P, const VerifyBudget& budget) {
  AxiomReport rep;
  const Field& f = L.field();
  const unsigned p = f.characteristic();
  if (P.values.size() != L.even_dim()) {
    rep.violations.push_back("p-map has " + std::to_string(P.values.size()) + " values for " +
                             std::to_string(L.even_dim()) + " even basis vectors");
    return rep;
  }
  for (std::size_t j = 0; j < L.even_dim(); ++j) {
    if (P.values[j].size() != L.dim() || !L.is_even(P.values[j])) {
      rep.violations.push_back("value of " + L.name(j) + "^[p] is not even");
      return rep;
    }
  }
  for (std::size_t j = 0; j < L.even_dim(); ++j)
    if (!(L.ad(P.values[j]) == matrix_power(L.ad(L.basis_vector(j)), p)))
      rep.violations.push_back("ad of " + L.name(j) + "^[p] differs from (ad " + L.name(j) + ")^p");
  if (!rep.ok()) return rep;

  std::mt19937_64 rng(budget.seed);
  std::uint64_t total = count_vectors(f, L.even_dim());
  std::vector<Vec> samples;
  if (total <= budget.exhaustive_limit) {
    for (std::uint64_t idx = 0; idx < total; ++idx) samples.push_back(vector_from_index(L, 0, L.even_dim(), idx));
  } else {
    for (int t = 0; t < budget.random_samples; ++t) samples.push_back(random_even(L, rng));
  }

  for (const auto& x : samples) {
    Vec xp = pmap_eval(L, P, x);
    for (Scalar lam : f.elements()) {
      Vec lhs = pmap_eval(L, P, vec_scale(f, lam, x));
      if (lhs != vec_scale(f, f.frobenius(lam), xp)) {
        rep.violations.push_back("semilinearity fails at x = " + L.format_vector(x));
        return rep;
      }
    }
  }

  auto sum_rule = [&](const Vec& u, const Vec& v) {
    Vec lhs = pmap_eval(L, P, vec_add(f, u, v));
    Vec rhs = vec_add(f, vec_add(f, pmap_eval(L, P, u), pmap_eval(L, P, v)), s_sum(L, u, v));
    return lhs == rhs;
  };
  for (std::size_t i = 0; i < L.even_dim(); ++i)
    for (std::size_t j = 0; j < L.even_dim(); ++j)
      if (!sum_rule(L.basis_vector(i), L.basis_vector(j))) {
        rep.violations.push_back("sum rule fails on (" + L.name(i) + "," + L.name(j) + ")");
        return rep;
      }
  for (int t = 0; t < budget.random_samples && L.even_dim() > 0; ++t) {
    Vec u = random_even(L, rng), v = random_even(L, rng);
    if (!sum_rule(u, v)) {
      rep.violations.push_back("sum rule fails on (" + L.format_vector(u) + "," + L.format_vector(v) + ")");
      return rep;
    }
  }
  // ad_{x^[p]} = (ad_x)^p on sampled even elements
  for (std::size_t t = 0; t < samples.size() && t < static_cast<std::size_t>(budget.random_samples); ++t) {
    const Vec& x = samples[t];
    if (!(L.ad(pmap_eval(L, P, x)) == matrix_power(L.ad(x), p))) {
      rep.violations.push_back("ad of x^[p] differs from (ad x)^p at x = " + L.format_vector(x));
      return rep;
    }
  }
  return rep;
}

std::vector<PMap> enumerate_pmaps(const SuperAlgebra& L) {
  const Field& f = L.field();
  const unsigned p = f.characteristic();
  const std::size_t n = L.even_dim(), N = L.dim();
  std::vector<Vec> zev = center(L).even_part().basis();

  std::vector<Vec> particular;
  Matrix sys(f, N * N, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = L.ad(L.basis_vector(i));
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) sys.at(r * N + c, i) = a.at(r, c);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Matrix target = matrix_power(L.ad(L.basis_vector(j)), p);
    Vec rhs(N * N);
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) rhs[r * N + c] = target.at(r, c);
    auto sol = solve(sys, rhs);
    if (!sol) return {};
    Vec v = L.zero_vector();
    for (std::size_t i = 0; i < n; ++i) v[i] = (*sol)[i];
    particular.push_back(v);
  }

  const std::uint64_t per = count_vectors(f, zev.size());
  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (combos > enumeration_bound() / per + 1) throw BoundExceeded("too many candidate p-maps");
    combos *= per;
  }
  if (combos > enumeration_bound()) throw BoundExceeded("too many candidate p-maps");

  VerifyBudget light;
  light.exhaustive_limit = 50;
  light.random_samples = 20;
  std::vector<PMap> out;
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    PMap P;
    std::uint64_t rest = idx;
    // the last basis vector varies fastest so the list is lexicographic in (e_1^[p], e_2^[p], ...)
    std::vector<std::uint64_t> digits(n);
    for (std::size_t j = n; j-- > 0;) {
      digits[j] = rest % per;
      rest /= per;
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = particular[j];
      std::uint64_t d = digits[j];
      for (std::size_t k = 0; k < zev.size(); ++k) {
        vec_axpy(f, v, static_cast<Scalar>(d % f.order()), zev[k]);
        d /= f.order();
      }
      P.values.push_back(v);
    }
    if (check_pmap_axioms(L, P, light).ok()) {
      P.verified = true;
      out.push_back(std::move(P));
    }
  }
  return out;
}

bool is_p_nilpotent(const RestrictedAlgebra& R, bool force_exhaustive) {
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  const std::uint64_t total = count_vectors(f, L.even_dim());
  auto reaches_zero = [&](Vec x) {
    std::set<Vec> seen;
    while (!is_zero(x)) {
      if (!seen.insert(x).second) return false;
      if (seen.size() > total) return false;
      x = pmap_eval(R, x);
    }
    return true;
  };
  if (total <= 2000 || force_exhaustive) {
    for (std::uint64_t idx = 1; idx < total; ++idx)
      if (!reaches_zero(vector_from_index(L, 0, L.even_dim(), idx))) return false;
    return true;
  }
  for (std::size_t j = 0; j < L.even_dim(); ++j)
    if (!reaches_zero(L.basis_vector(j))) return false;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t)
    if (!reaches_zero(random_even(L, rng))) return false;
  return true;
}

namespace {

// Unknown layout for a parity-d map D: entry (r, c) is a variable when |r| = |c| + d.
struct MapVars {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::vector<long> index;  // N*N -> variable or -1
};

MapVars map_vars(const SuperAlgebra& L, int d) {
  MapVars mv;
  const std::size_t N = L.dim();
  mv.index.assign(N * N, -1);
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = 0; r < N; ++r)
      if (L.parity(r) == (L.parity(c) + d) % 2) {
        mv.index[r * N + c] = static_cast<long>(mv.entries.size());
        mv.entries.push_back({r, c});
      }
  return mv;
}

Matrix vars_to_matrix(const SuperAlgebra& L, const MapVars& mv, const Vec& x) {
  Matrix m(L.field(), L.dim(), L.dim());
  for (std::size_t k = 0; k < mv.entries.size(); ++k) m.at(mv.entries[k].first, mv.entries[k].second) = x[k];
  return m;
}

}  // namespace

DerivationReport restricted_derivations(const RestrictedAlgebra& R) {
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  const unsigned p = f.characteristic();
  const std::size_t N = L.dim();
  DerivationReport out;
  std::mt19937_64 rng(3);

  for (int d = 0; d < 2; ++d) {
    MapVars mv = map_vars(L, d);
    const std::size_t U = mv.entries.size();
    Matrix sys(f, 0, U);
    // Row for coordinate k of a linear expression sum_{(r,c)} coef * D[r][c].
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        // D[e_i,e_j] - [D e_i, e_j] - (-1)^{|i| d} [e_i, D e_j]
        Matrix rows(f, N, U);
        const Vec& br = L.structure(i, j);
        for (std::size_t t = 0; t < N; ++t) {
          if (!br[t]) continue;
          for (std::size_t r = 0; r < N; ++r) {
            long v = mv.index[r * N + t];
            if (v >= 0) rows.at(r, static_cast<std::size_t>(v)) = f.add(rows.at(r, static_cast<std::size_t>(v)), br[t]);
          }
        }
        for (std::size_t r = 0; r < N; ++r) {
          long v = mv.index[r * N + i];
          if (v < 0) continue;
          const Vec& c = L.structure(r, j);
          for (std::size_t k = 0; k < N; ++k)
            if (c[k]) rows.at(k, static_cast<std::size_t>(v)) = f.sub(rows.at(k, static_cast<std::size_t>(v)), c[k]);
        }
        Scalar sgn = koszul(L.parity(i), d) == 1 ? 1 : f.neg(1);
        for (std::size_t r = 0; r < N; ++r) {
          long v = mv.index[r * N + j];
          if (v < 0) continue;
          const Vec& c = L.structure(i, r);
          for (std::size_t k = 0; k < N; ++k)
            if (c[k])
              rows.at(k, static_cast<std::size_t>(v)) =
                  f.sub(rows.at(k, static_cast<std::size_t>(v)), f.mul(sgn, c[k]));
        }
        sys.append_rows(rows);
      }
    // D(e_j^[p]) - ad_{e_j}^{p-1} D(e_j) for even j
    for (std::size_t j = 0; j < L.even_dim(); ++j) {
      Matrix rows(f, N, U);
      const Vec& xp = R.pmap.values[j];
      for (std::size_t t = 0; t < N; ++t) {
        if (!xp[t]) continue;
        for (std::size_t r = 0; r < N; ++r) {
          long v = mv.index[r * N + t];
          if (v >= 0) rows.at(r, static_cast<std::size_t>(v)) = f.add(rows.at(r, static_cast<std::size_t>(v)), xp[t]);
        }
      }
      Matrix adp = matrix_power(L.ad(L.basis_vector(j)), p - 1);
      for (std::size_t r = 0; r < N; ++r) {
        long v = mv.index[r * N + j];
        if (v < 0) continue;
        for (std::size_t k = 0; k < N; ++k)
          if (adp.at(k, r))
            rows.at(k, static_cast<std::size_t>(v)) = f.sub(rows.at(k, static_cast<std::size_t>(v)), adp.at(k, r));
      }
      sys.append_rows(rows);
    }
    auto basis = U ? nullspace(sys) : std::vector<Vec>{};
    auto& dst = d == 0 ? out.even : out.odd;
    for (const auto& b : basis) dst.push_back(vars_to_matrix(L, mv, b));
    for (const auto& D : dst)
      for (int t = 0; t < 20 && L.even_dim() > 0; ++t) {
        Vec x = random_even(L, rng);
        Vec lhs = D.apply(pmap_eval(R, x));
        Vec rhs = matrix_power(L.ad(x), p - 1).apply(D.apply(x));
        if (lhs != rhs) out.verified = false;
      }
  }
  out.derivations = {out.even.size(), out.odd.size()};
  // dim ad(L)_d = dim L_d - dim z(L)_d
  SDim z = center(L).sdim();
  out.inner = {L.even_dim() - z.even, L.odd_dim() - z.odd};
  return out;
}

bool check_restricted_morphism(const GradedMap& f, const RestrictedAlgebra& R1, const RestrictedAlgebra& R2,
                               std::uint64_t seed) {
  const SuperAlgebra& L1 = R1.algebra;
  if (L1.sdim() != R2.algebra.sdim() || f.sdim() != L1.sdim()) throw DimensionMismatch("superdimensions differ");
  if (!preserves_brackets(f, L1, R2.algebra)) return false;
  auto ok = [&](const Vec& x) { return f.apply(pmap_eval(R1, x)) == pmap_eval(R2, f.apply(x)); };
  for (std::size_t j = 0; j < L1.even_dim(); ++j)
    if (!ok(L1.basis_vector(j))) return false;
  std::uint64_t total = count_vectors(L1.field(), L1.even_dim());
  if (total <= 2000) {
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (!ok(vector_from_index(L1, 0, L1.even_dim(), idx))) return false;
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t)
      if (!ok(random_even(L1, rng))) return false;
  }
  return true;
}

}  // namespace resupal
