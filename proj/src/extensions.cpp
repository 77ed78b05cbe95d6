#include "resupal/extensions.hpp"

#include "resupal/errors.hpp"

namespace resupal {

ExtensionLayout extension_layout(const SuperAlgebra& base, int x_parity) {
  ExtensionLayout out;
  const std::size_t n = base.even_dim();
  for (std::size_t i = 0; i < base.dim(); ++i) out.new_index.push_back(i < n || x_parity ? i : i + 1);
  out.x_index = x_parity ? base.dim() : n;
  return out;
}

Scalar scalar_cochain_at(const SuperAlgebra& L, const Vec& delta, std::size_t i, std::size_t j) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  auto [sign, t] = C.canonical({i, j});
  if (sign == 0) return 0;
  Scalar v = delta.at(C.column(t, 0));
  return sign < 0 ? L.field().neg(v) : v;
}

namespace {

struct Built {
  SuperAlgebra algebra;
  PMap pmap;
  ExtensionLayout layout;
};

// pmap and omega may be empty when no p-map is wanted.
Built build_extension(const SuperAlgebra& H, const PMap* pmap, const Vec& delta, const std::vector<Scalar>& omega,
                      int x_parity, const std::string& name) {
  const Field& f = H.field();
  const std::size_t n = H.even_dim();
  std::vector<std::string> ev(H.names().begin(), H.names().begin() + n);
  std::vector<std::string> od(H.names().begin() + n, H.names().end());
  (x_parity ? od : ev).push_back(name);
  Built b{SuperAlgebra(f, ev, od), {}, extension_layout(H, x_parity)};
  const auto& idx = b.layout.new_index;

  auto embed = [&](const Vec& v) {
    Vec out(H.dim() + 1, 0);
    for (std::size_t i = 0; i < H.dim(); ++i) out[idx[i]] = v[i];
    return out;
  };
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (std::size_t j = i; j < H.dim(); ++j) {
      Vec v = embed(H.structure(i, j));
      v[b.layout.x_index] = scalar_cochain_at(H, delta, i, j);
      if (!is_zero(v)) b.algebra.set_bracket(idx[i], idx[j], v);
    }
  if (pmap) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = embed(pmap->values[j]);
      if (!x_parity) v[b.layout.x_index] = omega.empty() ? 0 : omega[j];
      b.pmap.values.push_back(v);
    }
    if (!x_parity) b.pmap.values.push_back(Vec(H.dim() + 1, 0));
  }
  return b;
}

int infer_parity(const SuperAlgebra& L, const Vec& delta, std::optional<int> x_parity) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  if (delta.size() != C.dim()) throw DimensionMismatch("cocycle has the wrong length");
  std::optional<int> seen;
  for (std::size_t c = 0; c < C.dim(); ++c) {
    if (!delta[c]) continue;
    if (seen && *seen != C.parity(c)) throw NotACocycle("cocycle is not homogeneous");
    seen = C.parity(c);
  }
  if (seen && x_parity && *seen != *x_parity) throw NotACocycle("cocycle parity differs from the parity of X");
  if (seen) return *seen;
  if (!x_parity) throw NotACocycle("parity of X must be given for the zero cocycle");
  return *x_parity;
}

void require_cocycle(const SuperAlgebra& L, const Vec& delta) {
  Vec d = d_ce(L, CoeffModule::trivial(L), 2).apply(delta);
  if (!is_zero(d)) throw NotACocycle("d2 of the cocycle is nonzero");
}

}  // namespace

SuperAlgebra central_extend(const SuperAlgebra& L, const Vec& delta, std::optional<int> x_parity,
                            const std::string& name) {
  int parity = infer_parity(L, delta, x_parity);
  require_cocycle(L, delta);
  Built b = build_extension(L, nullptr, delta, {}, parity, name);
  auto rep = check_axioms(b.algebra);
  if (!rep.ok()) throw NotACocycle("extension violates the axioms: " + rep.violations.front());
  return b.algebra;
}

RestrictedExtension central_extend(const RestrictedAlgebra& R, const RestrictedCochain2& c, const std::string& name) {
  const SuperAlgebra& L = R.algebra;
  CoeffModule K = CoeffModule::trivial(L);
  if (c.omega.size() != L.even_dim()) throw DimensionMismatch("omega needs one value per even basis vector");
  for (const auto& w : c.omega)
    if (w.size() != 1) throw DimensionMismatch("omega values must be scalars");
  infer_parity(L, c.phi, 0);
  require_cocycle(L, c.phi);
  for (const auto& row : ind2(R, K, c))
    for (const auto& v : row)
      if (!is_zero(v)) throw NotACocycle("ind2 of the pair is nonzero");
  auto compat = phi_compat_check(L, K, c);
  if (!compat.ok()) throw NotACocycle("omega is not phi-compatible: " + compat.violations.front());

  std::vector<Scalar> omega;
  for (const auto& w : c.omega) omega.push_back(w[0]);
  Built b = build_extension(L, &R.pmap, c.phi, omega, 0, name);
  auto rep = check_pmap_axioms(b.algebra, b.pmap);
  if (!rep.ok()) throw NotACocycle("extension violates the p-map axioms: " + rep.violations.front());
  b.pmap.verified = true;
  return {R, c, {std::move(b.algebra), std::move(b.pmap)}, b.layout.x_index};
}

ExtensionEquivalence extensions_equivalent(const RestrictedExtension& a, const RestrictedExtension& b) {
  if (a.base.algebra != b.base.algebra || !(a.base.pmap == b.base.pmap))
    throw BaseMismatch("extensions have different base algebras");
  const RestrictedAlgebra& R = a.base;
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  const std::size_t n = L.even_dim(), phi_dim = a.cocycle.phi.size();
  CoeffModule K = CoeffModule::trivial(L);

  auto pack = [&](const RestrictedCochain2& c) {
    Vec v(c.phi);
    for (const auto& w : c.omega) v.push_back(w[0]);
    return v;
  };
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(pack(d1_star(R, K, unit_vec(L.dim(), j))));
  Matrix sys = Matrix::from_columns(f, phi_dim + n, cols);
  auto sol = solve(sys, vec_sub(f, pack(b.cocycle), pack(a.cocycle)));

  ExtensionEquivalence out;
  if (!sol) return out;
  out.equivalent = true;
  out.psi = Vec(L.dim(), 0);
  std::copy(sol->begin(), sol->end(), out.psi.begin());

  const SuperAlgebra& E = a.algebra.algebra;
  ExtensionLayout lay = extension_layout(L, 0);
  std::vector<Vec> images(E.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vec v = E.basis_vector(lay.new_index[i]);
    v[a.x_index] = out.psi[i];
    images[lay.new_index[i]] = v;
  }
  images[a.x_index] = E.basis_vector(a.x_index);
  out.sigma = GradedMap::from_images(f, E.sdim(), images);
  out.sigma_verified = out.sigma->inverse().has_value() && check_restricted_morphism(*out.sigma, a.algebra, b.algebra);
  return out;
}

Quotient quotient_by_central(const SuperAlgebra& L, const Vec& generator) {
  const Field& f = L.field();
  if (is_zero(generator)) throw NotCentral("zero generator");
  if (!L.vector_parity(generator)) throw NotCentral("generator is not homogeneous");
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (!is_zero(L.bracket(generator, L.basis_vector(i)))) throw NotCentral("generator is not central");

  std::size_t k = L.dim() - 1;
  while (!generator[k]) --k;
  std::vector<std::size_t> pos(L.dim(), 0);
  std::vector<std::string> ev, od;
  for (std::size_t i = 0, a = 0; i < L.dim(); ++i) {
    if (i == k) continue;
    pos[i] = a++;
    (L.parity(i) ? od : ev).push_back(L.name(i));
  }
  Quotient q{SuperAlgebra(f, ev, od), {}, Matrix(f, L.dim() - 1, L.dim()), k};
  Scalar scale = f.neg(f.inv(generator[k]));
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (i == k) continue;
    q.projection.at(pos[i], i) = 1;
    q.projection.at(pos[i], k) = f.mul(scale, generator[i]);
  }
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) {
      if (i == k || j == k) continue;
      Vec v = q.projection.apply(L.structure(i, j));
      if (!is_zero(v)) q.algebra.set_bracket(pos[i], pos[j], v);
    }
  return q;
}

Quotient quotient_by_central(const RestrictedAlgebra& R, const Vec& generator) {
  const SuperAlgebra& L = R.algebra;
  if (L.is_even(generator) && !is_zero(generator) && !is_zero(pmap_eval(R, generator)))
    throw NotPClosed("generator has nonzero p-th power");
  Quotient q = quotient_by_central(L, generator);
  for (std::size_t j = 0; j < L.even_dim(); ++j)
    if (j != q.dropped) q.pmap.values.push_back(q.projection.apply(R.pmap.values[j]));
  auto rep = check_pmap_axioms(q.algebra, q.pmap);
  if (!rep.ok()) throw NotPClosed("induced map violates the p-map axioms: " + rep.violations.front());
  q.pmap.verified = true;
  return q;
}

namespace {

Vec pick_central(const RestrictedAlgebra& R) {
  GradedSubspace Z = center(R.algebra);
  const auto& even = Z.even_part().basis();
  for (const auto& z : even)
    if (is_zero(pmap_eval(R, z))) return z;
  if (!even.empty()) {
    Vec w = even.front();
    for (std::size_t step = 0; step <= R.algebra.dim(); ++step) {
      Vec next = pmap_eval(R, w);
      if (is_zero(next)) return w;
      w = next;
    }
    throw NoCenter("central p-powers do not vanish; the algebra is not p-nilpotent");
  }
  if (!Z.odd_part().basis().empty()) return Z.odd_part().basis().front();
  throw NoCenter("trivial center");
}

}  // namespace

Decomposition decompose_as_extension(const RestrictedAlgebra& R) {
  const SuperAlgebra& L = R.algebra;
  const Field& f = L.field();
  if (L.dim() < 2) throw DimensionMismatch("need total dimension at least 2");

  Decomposition d;
  d.central = pick_central(R);
  d.parity = *L.vector_parity(d.central);
  d.quotient = quotient_by_central(R, d.central);
  const SuperAlgebra& H = d.quotient.algebra;
  const std::size_t k = d.quotient.dropped;
  const Scalar inv_xk = f.inv(d.central[k]);

  // coordinate section: quotient basis a goes to the a-th surviving basis vector of L
  std::vector<std::size_t> orig;
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (i != k) orig.push_back(i);

  CochainSpace C(H, CoeffModule::trivial(H), 2);
  d.delta = Vec(C.dim(), 0);
  for (std::size_t t = 0; t < C.tuple_count(); ++t) {
    const auto& tu = C.tuples()[t];
    d.delta[C.column(t, 0)] = f.mul(L.structure(orig[tu[0]], orig[tu[1]])[k], inv_xk);
  }
  for (std::size_t j = 0; j < H.even_dim(); ++j)
    d.omega.push_back(d.parity ? 0 : f.mul(R.pmap.values[orig[j]][k], inv_xk));

  Built b = build_extension(H, &d.quotient.pmap, d.delta, d.omega, d.parity, L.name(k));
  d.rebuilt = RestrictedAlgebra::make(std::move(b.algebra), std::move(b.pmap));

  std::vector<Vec> images(L.dim());
  for (std::size_t a = 0; a < H.dim(); ++a) images[b.layout.new_index[a]] = L.basis_vector(orig[a]);
  images[b.layout.x_index] = d.central;
  d.iso = GradedMap::from_images(f, L.sdim(), images);
  d.verified = d.iso.inverse().has_value() && check_restricted_morphism(d.iso, d.rebuilt, R);
  return d;
}

}  // namespace resupal
