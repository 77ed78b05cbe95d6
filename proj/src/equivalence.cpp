#include "resupal/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "resupal/errors.hpp"

namespace resupal {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn = sat_mul(qn, q);
  std::uint64_t out = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out = sat_mul(out, qn - qi);
    qi *= q;
  }
  return out;
}

std::size_t max_support(const Vec& v, std::size_t floor) {
  std::size_t m = floor;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m = std::max(m, i);
  return m;
}

Vec combine(const Field& f, const Vec& coeffs, const std::vector<Vec>& images, std::size_t dim) {
  Vec out(dim, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k]) vec_axpy(f, out, coeffs[k], images[k]);
  return out;
}

// Depth-first search over graded maps src -> dst given by basis images. A bracket or p-map
// constraint is checked at the first step where every image it mentions is assigned.
class MorphismSearch {
 public:
  MorphismSearch(const SuperAlgebra& src, const SuperAlgebra& dst, const PMap* psrc, const PMap* pdst)
      : src_(src), dst_(dst), psrc_(psrc), pdst_(pdst), f_(dst.field()), ready_(src.dim()) {
    if (src.sdim() != dst.sdim()) throw DimensionMismatch("superdimensions differ");
    if (graded_gl_order(f_, src.sdim()) > enumeration_bound())
      throw BoundExceeded("graded GL group exceeds the enumeration bound");
    const std::size_t n = dst.even_dim(), N = dst.dim();
    for (int par = 0; par < 2; ++par) {
      std::size_t lo = par ? n : 0, hi = par ? N : n;
      std::uint64_t total = count_vectors(f_, hi - lo);
      for (std::uint64_t idx = 1; idx < total; ++idx) candidates_[par].push_back(vector_from_index(dst, lo, hi, idx));
    }
    for (std::size_t a = 0; a < src.dim(); ++a)
      for (std::size_t b = a; b < src.dim(); ++b) ready_[max_support(src.structure(a, b), b)].push_back({a, b, false});
    if (psrc_)
      for (std::size_t j = 0; j < src.even_dim(); ++j) ready_[max_support(psrc_->values[j], j)].push_back({j, j, true});
  }

  // visit returns false to stop the search.
  void run(const std::function<bool(const std::vector<Vec>&)>& visit) {
    images_.assign(src_.dim(), Vec());
    Subspace e(f_, dst_.dim()), o(f_, dst_.dim());
    stop_ = false;
    step(0, e, o, visit);
  }

 private:
  struct Constraint {
    std::size_t a, b;
    bool pmap;
  };

  bool holds(const Constraint& c) const {
    const std::size_t N = dst_.dim();
    if (c.pmap) return combine(f_, psrc_->values[c.a], images_, N) == pmap_eval(dst_, *pdst_, images_[c.a]);
    return combine(f_, src_.structure(c.a, c.b), images_, N) == dst_.bracket(images_[c.a], images_[c.b]);
  }

  void step(std::size_t i, const Subspace& even, const Subspace& odd,
            const std::function<bool(const std::vector<Vec>&)>& visit) {
    if (stop_) return;
    if (i == src_.dim()) {
      if (!visit(images_)) stop_ = true;
      return;
    }
    const int par = src_.parity(i);
    const Subspace& span = par ? odd : even;
    for (const auto& cand : candidates_[par]) {
      if (span.contains(cand)) continue;
      images_[i] = cand;
      bool ok = true;
      for (const auto& c : ready_[i])
        if (!holds(c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Subspace next = span;
      next.add(cand);
      if (par)
        step(i + 1, even, next, visit);
      else
        step(i + 1, next, odd, visit);
      if (stop_) return;
    }
  }

  const SuperAlgebra& src_;
  const SuperAlgebra& dst_;
  const PMap* psrc_;
  const PMap* pdst_;
  Field f_;
  std::vector<Vec> candidates_[2];
  std::vector<std::vector<Constraint>> ready_;
  std::vector<Vec> images_;
  bool stop_ = false;
};

AutGroup collect(MorphismSearch& s, const SuperAlgebra& L) {
  AutGroup g;
  s.run([&](const std::vector<Vec>& im) {
    g.elements.push_back(GradedMap::from_images(L.field(), L.sdim(), im));
    return true;
  });
  return g;
}

std::optional<GradedMap> first(MorphismSearch& s, const SuperAlgebra& L) {
  std::optional<GradedMap> out;
  s.run([&](const std::vector<Vec>& im) {
    out = GradedMap::from_images(L.field(), L.sdim(), im);
    return false;
  });
  return out;
}

}  // namespace

std::uint64_t graded_gl_order(const Field& f, SDim s) {
  return sat_mul(gl_order(f.order(), s.even), gl_order(f.order(), s.odd));
}

AutGroup enumerate_aut(const SuperAlgebra& L) {
  MorphismSearch s(L, L, nullptr, nullptr);
  return collect(s, L);
}

AutGroup enumerate_aut_p(const RestrictedAlgebra& R) {
  MorphismSearch s(R.algebra, R.algebra, &R.pmap, &R.pmap);
  return collect(s, R.algebra);
}

std::optional<GradedMap> isomorphism_search(const SuperAlgebra& a, const SuperAlgebra& b) {
  MorphismSearch s(a, b, nullptr, nullptr);
  return first(s, a);
}

std::optional<GradedMap> restricted_isomorphism_search(const RestrictedAlgebra& a, const RestrictedAlgebra& b) {
  MorphismSearch s(a.algebra, b.algebra, &a.pmap, &b.pmap);
  return first(s, a.algebra);
}

Matrix cochain_action_matrix(const SuperAlgebra& L, const GradedMap& A, std::size_t k) {
  CoeffModule K = CoeffModule::trivial(L);
  CochainSpace C(L, K, k);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < L.dim(); ++i) images.push_back(A.apply(L.basis_vector(i)));
  Matrix m(L.field(), C.dim(), C.dim());
  for (std::size_t t = 0; t < C.tuple_count(); ++t) {
    std::vector<Vec> args;
    for (auto i : C.tuples()[t]) args.push_back(images[i]);
    for (std::size_t c = 0; c < C.dim(); ++c) m.at(t, c) = evaluate_cochain(L, C, unit_vec(C.dim(), c), args)[0];
  }
  return m;
}

Vec act_on_cocycle(const SuperAlgebra& L, const GradedMap& A, const Vec& phi, std::size_t k) {
  if (A.sdim() != L.sdim() || !A.inverse() || !preserves_brackets(A, L, L))
    throw NotAutomorphism("map is not an automorphism");
  return cochain_action_matrix(L, A, k).apply(phi);
}

RestrictedCochain2 act_on_cocycle(const RestrictedAlgebra& R, const GradedMap& A, const RestrictedCochain2& c) {
  const SuperAlgebra& L = R.algebra;
  if (A.sdim() != L.sdim() || !A.inverse() || !check_restricted_morphism(A, R, R))
    throw NotAutomorphism("map is not a restricted automorphism");
  RestrictedCochain2 out;
  out.phi = cochain_action_matrix(L, A, 2).apply(c.phi);
  CoeffModule K = CoeffModule::trivial(L);
  for (std::size_t j = 0; j < L.even_dim(); ++j) out.omega.push_back(omega_extend(L, K, c, A.apply(L.basis_vector(j))));
  return out;
}

std::uint64_t OrbitTable::class_index(const Vec& cocycle) const {
  auto coords = classes.coordinates(normal_form(cocycle));
  if (!coords) throw NotACocycle("vector does not represent a class");
  const Field& f = classes.field();
  std::uint64_t idx = 0;
  for (std::size_t i = coords->size(); i-- > 0;) idx = idx * f.order() + (*coords)[i];
  return idx;
}

OrbitTable cocycle_orbits(const SuperAlgebra& L, std::optional<int> parity, CochainModel model) {
  const Field& f = L.field();
  CoeffModule K = CoeffModule::trivial(L);
  CochainSpace C1(L, K, 1), C2(L, K, 2);
  OrbitTable t(f, C2.dim());

  Matrix d1 = d_ce(L, K, 1);
  for (std::size_t c = 0; c < C1.dim(); ++c)
    if (!parity || C1.parity(c) == *parity) t.coboundaries.add(d1.col_vec(c));
  for (const auto& z : ce_cocycles(L, K, 2, model)) {
    Vec v = z;
    if (parity)
      for (std::size_t c = 0; c < C2.dim(); ++c)
        if (C2.parity(c) != *parity) v[c] = 0;
    // the cocycle space is a sum of its parity parts, so dropping one part keeps a cocycle
    t.classes.add(t.normal_form(v));
  }
  const std::size_t d = t.classes.dim();
  std::uint64_t total = count_vectors(f, d);
  if (total > 1000000) throw BoundExceeded("class space too large for orbit enumeration");

  AutGroup G = enumerate_aut(L);
  t.aut_order = G.elements.size();
  const auto& basis = t.classes.basis();

  // action of each automorphism on class coordinates
  std::vector<Matrix> act;
  for (const auto& A : G.elements) {
    Matrix M = cochain_action_matrix(L, A, 2);
    Matrix T(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto coords = t.classes.coordinates(t.normal_form(M.apply(basis[i])));
      if (!coords) throw NotACocycle("automorphism moved a class outside the class space");
      for (std::size_t r = 0; r < d; ++r) T.at(r, i) = (*coords)[r];
    }
    act.push_back(std::move(T));
  }

  auto digits = [&](std::uint64_t idx) {
    Vec a(d, 0);
    for (std::size_t i = 0; i < d; ++i, idx /= f.order()) a[i] = static_cast<Scalar>(idx % f.order());
    return a;
  };
  auto index = [&](const Vec& a) {
    std::uint64_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * f.order() + a[i];
    return idx;
  };

  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec a = digits(idx);
    for (const auto& T : act) {
      std::uint64_t r1 = find(idx), r2 = find(index(T.apply(a)));
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  }

  t.orbit_id.assign(total, 0);
  std::vector<std::int64_t> slot(total, -1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = find(idx);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(t.orbits.size());
      t.orbits.push_back({});
    }
    Orbit& o = t.orbits[slot[r]];
    Vec nf(C2.dim(), 0);
    Vec a = digits(idx);
    for (std::size_t i = 0; i < d; ++i)
      if (a[i]) vec_axpy(f, nf, a[i], basis[i]);
    if (o.size == 0 || nf < o.representative) o.representative = nf;
    ++o.size;
    t.orbit_id[idx] = static_cast<std::size_t>(slot[r]);
  }
  return t;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  if (sdim != o.sdim || derived != o.derived || center != o.center || nilindex != o.nilindex) return false;
  for (int k = 0; k < 4; ++k)
    if (h[k] != o.h[k]) return false;
  return true;
}

Fingerprint fingerprint(const SuperAlgebra& L, CochainModel model) {
  Fingerprint fp;
  fp.sdim = L.sdim();
  fp.derived = derived_subalgebra(L).sdim();
  fp.center = center(L).sdim();
  try {
    fp.nilindex = nilindex(L);
  } catch (const NotNilpotent&) {
  }
  CoeffModule K = CoeffModule::trivial(L);
  for (std::size_t k = 1; k <= 4; ++k) fp.h[k - 1] = h_ce_dims(L, K, k, model);
  return fp;
}

std::vector<Fingerprint> fingerprint(const AlgebraDef& def, const std::vector<unsigned>& primes) {
  std::vector<Fingerprint> out;
  for (unsigned p : primes) out.push_back(fingerprint(instantiate(def, Field::prime(p))));
  return out;
}

std::vector<GradedMap> generating_set(const AutGroup& G) {
  std::vector<GradedMap> gens;
  if (G.elements.empty()) return gens;
  auto key = [](const GradedMap& g) {
    Matrix m = g.full();
    return std::vector<Scalar>(m.row(0), m.row(0) + m.rows() * m.cols());
  };
  const GradedMap id = GradedMap::identity(G.elements.front().even_block().field(), G.elements.front().sdim());
  std::set<std::vector<Scalar>> span{key(id)};
  for (const auto& g : G.elements) {
    if (span.size() == G.elements.size()) break;
    if (span.count(key(g))) continue;
    gens.push_back(g);
    span = {key(id)};
    std::vector<GradedMap> frontier{id};
    while (!frontier.empty()) {
      std::vector<GradedMap> next;
      for (const auto& h : frontier)
        for (const auto& s : gens) {
          GradedMap hs = h.compose(s);
          if (span.insert(key(hs)).second) next.push_back(std::move(hs));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace resupal
