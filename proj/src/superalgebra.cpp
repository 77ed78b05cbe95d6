#include "resupal/superalgebra.hpp"

#include <sstream>

#include "resupal/errors.hpp"

namespace resupal {

std::string to_string(const SDim& s) {
  if (s.even == 0 && s.odd == 0) return "0";
  return std::to_string(s.even) + "|" + std::to_string(s.odd);
}

SuperAlgebra::SuperAlgebra(const Field& f, std::vector<std::string> even_names, std::vector<std::string> odd_names)
    : field_(f), n_(even_names.size()), m_(odd_names.size()) {
  names_ = std::move(even_names);
  names_.insert(names_.end(), odd_names.begin(), odd_names.end());
  c_.assign(dim() * dim(), Vec(dim(), 0));
}

std::optional<std::size_t> SuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void SuperAlgebra::set_raw(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim() || j >= dim() || v.size() != dim()) throw DimensionMismatch("bracket index or value size");
  c_[i * dim() + j] = v;
}

void SuperAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  set_raw(i, j, v);
  if (i == j) return;
  // [e_j,e_i] = -(-1)^{|i||j|} [e_i,e_j]
  Scalar s = koszul(parity(i), parity(j)) == 1 ? field_.neg(1) : 1;
  set_raw(j, i, vec_scale(field_, s, v));
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bracket arguments must live in the algebra");
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j]) continue;
      const Vec& c = structure(i, j);
      Scalar s = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim(); ++k)
        if (c[k]) out[k] = field_.add(out[k], field_.mul(s, c[k]));
    }
  }
  return out;
}

Matrix SuperAlgebra::ad(const Vec& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) = col[k];
  }
  return m;
}

std::optional<int> SuperAlgebra::vector_parity(const Vec& v) const {
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) (i < n_ ? has_even : has_odd) = true;
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? 1 : 0;
}

bool SuperAlgebra::is_even(const Vec& v) const {
  for (std::size_t i = n_; i < v.size(); ++i)
    if (v[i]) return false;
  return true;
}

bool SuperAlgebra::is_abelian() const {
  for (const auto& v : c_)
    if (!is_zero(v)) return false;
  return true;
}

bool SuperAlgebra::operator==(const SuperAlgebra& o) const {
  return field_ == o.field_ && n_ == o.n_ && m_ == o.m_ && names_ == o.names_ && c_ == o.c_;
}

std::string SuperAlgebra::format_vector(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    if (!first) os << " + ";
    if (v[k] != 1) os << field_.format(v[k]) << "*";
    os << names_[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string SuperAlgebra::describe_brackets() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      const Vec& v = structure(i, j);
      if (is_zero(v)) continue;
      if (any) os << ", ";
      os << "[" << names_[i] << "," << names_[j] << "]=" << format_vector(v);
      any = true;
    }
  if (!any) os << "abelian";
  return os.str();
}

std::uint64_t count_vectors(const Field& f, std::size_t k) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c *= f.order();
    if (c > (1ULL << 40)) return c;
  }
  return c;
}

Vec vector_from_index(const SuperAlgebra& L, std::size_t lo, std::size_t hi, std::uint64_t idx) {
  Vec v(L.dim(), 0);
  for (std::size_t k = lo; k < hi; ++k) {
    v[k] = static_cast<Scalar>(idx % L.field().order());
    idx /= L.field().order();
  }
  return v;
}

Vec random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.order() - 1);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

Vec random_even(const SuperAlgebra& L, std::mt19937_64& rng) {
  Vec v = random_vector(L.field(), L.dim(), rng);
  for (std::size_t k = L.even_dim(); k < L.dim(); ++k) v[k] = 0;
  return v;
}

Vec random_odd(const SuperAlgebra& L, std::mt19937_64& rng) {
  Vec v = random_vector(L.field(), L.dim(), rng);
  for (std::size_t k = 0; k < L.even_dim(); ++k) v[k] = 0;
  return v;
}

AxiomReport check_axioms(const SuperAlgebra& L, std::uint64_t seed) {
  AxiomReport rep;
  const Field& f = L.field();
  const std::size_t N = L.dim();
  auto nm = [&](std::size_t i) { return L.name(i); };

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Vec& c = L.structure(i, j);
      for (std::size_t k = 0; k < N; ++k)
        if (c[k] && ((L.parity(i) + L.parity(j)) % 2) != L.parity(k)) {
          rep.violations.push_back("grading: [" + nm(i) + "," + nm(j) + "] has a component along " + nm(k));
          break;
        }
      Scalar s = koszul(L.parity(i), L.parity(j)) == 1 ? f.neg(1) : 1;
      if (L.structure(j, i) != vec_scale(f, s, c) && i <= j) {
        if (i == j)
          rep.violations.push_back("antisymmetry: [" + nm(i) + "," + nm(i) + "] must vanish for an even element");
        else
          rep.violations.push_back("antisymmetry: [" + nm(i) + "," + nm(j) + "] and [" + nm(j) + "," + nm(i) + "]");
      }
    }

  // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        Vec ea = L.basis_vector(a), eb = L.basis_vector(b), ec = L.basis_vector(c);
        Vec lhs = L.bracket(ea, L.bracket(eb, ec));
        Vec rhs = L.bracket(L.bracket(ea, eb), ec);
        Vec t = L.bracket(eb, L.bracket(ea, ec));
        if (koszul(L.parity(a), L.parity(b)) == -1) t = vec_scale(f, f.neg(1), t);
        rhs = vec_add(f, rhs, t);
        if (lhs != rhs) rep.violations.push_back("Jacobi fails on (" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
      }

  if (f.characteristic() == 3 && L.odd_dim() > 0) {
    auto cubic = [&](const Vec& x) { return is_zero(L.bracket(x, L.bracket(x, x))); };
    std::uint64_t total = count_vectors(f, L.odd_dim());
    if (total <= 729) {
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vec x = vector_from_index(L, L.even_dim(), N, idx);
        if (!cubic(x)) {
          rep.violations.push_back("cubic condition [x,[x,x]]=0 fails at x = " + L.format_vector(x));
          break;
        }
      }
    } else {
      std::mt19937_64 rng(seed);
      for (int t = 0; t < 1000; ++t) {
        Vec x = random_odd(L, rng);
        if (!cubic(x)) {
          rep.violations.push_back("cubic condition [x,[x,x]]=0 fails at x = " + L.format_vector(x));
          break;
        }
      }
    }
  }
  return rep;
}

void GradedSubspace::add(const Vec& v) {
  Vec ev(v), od(v);
  for (std::size_t k = 0; k < v.size(); ++k) (k < n_ ? od[k] : ev[k]) = 0;
  even_.add(ev);
  odd_.add(od);
}

bool GradedSubspace::contains(const Vec& v) const {
  Vec ev(v), od(v);
  for (std::size_t k = 0; k < v.size(); ++k) (k < n_ ? od[k] : ev[k]) = 0;
  return even_.contains(ev) && odd_.contains(od);
}

std::vector<Vec> GradedSubspace::basis() const {
  std::vector<Vec> out = even_.basis();
  out.insert(out.end(), odd_.basis().begin(), odd_.basis().end());
  return out;
}

GradedSubspace center(const SuperAlgebra& L) {
  const std::size_t N = L.dim();
  // Unknown x = sum x_i e_i with [x, e_j] = 0 for every j; both parities at once since the
  // conditions split by grading.
  Matrix sys(L.field(), N * N, N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) {
      const Vec& c = L.structure(i, j);
      for (std::size_t k = 0; k < N; ++k) sys.at(j * N + k, i) = c[k];
    }
  GradedSubspace z(L);
  for (const auto& v : nullspace(sys)) z.add(v);
  return z;
}

namespace {

GradedSubspace bracket_with_all(const SuperAlgebra& L, const std::vector<Vec>& gens) {
  GradedSubspace out(L);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < L.dim(); ++j) out.add(L.bracket(g, L.basis_vector(j)));
  return out;
}

}  // namespace

GradedSubspace derived_subalgebra(const SuperAlgebra& L) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) gens.push_back(L.basis_vector(i));
  return bracket_with_all(L, gens);
}

std::vector<GradedSubspace> lower_central_series(const SuperAlgebra& L) {
  std::vector<GradedSubspace> out;
  GradedSubspace c(L);
  for (std::size_t i = 0; i < L.dim(); ++i) c.add(L.basis_vector(i));
  out.push_back(c);
  while (out.back().dim() > 0) {
    GradedSubspace next = bracket_with_all(L, out.back().basis());
    if (next.dim() == out.back().dim()) break;
    out.push_back(next);
  }
  return out;
}

std::size_t nilindex(const SuperAlgebra& L) {
  auto series = lower_central_series(L);
  if (series.back().dim() != 0) throw NotNilpotent("lower central series stabilises at a nonzero term");
  return series.size() - 1;
}

GradedMap::GradedMap(Matrix even_block, Matrix odd_block) : even_(std::move(even_block)), odd_(std::move(odd_block)) {
  if (even_.rows() != even_.cols() || odd_.rows() != odd_.cols()) throw DimensionMismatch("graded map blocks must be square");
}

GradedMap GradedMap::identity(const Field& f, SDim s) { return {Matrix::identity(f, s.even), Matrix::identity(f, s.odd)}; }

GradedMap GradedMap::from_images(const Field& f, SDim s, const std::vector<Vec>& images) {
  if (images.size() != s.total()) throw DimensionMismatch("need one image per basis vector");
  Matrix ev(f, s.even, s.even), od(f, s.odd, s.odd);
  for (std::size_t j = 0; j < images.size(); ++j) {
    const Vec& im = images[j];
    if (im.size() != s.total()) throw DimensionMismatch("image size");
    for (std::size_t k = 0; k < im.size(); ++k) {
      if (!im[k]) continue;
      bool src_even = j < s.even, dst_even = k < s.even;
      if (src_even != dst_even) throw DimensionMismatch("image does not preserve parity");
      if (src_even)
        ev.at(k, j) = im[k];
      else
        od.at(k - s.even, j - s.even) = im[k];
    }
  }
  return {ev, od};
}

Matrix GradedMap::full() const {
  std::size_t n = even_.rows(), m = odd_.rows();
  Matrix out(even_.field(), n + m, n + m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = even_.at(r, c);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out.at(n + r, n + c) = odd_.at(r, c);
  return out;
}

Vec GradedMap::apply(const Vec& v) const {
  std::size_t n = even_.rows(), m = odd_.rows();
  if (v.size() != n + m) throw DimensionMismatch("graded map argument");
  const Field& f = even_.rows() ? even_.field() : odd_.field();
  Vec out(n + m, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (v[c])
      for (std::size_t r = 0; r < n; ++r) out[r] = f.add(out[r], f.mul(even_.at(r, c), v[c]));
  for (std::size_t c = 0; c < m; ++c)
    if (v[n + c])
      for (std::size_t r = 0; r < m; ++r) out[n + r] = f.add(out[n + r], f.mul(odd_.at(r, c), v[n + c]));
  return out;
}

GradedMap GradedMap::compose(const GradedMap& inner) const { return {even_ * inner.even_, odd_ * inner.odd_}; }

std::optional<GradedMap> GradedMap::inverse() const {
  auto e = resupal::inverse(even_);
  auto o = resupal::inverse(odd_);
  if (!e || !o) return std::nullopt;
  return GradedMap(*e, *o);
}

bool preserves_brackets(const GradedMap& f, const SuperAlgebra& src, const SuperAlgebra& dst) {
  if (src.sdim() != f.sdim() || dst.sdim() != f.sdim()) throw DimensionMismatch("graded map and algebras differ in superdimension");
  std::vector<Vec> img;
  for (std::size_t i = 0; i < src.dim(); ++i) img.push_back(f.apply(src.basis_vector(i)));
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i; j < src.dim(); ++j)
      if (f.apply(src.structure(i, j)) != dst.bracket(img[i], img[j])) return false;
  return true;
}

SuperAlgebra transport(const SuperAlgebra& L, const GradedMap& A) {
  auto inv = A.inverse();
  if (!inv) throw DimensionMismatch("transport needs an invertible map");
  std::vector<std::string> ev(L.names().begin(), L.names().begin() + static_cast<std::ptrdiff_t>(L.even_dim()));
  std::vector<std::string> od(L.names().begin() + static_cast<std::ptrdiff_t>(L.even_dim()), L.names().end());
  SuperAlgebra out(L.field(), ev, od);
  std::vector<Vec> pre;
  for (std::size_t i = 0; i < L.dim(); ++i) pre.push_back(inv->apply(L.basis_vector(i)));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) out.set_raw(i, j, A.apply(L.bracket(pre[i], pre[j])));
  return out;
}

}  // namespace resupal
