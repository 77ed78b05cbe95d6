#include "resupal/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "resupal/catalog.hpp"
#include "resupal/cohomology.hpp"
#include "resupal/equivalence.hpp"
#include "resupal/errors.hpp"
#include "resupal/extensions.hpp"
#include "resupal/io.hpp"
#include "resupal/restricted.hpp"

namespace resupal {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string span_text(const SuperAlgebra& L, const GradedSubspace& S) {
  if (S.dim() == 0) return "0";
  std::string out = "<";
  bool first = true;
  for (const auto& v : S.basis()) {
    out += (first ? "" : ", ") + L.format_vector(v);
    first = false;
  }
  return out + ">";
}

std::string pmap_text(const SuperAlgebra& L, const PMap& P) {
  std::string out;
  for (std::size_t j = 0; j < L.even_dim(); ++j) {
    if (is_zero(P.values[j])) continue;
    if (!out.empty()) out += "; ";
    out += L.name(j) + " -> " + L.format_vector(P.values[j]);
  }
  return out.empty() ? "zero map" : out;
}

std::string map_text(const SuperAlgebra& L, const GradedMap& A) {
  std::string out;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (i) out += "; ";
    out += L.name(i) + " -> " + L.format_vector(A.apply(L.basis_vector(i)));
  }
  return out;
}

std::optional<PMap> pick_pmap(const AlgebraDef& def, const SuperAlgebra& L, const std::string& label) {
  if (def.pmaps.empty()) return std::nullopt;
  if (label.empty()) return instantiate_pmap(def.pmaps.front(), L);
  for (const auto& pd : def.pmaps)
    if (pd.label == label) return instantiate_pmap(pd, L);
  throw UnknownName("no p-map labelled '" + label + "'");
}

unsigned default_prime(const AlgebraDef& def) { return def.p.value_or(3); }

std::vector<std::string> fingerprint_row(const std::string& name, const SuperAlgebra& L) {
  Fingerprint fp = fingerprint(L);
  std::vector<std::string> row = {name, to_string(fp.sdim), span_text(L, derived_subalgebra(L)), to_string(fp.center)};
  for (const auto& h : fp.h) row.push_back(to_string(h));
  return row;
}

const std::vector<std::string> kFingerprintHeader = {"name", "sdim", "[L,L]", "z(L)", "H1", "H2", "H3", "H4"};

// ---- reports ----

std::string invariants_report(const std::vector<unsigned>& primes) {
  std::string out;
  for (unsigned p : primes)
    for (const char* sd : {"1|3", "2|2", "3|1"}) {
      out += "# invariants, sdim " + std::string(sd) + ", p = " + std::to_string(p) + "\n";
      std::vector<std::vector<std::string>> rows = {kFingerprintHeader};
      for (const auto& name : invariant_table_rows(sd)) rows.push_back(fingerprint_row(name, catalog_get(name, p).algebra));
      out += render_table(rows) + "\n";
    }
  return out;
}

Vec recipe_cocycle(const SuperAlgebra& L, const ExtensionRecipe& r) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Vec d(C.dim(), 0);
  for (const auto& [ij, c] : r.cocycle) {
    auto [s, t] = C.canonical({static_cast<std::size_t>(ij.first - 1), static_cast<std::size_t>(ij.second - 1)});
    d[C.column(t, 0)] = L.field().from_int(s * c);
  }
  return d;
}

std::string cocycles_report(const std::vector<unsigned>& primes) {
  std::string out;
  std::vector<std::string> bases;
  for (const auto& r : extension_recipes())
    if (std::find(bases.begin(), bases.end(), r.base) == bases.end()) bases.push_back(r.base);
  for (unsigned p : primes) {
    out += "# homogeneous cocycle orbits over F_" + std::to_string(p) + "\n";
    std::vector<std::vector<std::string>> rows = {{"base", "parity", "|Aut|", "orbits", "cocycle", "orbit", "extension"}};
    for (const auto& base : bases) {
      SuperAlgebra L = catalog_get(base, p).algebra;
      for (int parity : {0, 1}) {
        std::string ptxt = parity ? "odd" : "even";
        CochainSpace C(L, CoeffModule::trivial(L), 2);
        SDim h = h_ce_dims(L, CoeffModule::trivial(L), 2, CochainModel::Polynomial);
        std::uint64_t classes = count_vectors(L.field(), parity ? h.odd : h.even);
        if (graded_gl_order(L.field(), L.sdim()) > 50000000 / std::max<std::uint64_t>(classes, 1)) {
          rows.push_back({base, ptxt, "-", "skipped", "-", "-", "-"});
          continue;
        }
        std::optional<OrbitTable> orbits;
        try {
          orbits = cocycle_orbits(L, parity);
        } catch (const BoundExceeded&) {
          rows.push_back({base, ptxt, "-", "bound", "-", "-", "-"});
          continue;
        }
        const OrbitTable& t = *orbits;
        bool any = false;
        for (const auto& r : extension_recipes()) {
          if (r.base != base || (r.x_even ? 0 : 1) != parity) continue;
          Vec d = recipe_cocycle(L, r);
          rows.push_back({base, ptxt, std::to_string(t.aut_order), std::to_string(t.orbits.size()),
                          C.describe_vector(d, L), std::to_string(t.orbit_of(d)), r.name});
          any = true;
        }
        if (!any) rows.push_back({base, ptxt, std::to_string(t.aut_order), std::to_string(t.orbits.size()), "-", "-", "-"});
      }
    }
    out += render_table(rows) + "\n";
  }
  return out;
}

std::string classification_report(std::size_t total_dim, const std::vector<unsigned>& primes) {
  std::string out;
  for (unsigned p : primes) {
    out += "# total dimension " + std::to_string(total_dim) + ", p = " + std::to_string(p) + "\n";
    std::vector<std::vector<std::string>> rows = {{"name", "brackets", "map", "p-map", "axioms", "p-nilpotent"}};
    for (const auto& name : classification_names(total_dim)) {
      AlgebraDef def = catalog_def(name);
      SuperAlgebra L = instantiate(def, Field::prime(p));
      std::string axioms = check_axioms(L).ok() ? "ok" : "FAIL";
      if (def.pmaps.empty()) rows.push_back({name, L.describe_brackets(), "-", "-", axioms, "-"});
      for (const auto& pd : def.pmaps) {
        PMap P = instantiate_pmap(pd, L);
        bool ok = check_pmap_axioms(L, P).ok();
        std::string nil = ok ? (is_p_nilpotent(RestrictedAlgebra::unverified(L, P)) ? "yes" : "no") : "-";
        rows.push_back({name, L.describe_brackets(), pd.label, pmap_text(L, P), ok && axioms == "ok" ? "ok" : "FAIL", nil});
      }
    }
    out += render_table(rows) + "\n";
  }
  return out;
}

struct PMapClass {
  std::vector<std::size_t> members;
  bool nilpotent = false;
  std::vector<std::string> labels;
};

constexpr std::uint64_t kGroupingOrder = 1000000;

// Aut(L)-classes of p-maps: P ~ A P A^{-1}.
std::vector<PMapClass> pmap_classes(const SuperAlgebra& L, const std::vector<PMap>& maps, const AlgebraDef* def,
                                    bool& grouped) {
  std::map<std::vector<Vec>, std::size_t> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i].values] = i;
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  grouped = maps.size() <= 1;
  if (!grouped && graded_gl_order(L.field(), L.sdim()) <= kGroupingOrder) try {
    AutGroup G = enumerate_aut(L);
    grouped = true;
    for (const auto& A : generating_set(G)) {
      GradedMap Ainv = *A.inverse();
      for (std::size_t i = 0; i < maps.size(); ++i) {
        PMap Q;
        for (std::size_t j = 0; j < L.even_dim(); ++j)
          Q.values.push_back(A.apply(pmap_eval(L, maps[i], Ainv.apply(L.basis_vector(j)))));
        auto it = index.find(Q.values);
        if (it == index.end()) continue;
        std::size_t a = find(i), b = find(it->second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  } catch (const BoundExceeded&) {
    grouped = false;
  }
  std::map<std::size_t, std::size_t> slot;
  std::vector<PMapClass> out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::size_t r = find(i);
    if (!slot.count(r)) {
      slot[r] = out.size();
      out.push_back({});
      out.back().nilpotent = is_p_nilpotent(RestrictedAlgebra::unverified(L, maps[i]));
    }
    out[slot[r]].members.push_back(i);
  }
  if (def)
    for (const auto& pd : def->pmaps) {
      auto it = index.find(instantiate_pmap(pd, L).values);
      if (it != index.end()) out[slot[find(it->second)]].labels.push_back(pd.label);
    }
  return out;
}

std::string pmaps_text(const SuperAlgebra& L, const AlgebraDef* def, bool all) {
  std::vector<PMap> maps = enumerate_pmaps(L);
  bool grouped = false;
  auto classes = pmap_classes(L, maps, def, grouped);
  std::size_t nil = 0, shown = 0;
  for (const auto& c : classes)
    if (c.nilpotent) ++nil;
  std::string out = std::to_string(maps.size()) + " p|2p-maps in " + std::to_string(classes.size()) + " " +
                    (grouped ? "Aut-classes" : "singleton classes (automorphism group too large to enumerate)") + ", " +
                    std::to_string(nil) + " p-nilpotent\n";
  for (const auto& c : classes) {
    if (!all && !c.nilpotent) continue;
    ++shown;
    out += "class " + std::to_string(shown) + ": size " + std::to_string(c.members.size()) +
           (c.nilpotent ? ", p-nilpotent" : ", not p-nilpotent");
    if (!c.labels.empty()) {
      out += ", catalog map";
      for (const auto& l : c.labels) out += " (" + l + ")";
    }
    out += "\n  " + pmap_text(L, maps[c.members.front()]) + "\n";
  }
  return out;
}

constexpr std::uint64_t kReportCandidates = 100000;

std::string pmap4_report(const std::vector<unsigned>& primes) {
  std::string out;
  for (unsigned p : primes) {
    out += "# p|2p-structures in total dimension 4, p = " + std::to_string(p) + "\n";
    for (const auto& name : classification_names(4)) {
      AlgebraDef def = catalog_def(name);
      SuperAlgebra L = instantiate(def, Field::prime(p));
      out += name + ": ";
      // Candidates are the particular solution plus any even central vector per even basis element.
      std::uint64_t per = count_vectors(L.field(), center(L).even_part().basis().size()), candidates = 1;
      for (std::size_t j = 0; j < L.even_dim() && candidates <= kReportCandidates; ++j) candidates *= per;
      if (candidates > kReportCandidates) {
        out += "skipped (more than " + std::to_string(kReportCandidates) + " candidate maps)\n";
        continue;
      }
      try {
        out += pmaps_text(L, &def, false);
      } catch (const BoundExceeded& e) {
        out += std::string("skipped (") + e.what() + ")\n";
      }
    }
    out += "\n";
  }
  return out;
}

std::string kfamily_report(const std::vector<unsigned>& primes) {
  std::string out;
  for (unsigned p : primes) {
    out += "# K-families, p = " + std::to_string(p) + "\n";
    std::vector<std::vector<std::string>> rows = {{"name", "sdim", "axioms", "nilindex", "p-maps", "restricted", "example"}};
    for (int n = 2; n <= 4; ++n)
      for (int m = 1; m <= 7; ++m) {
        AlgebraDef def;
        try {
          def = build_K_def(n, m);
        } catch (const UnsupportedPair&) {
          continue;
        }
        SuperAlgebra L = instantiate(def, Field::prime(p));
        std::string axioms = check_axioms(L).ok() ? "ok" : "FAIL";
        std::string nil = "-";
        try {
          nil = std::to_string(nilindex(L));
        } catch (const NotNilpotent&) {
        }
        std::string count = "-", restricted = "-", example = "-";
        try {
          auto maps = enumerate_pmaps(L);
          count = std::to_string(maps.size());
          restricted = maps.empty() ? "no" : "yes";
          for (const auto& P : maps)
            if (!is_zero(P.values[0])) {
              example = pmap_text(L, P);
              break;
            }
          if (!maps.empty() && example == "-") example = "zero map";
        } catch (const BoundExceeded&) {
          count = "bound";
        }
        rows.push_back({def.name, to_string(L.sdim()), axioms, nil, count, restricted, example});
      }
    out += render_table(rows) + "\n";
  }
  return out;
}

// ---- commands ----

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int cmd_check(Context& cx, const std::string& src, const std::string& primes) {
  AlgebraDef def = load_algebra(src);
  unsigned p = primes.empty() ? default_prime(def) : parse_primes(primes).front();
  SuperAlgebra L = instantiate(def, field_for(def, p));
  bool ok = true;
  auto rep = check_axioms(L);
  cx.out << "axioms: " << (rep.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& v : rep.violations) cx.out << "  " << v << "\n";
  ok = ok && rep.ok();
  for (const auto& pd : def.pmaps) {
    PMap P = instantiate_pmap(pd, L);
    auto prep = check_pmap_axioms(L, P);
    cx.out << "p-map " << pd.label << ": " << (prep.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& v : prep.violations) cx.out << "  " << v << "\n";
    ok = ok && prep.ok();
    if (prep.ok() && rep.ok()) {
      bool nil = is_p_nilpotent(RestrictedAlgebra::unverified(L, P));
      cx.out << "  p-nilpotent: " << (nil ? "yes" : "no") << "\n";
      ok = ok && nil;
    }
  }
  return ok ? 0 : 1;
}

int cmd_invariants(Context& cx, const std::string& src, const std::string& primes_text) {
  AlgebraDef def = load_algebra(src);
  std::vector<unsigned> primes =
      primes_text.empty() ? (def.p ? std::vector<unsigned>{*def.p} : std::vector<unsigned>{3, 5, 7, 11}) : parse_primes(primes_text);
  std::string name = def.name.empty() ? src : def.name;
  for (unsigned p : primes) {
    SuperAlgebra L = instantiate(def, field_for(def, p));
    cx.out << "p = " << p << "\n" << render_table({kFingerprintHeader, fingerprint_row(name, L)});
  }
  return 0;
}

std::string module_value_text(const SuperAlgebra& L, const CoeffModule& M, const Vec& v) {
  if (M.kind == "adjoint") return L.format_vector(v);
  return L.field().format(v[0]);
}

int cmd_cohomology(Context& cx, const std::string& src, const std::string& primes, std::size_t degree,
                   const std::string& coeff, bool restricted, bool plus_even, const std::string& label,
                   const std::string& model_name) {
  AlgebraDef def = load_algebra(src);
  unsigned p = primes.empty() ? default_prime(def) : parse_primes(primes).front();
  SuperAlgebra L = instantiate(def, field_for(def, p));
  if (coeff != "trivial" && coeff != "adjoint") throw ParseError("--coeff must be trivial or adjoint");
  CochainModel model = model_name == "multilinear" ? CochainModel::Multilinear : CochainModel::Polynomial;
  CoeffModule M = coeff == "adjoint" ? CoeffModule::adjoint(L) : CoeffModule::trivial(L);

  if (!restricted) {
    SDim h = h_ce_dims(L, M, degree, model);
    cx.out << "dim H" << degree << " = " << h.even << "|" << h.odd << "\n";
    CochainSpace C(L, M, degree);
    Subspace span(L.field(), C.dim());
    if (degree > 0) {
      Matrix prev = d_ce(L, M, degree - 1, model);
      for (std::size_t c = 0; c < prev.cols(); ++c) span.add(prev.col_vec(c));
    }
    cx.out << "representatives:\n";
    for (const auto& z : nullspace(d_ce(L, M, degree, model))) {
      Vec r = span.reduce(z);
      if (is_zero(r)) continue;
      span.add(z);
      std::optional<int> par;
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c]) par = C.parity(c);
      cx.out << "  [" << (par && *par ? "odd" : "even") << "] " << C.describe_vector(r, L) << "\n";
    }
    return 0;
  }

  auto P = pick_pmap(def, L, label);
  if (!P) throw ParseError("restricted cohomology needs a p-map");
  RestrictedAlgebra R = RestrictedAlgebra::make(L, *P);
  if (degree == 1) {
    SDim h = h1_res_dims(R, M);
    cx.out << "dim H1* = " << h.even << "|" << h.odd << "\n";
    return 0;
  }
  if (degree != 2) throw ParseError("restricted cohomology is available in degrees 1 and 2");
  RestrictedH2 H = plus_even ? h2_res_plus_even(R, M, model) : h2_res(R, M, model);
  cx.out << "dim Z2* = " << H.cocycles.size() << "\n";
  cx.out << "dim B2* = " << H.coboundaries.size() << "\n";
  cx.out << "dim H2*" << (plus_even ? "+ev" : "") << " = " << H.dim() << "\n";
  cx.out << "verified: " << (H.verified ? "yes" : "no") << "\n";
  CochainSpace C(L, M, 2);
  cx.out << "representatives:\n";
  for (const auto& v : H.representatives) {
    RestrictedCochain2 c = H.unpack(v);
    cx.out << "  phi = " << C.describe_vector(c.phi, L) << "; omega:";
    bool any = false;
    for (std::size_t j = 0; j < c.omega.size(); ++j)
      if (!is_zero(c.omega[j])) {
        cx.out << " " << L.name(j) << " -> " << module_value_text(L, M, c.omega[j]);
        any = true;
      }
    cx.out << (any ? "" : " 0") << "\n";
  }
  return 0;
}

std::vector<Scalar> parse_omega(const SuperAlgebra& L, const std::string& text) {
  std::vector<Scalar> out(L.even_dim(), 0);
  for (const auto& entry : split(text, ';')) {
    std::string e = trim(entry);
    if (e.empty()) continue;
    auto arrow = e.find("->");
    if (arrow == std::string::npos) throw ParseError("bad omega entry '" + e + "'");
    auto idx = L.index_of(trim(e.substr(0, arrow)));
    if (!idx || L.parity(*idx)) throw ParseError("omega is given on even basis elements");
    // the value is a scalar; read it as the coefficient of a placeholder name
    for (const auto& [unused, c] : parse_lincomb(trim(e.substr(arrow + 2)) + "*u"))
      out[*idx] = L.field().add(out[*idx], resolve(L.field(), c));
  }
  return out;
}

int cmd_extend(Context& cx, const std::string& src, const std::string& primes, const std::string& cocycle,
               const std::string& name, const std::string& parity, bool restricted, const std::string& omega,
               const std::string& label, const std::string& out_path) {
  AlgebraDef def = load_algebra(src);
  unsigned p = primes.empty() ? default_prime(def) : parse_primes(primes).front();
  SuperAlgebra L = instantiate(def, field_for(def, p));
  Vec delta = parse_scalar_cochain(L, cocycle);
  std::optional<int> par;
  if (parity == "even") par = 0;
  else if (parity == "odd") par = 1;
  else if (!parity.empty()) throw ParseError("--parity must be even or odd");
  if (is_zero(delta) && !par) par = 0;

  std::string doc;
  try {
    if (restricted) {
      auto P = pick_pmap(def, L, label);
      if (!P) throw ParseError("restricted extension needs a p-map");
      RestrictedAlgebra R = RestrictedAlgebra::make(L, *P);
      RestrictedCochain2 c{delta, {}};
      for (Scalar s : parse_omega(L, omega)) c.omega.push_back(Vec{s});
      RestrictedExtension E = central_extend(R, c, name);
      doc = algebra_to_json(E.algebra.algebra, &E.algebra.pmap);
    } else {
      doc = algebra_to_json(central_extend(L, delta, par, name));
    }
  } catch (const NotACocycle& e) {
    cx.err << "NotACocycle: " << e.what() << "\n";
    return 1;
  }
  if (out_path.empty()) {
    cx.out << doc;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write '" + out_path + "'");
    f << doc;
  }
  return 0;
}

int cmd_pmaps(Context& cx, const std::string& src, const std::string& primes, bool all) {
  AlgebraDef def = load_algebra(src);
  unsigned p = primes.empty() ? default_prime(def) : parse_primes(primes).front();
  SuperAlgebra L = instantiate(def, field_for(def, p));
  cx.out << pmaps_text(L, &def, all);
  return 0;
}

int cmd_orbits(Context& cx, const std::string& src, const std::string& primes, const std::string& parity) {
  AlgebraDef def = load_algebra(src);
  unsigned p = primes.empty() ? default_prime(def) : parse_primes(primes).front();
  SuperAlgebra L = instantiate(def, field_for(def, p));
  std::vector<int> parities;
  if (parity == "even" || parity == "all") parities.push_back(0);
  if (parity == "odd" || parity == "all") parities.push_back(1);
  if (parities.empty()) throw ParseError("--parity must be even, odd or all");
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  for (int par : parities) {
    OrbitTable t = cocycle_orbits(L, par);
    cx.out << (par ? "odd" : "even") << " classes: " << count_vectors(L.field(), t.classes.dim()) << ", |Aut| = " << t.aut_order
           << ", orbits = " << t.orbits.size() << "\n";
    std::vector<std::vector<std::string>> rows = {{"orbit", "size", "representative"}};
    for (std::size_t i = 0; i < t.orbits.size(); ++i)
      rows.push_back({std::to_string(i), std::to_string(t.orbits[i].size), C.describe_vector(t.orbits[i].representative, L)});
    cx.out << render_table(rows);
  }
  return 0;
}

int cmd_isomorphic(Context& cx, const std::string& a, const std::string& b, const std::string& primes, bool restricted,
                   const std::string& label_a, const std::string& label_b) {
  AlgebraDef da = load_algebra(a), db = load_algebra(b);
  unsigned p = primes.empty() ? default_prime(da) : parse_primes(primes).front();
  SuperAlgebra La = instantiate(da, field_for(da, p)), Lb = instantiate(db, field_for(db, p));
  Fingerprint fa = fingerprint(La), fb = fingerprint(Lb);
  if (fa != fb) {
    std::vector<std::vector<std::string>> rows = {kFingerprintHeader, fingerprint_row(a, La), fingerprint_row(b, Lb)};
    cx.out << "non-isomorphic: fingerprints differ\n" << render_table(rows);
    return 3;
  }
  try {
    std::optional<GradedMap> w;
    if (restricted) {
      auto Pa = pick_pmap(da, La, label_a), Pb = pick_pmap(db, Lb, label_b);
      if (!Pa || !Pb) throw ParseError("restricted comparison needs p-maps on both sides");
      RestrictedAlgebra Ra = RestrictedAlgebra::make(La, *Pa), Rb = RestrictedAlgebra::make(Lb, *Pb);
      w = restricted_isomorphism_search(Ra, Rb);
      if (w && !check_restricted_morphism(*w, Ra, Rb)) w.reset();
    } else {
      w = isomorphism_search(La, Lb);
      if (w && !preserves_brackets(*w, La, Lb)) w.reset();
    }
    if (!w) {
      cx.out << "inconclusive over F_" << p << ": no isomorphism defined over this field\n";
      return 4;
    }
    cx.out << "isomorphic over F_" << p << "; witness (verified):\n  " << map_text(La, *w) << "\n";
    return 0;
  } catch (const BoundExceeded& e) {
    cx.out << "inconclusive over F_" << p << ": " << e.what() << "\n";
    return 4;
  }
}

int cmd_reproduce(Context& cx, const std::string& tables, const std::string& primes_text, const std::string& out_dir) {
  std::vector<std::string> names;
  if (tables == "all")
    names = reproduce_tables();
  else
    names = split(tables, ',');
  std::vector<unsigned> primes = primes_text.empty() ? std::vector<unsigned>{3, 5, 7, 11} : parse_primes(primes_text);
  for (const auto& t : names) {
    std::string body = reproduce_report(trim(t), primes);
    if (out_dir.empty()) {
      cx.out << body;
    } else {
      std::filesystem::create_directories(out_dir);
      std::ofstream f(std::filesystem::path(out_dir) / (trim(t) + ".txt"));
      if (!f) throw ParseError("cannot write into '" + out_dir + "'");
      f << body;
      cx.out << "wrote " << (std::filesystem::path(out_dir) / (trim(t) + ".txt")).string() << "\n";
    }
  }
  return 0;
}

}  // namespace

std::vector<unsigned> parse_primes(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& part : split(text, ',')) {
    std::string t = trim(part);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(t, &used);
      if (used != t.size()) throw ParseError("bad prime '" + t + "'");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw ParseError("bad prime '" + t + "'");
    }
    if (out.back() < 3 || !is_prime(out.back())) throw ParseError("p must be an odd prime, got " + t);
  }
  if (out.empty()) throw ParseError("empty prime list");
  return out;
}

Vec parse_scalar_cochain(const SuperAlgebra& L, const std::string& text) {
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Vec out(C.dim(), 0);
  std::string t = trim(text);
  if (t.empty() || t == "0") return out;
  for (const auto& [name, coeff] : parse_lincomb(t)) {
    std::size_t i = 0, j = 0;
    if (name.size() == 3 && name[0] == 'D' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
      i = static_cast<std::size_t>(name[1] - '0');
      j = static_cast<std::size_t>(name[2] - '0');
    } else if (name.rfind("D_{", 0) == 0 && name.back() == '}') {
      auto parts = split(name.substr(3, name.size() - 4), ',');
      if (parts.size() != 2) throw ParseError("bad cochain term '" + name + "'");
      try {
        i = std::stoul(trim(parts[0]));
        j = std::stoul(trim(parts[1]));
      } catch (const std::logic_error&) {
        throw ParseError("bad cochain term '" + name + "'");
      }
    } else {
      throw ParseError("bad cochain term '" + name + "'");
    }
    if (i < 1 || j < 1 || i > L.dim() || j > L.dim()) throw ParseError("index out of range in '" + name + "'");
    auto [sign, tu] = C.canonical({i - 1, j - 1});
    if (sign == 0) throw ParseError(name + " vanishes identically");
    Scalar v = resolve(L.field(), coeff);
    std::size_t col = C.column(tu, 0);
    out[col] = L.field().add(out[col], sign > 0 ? v : L.field().neg(v));
  }
  return out;
}

std::vector<std::string> reproduce_tables() { return {"invariants", "cocycles", "classif3", "classif4", "pmap4", "K-families"}; }

std::string reproduce_report(const std::string& table, const std::vector<unsigned>& primes) {
  if (table == "invariants") return invariants_report(primes);
  if (table == "cocycles") return cocycles_report(primes);
  if (table == "classif3") return classification_report(3, primes);
  if (table == "classif4") return classification_report(4, primes);
  if (table == "pmap4") return pmap4_report(primes);
  if (table == "K-families") return kfamily_report(primes);
  throw ParseError("unknown table '" + table + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted Lie superalgebras over finite fields"};
  app.require_subcommand(1);
  std::string primes, src, src_b, label, label_b, coeff = "trivial", model = "polynomial", cocycle = "0", name = "X",
                                                    parity, omega, out_path, parity_sel = "all", tables = "all";
  std::size_t degree = 2;
  bool restricted = false, plus_even = false, all = false;

  auto* check = app.add_subcommand("check", "verify the axioms of an algebra and its p-maps");
  check->add_option("source", src, "JSON file or catalog:NAME")->required();
  check->add_option("--p", primes, "characteristic");

  auto* inv = app.add_subcommand("invariants", "fingerprint table");
  inv->add_option("source", src)->required();
  inv->add_option("--p", primes, "comma-separated primes");

  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions and representatives");
  coh->add_option("source", src)->required();
  coh->add_option("--p", primes);
  coh->add_option("--degree", degree);
  coh->add_option("--coeff", coeff, "trivial or adjoint");
  coh->add_flag("--restricted", restricted);
  coh->add_flag("--plus-even", plus_even);
  coh->add_option("--pmap", label, "catalog p-map label");
  coh->add_option("--model", model, "polynomial or multilinear");

  auto* ext = app.add_subcommand("extend", "one-dimensional central extension");
  ext->add_option("source", src)->required();
  ext->add_option("--p", primes);
  ext->add_option("--cocycle", cocycle, "e.g. 2*D22+D33");
  ext->add_option("--name", name);
  ext->add_option("--parity", parity, "parity of the new element (needed for the zero cocycle)");
  ext->add_flag("--restricted", restricted);
  ext->add_option("--omega", omega, "e.g. e1->1");
  ext->add_option("--pmap", label);
  ext->add_option("--out", out_path);

  auto* pm = app.add_subcommand("pmaps", "enumerate p|2p-structures");
  pm->add_option("source", src)->required();
  pm->add_option("--p", primes);
  pm->add_flag("--all", all, "include maps that are not p-nilpotent");

  auto* orb = app.add_subcommand("orbits", "Aut-orbits of 2-cocycle classes");
  orb->add_option("source", src)->required();
  orb->add_option("--p", primes);
  orb->add_option("--parity", parity_sel, "even, odd or all");

  auto* iso = app.add_subcommand("isomorphic", "compare two algebras");
  iso->add_option("first", src)->required();
  iso->add_option("second", src_b)->required();
  iso->add_option("--p", primes);
  iso->add_flag("--restricted", restricted);
  iso->add_option("--pmap-a", label);
  iso->add_option("--pmap-b", label_b);

  auto* rep = app.add_subcommand("reproduce", "emit the report tables");
  rep->add_option("--tables", tables, "all or a comma-separated list");
  rep->add_option("--p", primes);
  rep->add_option("--out", out_path, "directory for report files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Context cx{out, err};
  try {
    if (*check) return cmd_check(cx, src, primes);
    if (*inv) return cmd_invariants(cx, src, primes);
    if (*coh) return cmd_cohomology(cx, src, primes, degree, coeff, restricted, plus_even, label, model);
    if (*ext) return cmd_extend(cx, src, primes, cocycle, name, parity, restricted, omega, label, out_path);
    if (*pm) return cmd_pmaps(cx, src, primes, all);
    if (*orb) return cmd_orbits(cx, src, primes, parity_sel);
    if (*iso) return cmd_isomorphic(cx, src, src_b, primes, restricted, label, label_b);
    if (*rep) return cmd_reproduce(cx, tables, primes, out_path);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "UnknownName: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace resupal
