#include "resupal/catalog.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "resupal/errors.hpp"

namespace resupal {

Scalar resolve(const Field& f, const Coeff& c) {
  Scalar base = f.from_rational(c.num, c.den);
  if (c.c1 == 0) return base;
  return f.add(base, f.make(0, c.c1));
}

Vec resolve(const SuperAlgebra& L, const LinComb& lc) {
  Vec v = L.zero_vector();
  for (const auto& [name, c] : lc) {
    auto idx = L.index_of(name);
    if (!idx) throw UnknownName("unknown basis element '" + name + "'");
    v[*idx] = L.field().add(v[*idx], resolve(L.field(), c));
  }
  return v;
}

SuperAlgebra instantiate(const AlgebraDef& def, const Field& f) {
  SuperAlgebra L(f, def.even, def.odd);
  std::map<std::pair<std::size_t, std::size_t>, Vec> listed;
  for (const auto& b : def.brackets) {
    auto i = L.index_of(b.left), j = L.index_of(b.right);
    if (!i) throw UnknownName("unknown basis element '" + b.left + "'");
    if (!j) throw UnknownName("unknown basis element '" + b.right + "'");
    Vec v = resolve(L, b.value);
    auto key = std::make_pair(*i, *j);
    if (listed.count(key) && listed[key] != v) throw ParseError("bracket [" + b.left + "," + b.right + "] listed twice");
    listed[key] = v;
  }
  for (const auto& [key, v] : listed) {
    auto [i, j] = key;
    auto rev = listed.find({j, i});
    if (i != j && rev != listed.end()) {
      Scalar s = koszul(L.parity(i), L.parity(j)) == 1 ? f.neg(1) : 1;
      if (rev->second != vec_scale(f, s, v))
        throw ParseError("brackets [" + L.name(i) + "," + L.name(j) + "] and [" + L.name(j) + "," + L.name(i) +
                         "] are inconsistent");
      L.set_raw(i, j, v);
    } else {
      L.set_bracket(i, j, v);
    }
  }
  return L;
}

PMap instantiate_pmap(const PMapDef& def, const SuperAlgebra& L) {
  PMap P = PMap::zero(L);
  for (const auto& [name, lc] : def.values) {
    auto idx = L.index_of(name);
    if (!idx) throw UnknownName("unknown basis element '" + name + "'");
    if (*idx >= L.even_dim()) throw OddInput("p-map value given for odd element '" + name + "'");
    P.values[*idx] = resolve(L, lc);
  }
  return P;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Coeff parse_coeff(const std::string& s) {
  Coeff c;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      c.num = std::stoll(s);
    } else {
      c.num = std::stoll(s.substr(0, slash));
      c.den = std::stoll(s.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw ParseError("bad coefficient '" + s + "'");
  }
  return c;
}

}  // namespace

LinComb parse_lincomb(const std::string& text) {
  LinComb out;
  std::string s = trim(text);
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == ' ')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = trim(s.substr(pos, end - pos));
    pos = end;
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    Coeff c{1, 1, 0};
    std::string name = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      c = parse_coeff(trim(term.substr(0, star)));
      name = trim(term.substr(star + 1));
    }
    c.num *= sign;
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw ParseError("bad term '" + term + "'");
    out.push_back({name, c});
  }
  return out;
}

std::vector<BracketDef> parse_brackets(const std::string& text) {
  std::vector<BracketDef> out;
  for (const auto& entry : split(text, ';')) {
    std::string e = trim(entry);
    if (e.empty()) continue;
    auto parts = split(e, '=');
    if (parts.size() < 2) throw ParseError("bracket entry without '=': " + e);
    LinComb value = parse_lincomb(parts.back());
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
      std::string b = trim(parts[k]);
      if (b.size() < 5 || b.front() != '[' || b.back() != ']') throw ParseError("bad bracket '" + b + "'");
      auto args = split(b.substr(1, b.size() - 2), ',');
      if (args.size() != 2) throw ParseError("bad bracket '" + b + "'");
      out.push_back({trim(args[0]), trim(args[1]), value});
    }
  }
  return out;
}

namespace {

PMapDef parse_pmap(const std::string& label, const std::string& text) {
  PMapDef d;
  d.label = label;
  for (const auto& entry : split(text, ';')) {
    std::string e = trim(entry);
    if (e.empty()) continue;
    auto arrow = e.find("->");
    if (arrow == std::string::npos) throw ParseError("bad map entry '" + e + "'");
    d.values.push_back({trim(e.substr(0, arrow)), parse_lincomb(e.substr(arrow + 2))});
  }
  return d;
}

AlgebraDef make_def(const std::string& name, std::vector<std::string> even, std::vector<std::string> odd,
                    const std::string& brackets, std::vector<std::pair<std::string, std::string>> maps = {}) {
  AlgebraDef d;
  d.name = name;
  d.even = std::move(even);
  d.odd = std::move(odd);
  d.brackets = parse_brackets(brackets);
  for (const auto& [label, text] : maps) d.pmaps.push_back(parse_pmap(label, text));
  return d;
}

using Names = std::vector<std::string>;

const std::vector<AlgebraDef>& classification_defs() {
  static const std::vector<AlgebraDef> defs = [] {
    std::vector<AlgebraDef> v;
    const Names e3 = {"e1", "e2", "e3"};
    // total dimension 3
    v.push_back(make_def("L_{0|3}^1", {}, e3, "", {{"-", ""}}));
    for (auto [k, br] : std::vector<std::pair<std::string, std::string>>{
             {"1", ""}, {"2", "[e2,e3]=e1"}, {"3", "[e1,e2]=e3"}, {"4", "[e3,e3]=e1"}})
      v.push_back(make_def("L_{1|2}^" + k, {"e1"}, {"e2", "e3"}, br, {{"a", ""}}));
    for (auto [k, br] : std::vector<std::pair<std::string, std::string>>{{"1", ""}, {"2", "[e3,e3]=e2"}})
      v.push_back(make_def("L_{2|1}^" + k, {"e1", "e2"}, {"e3"}, br, {{"a", ""}, {"b", "e1->e2"}}));
    v.push_back(make_def("L_{3|0}^1", e3, {}, "", {{"a", ""}, {"b", "e1->e2"}, {"c", "e1->e2; e2->e3"}}));
    v.push_back(make_def("L_{3|0}^2", e3, {}, "[e1,e2]=e3", {{"a", ""}, {"b", "e1->e3"}}));

    // total dimension 4
    v.push_back(make_def("L_{0|4}^1", {}, {"x1", "x2", "x3", "x4"}, "", {{"-", ""}}));
    const Names ev13 = {"x1"}, od13 = {"x2", "x3", "x4"};
    for (auto [k, br] : std::vector<std::pair<std::string, std::string>>{{"1", ""},
                                                                          {"2", "[x1,x3]=x4"},
                                                                          {"3", "[x2,x3]=x1"},
                                                                          {"4", "[x1,x2]=x3; [x1,x3]=x4"},
                                                                          {"5", "[x3,x3]=x1"},
                                                                          {"6", "[x2,x2]=x1; [x3,x4]=x1"}})
      v.push_back(make_def("L_{1|3}^" + k, ev13, od13, br, {{"a", ""}}));
    const Names ev22 = {"x1", "x2"}, od22 = {"x3", "x4"};
    for (auto [k, br] :
         std::vector<std::pair<std::string, std::string>>{{"1", ""},
                                                          {"2", "[x3,x4]=x2"},
                                                          {"3", "[x3,x3]=x2; [x3,x4]=x1"},
                                                          {"4", "[x3,x3]=[x4,x4]=x2; [x3,x4]=x1"},
                                                          {"5", "[x1,x3]=x4"},
                                                          {"6", "[x1,x3]=x4; [x3,x3]=x2"},
                                                          {"7", "[x4,x4]=x1"}})
      v.push_back(make_def("L_{2|2}^" + k, ev22, od22, br, {{"a", ""}, {"b", "x1->x2"}}));
    const Names ev31 = {"x1", "x2", "x3"}, od31 = {"x4"};
    const std::vector<std::pair<std::string, std::string>> abelian_even = {
        {"a", ""}, {"b", "x1->x2"}, {"c", "x1->x2; x2->x3"}};
    const std::vector<std::pair<std::string, std::string>> heisenberg_even = {{"a", ""}, {"b", "x1->x3"}};
    v.push_back(make_def("L_{3|1}^1", ev31, od31, "", abelian_even));
    v.push_back(make_def("L_{3|1}^2", ev31, od31, "[x1,x2]=x3", heisenberg_even));
    // x3 is the odd square: an even element squares to zero.
    v.push_back(make_def("L_{3|1}^3", ev31, od31, "[x4,x4]=x3", abelian_even));
    v.push_back(make_def("L_{3|1}^4", ev31, od31, "[x1,x2]=[x4,x4]=x3", heisenberg_even));
    const Names ev40 = {"x1", "x2", "x3", "x4"};
    v.push_back(make_def("L_{4|0}^1", ev40, {}, ""));
    v.push_back(make_def("L_{4|0}^2", ev40, {}, "[x1,x2]=x3"));
    v.push_back(make_def("L_{4|0}^3", ev40, {}, "[x1,x2]=x3; [x1,x3]=x4"));
    return v;
  }();
  return defs;
}

struct WorkingRow {
  std::string name;
  std::string base;
  std::string cocycle;
  bool x_even;
  std::string brackets;
};

const std::vector<WorkingRow>& working_rows() {
  static const std::vector<WorkingRow> rows = {
      {"L_{2|2}^a", "L_{1|2}^1", "", true, ""},
      {"L_{1|3}^a", "L_{1|2}^1", "", false, ""},
      // Bracket rows follow the cocycle column where the two disagree (b, l, j).
      {"L_{1|3}^b", "L_{1|2}^1", "12", false, "[e1,e2]=X"},
      {"L_{2|2}^b", "L_{1|2}^1", "23", true, "[e2,e3]=X"},
      {"L_{2|2}^c", "L_{1|2}^1", "22+23+33", true, "[e2,e2]=[e2,e3]=[e3,e3]=X"},
      {"L_{2|2}^d", "L_{1|2}^2", "", true, "[e2,e3]=e1"},
      {"L_{1|3}^c", "L_{1|2}^2", "", false, "[e2,e3]=e1"},
      {"L_{2|2}^e", "L_{1|2}^2", "22", true, "[e2,e3]=e1; [e2,e2]=X"},
      {"L_{2|2}^f", "L_{1|2}^2", "22+33", true, "[e2,e3]=e1; [e2,e2]=[e3,e3]=X"},
      {"L_{2|2}^g", "L_{1|2}^3", "", true, "[e1,e2]=e3"},
      {"L_{1|3}^d", "L_{1|2}^3", "", false, "[e1,e2]=e3"},
      {"L_{1|3}^e", "L_{1|2}^3", "13", false, "[e1,e2]=e3; [e1,e3]=X"},
      {"L_{2|2}^h", "L_{1|2}^3", "22", true, "[e1,e2]=e3; [e2,e2]=X"},
      {"L_{2|2}^i", "L_{1|2}^4", "", true, "[e3,e3]=e1"},
      {"L_{1|3}^f", "L_{1|2}^4", "", false, "[e3,e3]=e1"},
      {"L_{2|2}^j", "L_{1|2}^4", "22", true, "[e3,e3]=e1; [e2,e2]=X"},
      {"L_{2|2}^k", "L_{1|2}^4", "23", true, "[e3,e3]=e1; [e2,e3]=X"},
      {"L_{2|2}^l", "L_{1|2}^4", "22+23", true, "[e3,e3]=e1; [e2,e2]=[e2,e3]=X"},
      {"L_{3|1}^a", "L_{2|1}^1", "", true, ""},
      {"L_{2|2}^m", "L_{2|1}^1", "", false, ""},
      {"L_{2|2}^n", "L_{2|1}^1", "13", false, "[e1,e3]=X"},
      {"L_{3|1}^b", "L_{2|1}^1", "12", true, "[e1,e2]=X"},
      {"L_{3|1}^c", "L_{2|1}^1", "33", true, "[e3,e3]=X"},
      {"L_{3|1}^d", "L_{2|1}^1", "12+33", true, "[e1,e2]=[e3,e3]=X"},
      {"L_{3|1}^e", "L_{2|1}^2", "", true, "[e3,e3]=e2"},
      {"L_{2|2}^o", "L_{2|1}^2", "", false, "[e3,e3]=e2"},
      {"L_{2|2}^p", "L_{2|1}^2", "13", false, "[e3,e3]=e2; [e1,e3]=X"},
      {"L_{0|4}^a", "L_{0|3}^1", "", false, ""},
      {"L_{1|3}^g", "L_{0|3}^1", "", true, ""},
      {"L_{1|3}^h", "L_{0|3}^1", "11", true, "[e1,e1]=X"},
      {"L_{1|3}^i", "L_{0|3}^1", "12", true, "[e1,e2]=X"},
      {"L_{1|3}^j", "L_{0|3}^1", "11+23", true, "[e1,e1]=[e2,e3]=X"},
  };
  return rows;
}

const AlgebraDef& classification_def(const std::string& name) {
  for (const auto& d : classification_defs())
    if (d.name == name) return d;
  throw UnknownName("unknown algebra '" + name + "'");
}

AlgebraDef working_def(const WorkingRow& row) {
  const AlgebraDef& base = classification_def(row.base);
  Names ev = base.even, od = base.odd;
  (row.x_even ? ev : od).push_back("X");
  return make_def(row.name, ev, od, row.brackets);
}

}  // namespace

const std::vector<ExtensionRecipe>& extension_recipes() {
  static const std::vector<ExtensionRecipe> recipes = [] {
    std::vector<ExtensionRecipe> out;
    for (const auto& row : working_rows()) {
      ExtensionRecipe r{row.name, row.base, {}, row.x_even};
      if (!row.cocycle.empty())
        for (const auto& t : split(row.cocycle, '+')) r.cocycle.push_back({{t[0] - '0', t[1] - '0'}, 1});
      out.push_back(r);
    }
    return out;
  }();
  return recipes;
}

const std::vector<std::pair<std::string, std::string>>& working_isomorphisms() {
  static const std::vector<std::pair<std::string, std::string>> iso = {
      {"L_{1|3}^a", "L_{1|3}^g"}, {"L_{1|3}^b", "L_{1|3}^d"}, {"L_{1|3}^c", "L_{1|3}^i"}, {"L_{1|3}^f", "L_{1|3}^h"},
      {"L_{2|2}^a", "L_{2|2}^m"}, {"L_{2|2}^b", "L_{2|2}^d"}, {"L_{2|2}^e", "L_{2|2}^k"}, {"L_{2|2}^g", "L_{2|2}^n"},
      {"L_{2|2}^h", "L_{2|2}^p"}, {"L_{2|2}^i", "L_{2|2}^o"}, {"L_{3|1}^c", "L_{3|1}^e"}, {"L_{2|2}^f", "L_{2|2}^j"},
      {"L_{2|2}^f", "L_{2|2}^l"}, {"L_{2|2}^c", "L_{2|2}^i"},
  };
  return iso;
}

std::vector<std::string> invariant_table_rows(const std::string& sdim) {
  std::string letters;
  if (sdim == "1|3") letters = "abcefj";
  else if (sdim == "2|2") letters = "abcefghijl";
  else if (sdim == "3|1") letters = "abcd";
  else throw UnknownName("no invariant table for superdimension " + sdim);
  std::vector<std::string> out;
  for (char c : letters) out.push_back("L_{" + sdim + "}^" + c);
  return out;
}

std::vector<std::string> classification_names(std::size_t total_dim) {
  std::vector<std::string> out;
  for (const auto& d : classification_defs())
    if (d.even.size() + d.odd.size() == total_dim) out.push_back(d.name);
  return out;
}

std::vector<std::string> working_names() {
  std::vector<std::string> out;
  for (const auto& r : working_rows()) out.push_back(r.name);
  return out;
}

std::vector<std::string> catalog_names() {
  auto out = classification_names(3);
  auto four = classification_names(4);
  out.insert(out.end(), four.begin(), four.end());
  auto w = working_names();
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string canonical_name(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ' && ch != '{' && ch != '}') s += ch;
  if (s.rfind("catalog:", 0) == 0) s = s.substr(8);
  if (s.empty()) throw UnknownName("empty algebra name");
  if (s[0] == 'K') {
    // K^n,m or K_n,m
    std::string rest = s.substr(1);
    if (!rest.empty() && (rest[0] == '^' || rest[0] == '_')) rest = rest.substr(1);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw UnknownName("unknown algebra '" + raw + "'");
    return "K^{" + rest.substr(0, comma) + "," + rest.substr(comma + 1) + "}";
  }
  if (s[0] != 'L') throw UnknownName("unknown algebra '" + raw + "'");
  std::string sup, sub;
  std::size_t pos = 1;
  while (pos < s.size()) {
    char mark = s[pos++];
    std::size_t end = pos;
    while (end < s.size() && s[end] != '^' && s[end] != '_') ++end;
    (mark == '^' ? sup : sub) = s.substr(pos, end - pos);
    pos = end;
  }
  if (sup.empty() || sub.empty()) throw UnknownName("unknown algebra '" + raw + "'");
  return "L_{" + sub + "}^" + sup;
}

AlgebraDef catalog_def(const std::string& raw) {
  std::string name = canonical_name(raw);
  if (name[0] == 'K') {
    auto comma = name.find(',');
    int n = 0, m = 0;
    try {
      n = std::stoi(name.substr(3, comma - 3));
      m = std::stoi(name.substr(comma + 1));
    } catch (const std::exception&) {
      throw UnknownName("unknown algebra '" + raw + "'");
    }
    return build_K_def(n, m);
  }
  for (const auto& d : classification_defs())
    if (d.name == name) return d;
  for (const auto& r : working_rows())
    if (r.name == name) return working_def(r);
  throw UnknownName("unknown algebra '" + raw + "'");
}

CatalogAlgebra catalog_get(const std::string& name, const Field& f) {
  AlgebraDef d = catalog_def(name);
  CatalogAlgebra out{d.name, instantiate(d, f), {}};
  for (const auto& pm : d.pmaps) out.pmaps.push_back({pm.label, instantiate_pmap(pm, out.algebra)});
  return out;
}

CatalogAlgebra catalog_get(const std::string& name, unsigned p) { return catalog_get(name, Field::prime(p)); }

AlgebraDef build_K_def(int n, int m) {
  if (m < 1 || n < 2 || n > 4 || (n == 4 && m % 2 == 1 && m != 5))
    throw UnsupportedPair("K^{" + std::to_string(n) + "," + std::to_string(m) + "} is not one of the supported families");
  AlgebraDef d;
  d.name = "K^{" + std::to_string(n) + "," + std::to_string(m) + "}";
  for (int i = 0; i < n; ++i) d.even.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) d.odd.push_back("y" + std::to_string(i));
  auto x = [](int i) { return "x" + std::to_string(i); };
  auto y = [](int i) { return "y" + std::to_string(i); };
  std::map<std::pair<std::string, std::string>, LinComb> br;
  auto add = [&](const std::string& a, const std::string& b, const std::string& target, long long num, long long den) {
    br[{a, b}].push_back({target, Coeff{num, den, 0}});
  };
  auto sgn = [](int e) { return (e % 2 == 0) ? 1LL : -1LL; };

  for (int i = 1; i + 1 < n; ++i) add(x(0), x(i), x(i + 1), 1, 1);
  for (int i = 1; i < m; ++i) add(x(0), y(i), y(i + 1), 1, 1);

  // Signs and coefficients are the ones that satisfy super-Jacobi; see the K-family unit test.
  if (n == 4 && m == 5) {
    add(x(1), y(3), y(5), 1, 1);
    add(x(2), y(2), y(5), -1, 1);
    add(x(3), y(1), y(5), 1, 1);
    add(y(1), y(3), x(1), -1, 1);
    add(y(2), y(2), x(1), 1, 1);
    add(y(2), y(3), x(2), 1, 2);
    add(y(1), y(4), x(2), -3, 2);
    add(y(2), y(4), x(3), -3, 2);
    add(y(3), y(3), x(3), 2, 1);
  } else if (m % 2 == 1) {
    const std::string target = n == 2 ? x(1) : x(2);
    for (int i = 1; i <= (m + 1) / 2; ++i) add(y(i), y(m + 1 - i), target, sgn(i + 1), 1);
  } else {
    for (int i = 1; i <= m / 2; ++i) add(y(i), y(m - i), x(1), sgn(m / 2 - i), 1);
    if (n >= 3)
      for (int i = 1; i <= m / 2; ++i) add(y(i), y(m + 1 - i), x(2), sgn(m / 2 - i) * (m - 2 * i + 1), 2);
    if (n == 4)
      for (int i = 2; i <= (m + 2) / 2; ++i)
        add(y(i), y(m + 2 - i), x(3), sgn(m / 2 - i + 1) * (i - 1) * (m + 1 - i), 2);
  }
  for (auto& [key, val] : br) d.brackets.push_back({key.first, key.second, val});
  return d;
}

SuperAlgebra build_K(int n, int m, unsigned p) { return instantiate(build_K_def(n, m), Field::prime(p)); }

}  // namespace resupal
