#include "resupal/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "resupal/errors.hpp"

namespace resupal {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Coeff parse_coeff(const json& j) {
  if (j.is_number_integer()) return {j.get<long long>(), 1, 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return {j[0].get<long long>(), 1, j[1].get<long long>()};
  if (j.is_object() && j.contains("num")) {
    long long den = j.value("den", 1LL);
    if (den == 0) throw ParseError("zero denominator");
    return {j.at("num").get<long long>(), den, 0};
  }
  throw ParseError("bad coefficient " + j.dump());
}

LinComb parse_value(const json& j) {
  if (!j.is_object()) throw ParseError("expected {name: coeff}, got " + j.dump());
  LinComb out;
  for (const auto& [name, c] : j.items()) out.push_back({name, parse_coeff(c)});
  return out;
}

std::vector<std::string> parse_names(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  for (const auto& n : doc.at(key)) {
    if (!n.is_string()) throw ParseError(std::string("names in '") + key + "' must be strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

}  // namespace

AlgebraDef parse_algebra_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  try {
    AlgebraDef def;
    def.name = doc.value("name", std::string("file"));
    if (doc.contains("p")) def.p = doc.at("p").get<unsigned>();
    def.field_degree = doc.value("field_degree", 1u);
    if (def.field_degree != 1 && def.field_degree != 2) throw ParseError("field_degree must be 1 or 2");
    def.even = parse_names(doc, "even");
    def.odd = parse_names(doc, "odd");
    if (doc.contains("brackets"))
      for (const auto& b : doc.at("brackets"))
        def.brackets.push_back({b.at("left").get<std::string>(), b.at("right").get<std::string>(), parse_value(b.at("value"))});
    if (doc.contains("pmap") && !doc.at("pmap").is_null()) {
      PMapDef pm;
      pm.label = "file";
      for (const auto& [name, v] : doc.at("pmap").items()) pm.values.push_back({name, parse_value(v)});
      def.pmaps.push_back(pm);
    }
    return def;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad algebra document: ") + e.what());
  }
}

AlgebraDef load_algebra(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_def(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw ParseError("cannot read '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str());
}

Field field_for(const AlgebraDef& def, unsigned p) {
  return def.field_degree == 2 ? Field::quadratic(p) : Field::prime(p);
}

namespace {

ordered_json coeff_json(const Field& f, Scalar s) {
  auto [c0, c1] = f.coeffs(s);
  const long long p = f.characteristic();
  auto sym = [&](long long v) { return v > p / 2 ? v - p : v; };
  if (f.degree() == 2) return ordered_json::array({sym(c0), sym(c1)});
  return sym(c0);
}

ordered_json vector_json(const SuperAlgebra& L, const Vec& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) out[L.name(k)] = coeff_json(L.field(), v[k]);
  return out;
}

}  // namespace

std::string algebra_to_json(const SuperAlgebra& L, const PMap* pmap) {
  ordered_json doc;
  doc["p"] = L.field().characteristic();
  doc["field_degree"] = L.field().degree();
  doc["even"] = std::vector<std::string>(L.names().begin(), L.names().begin() + L.even_dim());
  doc["odd"] = std::vector<std::string>(L.names().begin() + L.even_dim(), L.names().end());
  doc["brackets"] = ordered_json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j)
      if (!is_zero(L.structure(i, j)))
        doc["brackets"].push_back({{"left", L.name(i)}, {"right", L.name(j)}, {"value", vector_json(L, L.structure(i, j))}});
  if (pmap) {
    ordered_json pm = ordered_json::object();
    for (std::size_t j = 0; j < L.even_dim(); ++j)
      if (!is_zero(pmap->values[j])) pm[L.name(j)] = vector_json(L, pmap->values[j]);
    doc["pmap"] = pm;
  }
  return doc.dump(2) + "\n";
}

}  // namespace resupal
