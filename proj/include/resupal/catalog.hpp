#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resupal/field.hpp"
#include "resupal/restricted.hpp"
#include "resupal/superalgebra.hpp"

namespace resupal {

// Coefficient num/den + c1*x, resolved per field at instantiation.
struct Coeff {
  long long num = 0;
  long long den = 1;
  long long c1 = 0;
};

using LinComb = std::vector<std::pair<std::string, Coeff>>;

struct BracketDef {
  std::string left;
  std::string right;
  LinComb value;
};

struct PMapDef {
  std::string label;
  std::vector<std::pair<std::string, LinComb>> values;
};

// Field-independent description of an algebra, as in catalog entries and algebra files.
struct AlgebraDef {
  std::string name;
  unsigned field_degree = 1;
  std::optional<unsigned> p;
  std::vector<std::string> even;
  std::vector<std::string> odd;
  std::vector<BracketDef> brackets;
  std::vector<PMapDef> pmaps;
};

Scalar resolve(const Field& f, const Coeff& c);
Vec resolve(const SuperAlgebra& L, const LinComb& lc);
// Throws ParseError when a pair is listed twice inconsistently.
SuperAlgebra instantiate(const AlgebraDef& def, const Field& f);
PMap instantiate_pmap(const PMapDef& def, const SuperAlgebra& L);

struct LabeledPMap {
  std::string label;
  PMap pmap;
};

struct CatalogAlgebra {
  std::string name;
  SuperAlgebra algebra;
  std::vector<LabeledPMap> pmaps;
};

// Parses "[a,b]=c; [a,a]=2*c - 1/2*d" style bracket lists and "a->b" map lists.
std::vector<BracketDef> parse_brackets(const std::string& text);
LinComb parse_lincomb(const std::string& text);

std::vector<std::string> catalog_names();
std::vector<std::string> classification_names(std::size_t total_dim);
std::vector<std::string> working_names();
std::string canonical_name(const std::string& name);
AlgebraDef catalog_def(const std::string& name);
CatalogAlgebra catalog_get(const std::string& name, const Field& f);
CatalogAlgebra catalog_get(const std::string& name, unsigned p);

// Base algebra name, cocycle text and parity of X for a working-name extension.
struct ExtensionRecipe {
  std::string name;
  std::string base;
  std::vector<std::pair<std::pair<int, int>, long long>> cocycle;  // 1-based Delta indices
  bool x_even;
};
const std::vector<ExtensionRecipe>& extension_recipes();
// Pairs of working names identified by relabeling or explicit isomorphism.
const std::vector<std::pair<std::string, std::string>>& working_isomorphisms();

// Rows of the invariant tables, keyed by superdimension "1|3", "2|2" or "3|1".
std::vector<std::string> invariant_table_rows(const std::string& sdim);

AlgebraDef build_K_def(int n, int m);
SuperAlgebra build_K(int n, int m, unsigned p);

}  // namespace resupal
