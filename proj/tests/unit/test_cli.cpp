#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "resupal/catalog.hpp"
#include "resupal/cli.hpp"
#include "resupal/cohomology.hpp"
#include "resupal/errors.hpp"

using namespace resupal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = "/tmp/resupal_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "catalog:L_{1|2}^4", "--p", "3"}).code == 0);
  std::string bad = temp_file("bad.json", R"({"p": 3, "even": ["e1", "e2"], "odd": [],
    "brackets": [{"left": "e1", "right": "e1", "value": {"e2": 1}}]})");
  CHECK(run({"check", bad}).code == 1);
  std::string broken = temp_file("broken.json", "{\"p\": 3, ");
  CHECK(run({"check", broken}).code == 2);
  CHECK(run({"check", "catalog:nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("invariants and cohomology output") {
  Run r = run({"invariants", "catalog:L_{2|2}^a", "--p", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4|4") != std::string::npos);
  Run c = run({"cohomology", "catalog:L_{2|1}^2", "--p", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("dim H2 = 0|1") != std::string::npos);
  Run h = run({"cohomology", "catalog:L_{1|2}^3", "--p", "5", "--coeff", "adjoint", "--restricted"});
  CHECK(h.code == 0);
  CHECK(h.out.find("dim H2* = 5") != std::string::npos);
}

TEST_CASE("extend") {
  Run ok = run({"extend", "catalog:L_{1|2}^1", "--p", "3", "--cocycle", "D23"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"X\"") != std::string::npos);
  Run bad = run({"extend", "catalog:L_{1|2}^3", "--p", "3", "--cocycle", "D33"});
  CHECK(bad.code == 1);
  Run junk = run({"extend", "catalog:L_{1|2}^1", "--p", "3", "--cocycle", "D9"});
  CHECK(junk.code == 2);
}

TEST_CASE("isomorphic") {
  CHECK(run({"isomorphic", "catalog:L_{2|2}^f", "catalog:L_{2|2}^j", "--p", "3"}).code == 0);
  CHECK(run({"isomorphic", "catalog:L_{2|2}^a", "catalog:L_{2|2}^b", "--p", "3"}).code == 3);
  CHECK(run({"isomorphic", "catalog:L_{2|2}^3", "catalog:L_{2|2}^3", "--p", "3", "--restricted", "--pmap-a", "a",
             "--pmap-b", "b"})
            .code != 0);
}

TEST_CASE("pmaps and orbits") {
  Run p = run({"pmaps", "catalog:L_{2|2}^5", "--p", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("(a)") != std::string::npos);
  CHECK(p.out.find("(b)") != std::string::npos);
  Run o = run({"orbits", "catalog:L_{2|1}^2", "--p", "3"});
  CHECK(o.code == 0);
}

TEST_CASE("reproduce") {
  Run r = run({"reproduce", "--tables", "classif3", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("L_{2|1}^2") != std::string::npos);
  CHECK(run({"reproduce", "--tables", "nope"}).code == 2);
}

TEST_CASE("cochain and prime parsing") {
  SuperAlgebra L = catalog_get("L_{1|2}^2", 3u).algebra;
  CochainSpace C(L, CoeffModule::trivial(L), 2);
  Vec v = parse_scalar_cochain(L, "2*D22+D33");
  CHECK(v[C.column(*C.tuple_index({1, 1}), 0)] == 2);
  CHECK(v[C.column(*C.tuple_index({2, 2}), 0)] == 1);
  CHECK(parse_scalar_cochain(L, "D_{2,2}") == parse_scalar_cochain(L, "D22"));
  CHECK(is_zero(parse_scalar_cochain(L, "0")));
  CHECK_THROWS_AS(parse_scalar_cochain(L, "D2"), ParseError);
  CHECK(parse_primes("3,5,7") == std::vector<unsigned>{3, 5, 7});
  CHECK_THROWS(parse_primes("4"));
}
