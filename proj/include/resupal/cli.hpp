#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "resupal/superalgebra.hpp"

namespace resupal {

// Exit codes: 0 success, 1 check failure or invalid cocycle, 2 usage or parse error,
// 3 non-isomorphic by fingerprint, 4 isomorphism search inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2*D22+D33" or "D_{1,10}"; "0" is the zero cochain. Throws ParseError.
Vec parse_scalar_cochain(const SuperAlgebra& L, const std::string& text);

std::vector<unsigned> parse_primes(const std::string& text);

// Report bodies emitted by the reproduce command.
std::vector<std::string> reproduce_tables();
std::string reproduce_report(const std::string& table, const std::vector<unsigned>& primes);

}  // namespace resupal
