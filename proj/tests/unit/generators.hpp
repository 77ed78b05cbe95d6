#pragma once

// Hand-rolled random generators shared by the unit tests.
#include <random>
#include <vector>

#include "resupal/linalg.hpp"
#include "resupal/superalgebra.hpp"

namespace gen {

using namespace resupal;

inline Scalar scalar(const Field& f, std::mt19937_64& rng) {
  return static_cast<Scalar>(rng() % f.order());
}

inline Scalar nonzero(const Field& f, std::mt19937_64& rng) {
  return static_cast<Scalar>(1 + rng() % (f.order() - 1));
}

inline Matrix matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(f, rng);
  return m;
}

inline Matrix invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline GradedMap graded_invertible(const Field& f, SDim s, std::mt19937_64& rng) {
  return GradedMap(invertible(f, s.even, rng), invertible(f, s.odd, rng));
}

inline Vec homogeneous(const SuperAlgebra& L, int parity, std::mt19937_64& rng) {
  return parity ? random_odd(L, rng) : random_even(L, rng);
}

}  // namespace gen
