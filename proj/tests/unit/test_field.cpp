#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "resupal/errors.hpp"
#include "resupal/field.hpp"

using namespace resupal;

namespace {

std::vector<Field> small_fields() {
  return {Field::prime(3), Field::prime(5), Field::prime(7), Field::quadratic(3), Field::quadratic(5)};
}

}  // namespace

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.order());
    auto els = f.elements();
    REQUIRE(els.size() == f.order());
    for (Scalar a : els) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Scalar b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        // Frobenius is a ring map.
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        for (Scalar c : {Scalar(1), Scalar(f.order() - 1), b})
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  for (const Field& f : small_fields()) {
    bool generator = false;
    for (Scalar a = 1; a < f.order(); ++a) {
      CHECK(f.pow(a, f.order() - 1) == 1);
      std::set<Scalar> powers;
      Scalar x = 1;
      for (unsigned k = 0; k + 1 < f.order(); ++k, x = f.mul(x, a)) powers.insert(x);
      generator = generator || powers.size() == f.order() - 1;
    }
    CHECK(generator);
  }
}

TEST_CASE("prime subfield is the fixed field of Frobenius") {
  for (const Field& f : small_fields()) {
    std::size_t fixed = 0;
    for (Scalar a : f.elements()) {
      bool is_fixed = f.frobenius(a) == a;
      fixed += is_fixed;
      CHECK(is_fixed == f.in_prime_field(a));
    }
    CHECK(fixed == f.characteristic());
  }
}

TEST_CASE("square roots") {
  for (const Field& f : small_fields()) {
    std::size_t squares = 0;
    for (Scalar a = 1; a < f.order(); ++a) {
      auto r = f.sqrt(a);
      if (r) {
        ++squares;
        CHECK(f.mul(*r, *r) == a);
        CHECK(*r <= f.neg(*r));
      }
    }
    CHECK(squares == (f.order() - 1) / 2);
  }
}

TEST_CASE("rational and integer embeddings") {
  Field f = Field::prime(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
  CHECK(f.from_rational(1, 2) == 4);
  CHECK(f.from_rational(-3, 2) == f.mul(f.from_int(-3), f.inv(2)));
  CHECK_THROWS_AS(f.from_rational(1, 7), DivisionByZero);
  CHECK_THROWS_AS(f.make(0, 1), MixedFields);
  Field g = Field::quadratic(3);
  CHECK(g.coeffs(g.make(2, 1))[0] == 2);
  CHECK(g.coeffs(g.make(2, 1))[1] == 1);
}

TEST_CASE("invalid fields and mixing are rejected") {
  CHECK_THROWS_AS(Field::prime(2), InvalidField);
  CHECK_THROWS_AS(Field::prime(9), InvalidField);
  CHECK_THROWS_AS(Field::quadratic(3, 2, 0), InvalidField);  // x^2 + 2 = (x-1)(x+1) mod 3
  CHECK_THROWS_AS(Field::prime(3).inv(0), DivisionByZero);
  FieldElem a(Field::prime(3), 1), b(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, MixedFields);
  FieldElem c(Field::prime(5), 2);
  CHECK((c * c.inverse()).value() == 1);
  CHECK(c.pow(4).value() == 1);
}

TEST_CASE("default quadratic moduli are irreducible") {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    Field f = Field::quadratic(p);
    auto [c0, c1] = f.modulus();
    Field base = Field::prime(p);
    for (Scalar x = 0; x < p; ++x) {
      Scalar v = base.add(base.add(base.mul(x, x), base.mul(c1, x)), c0);
      CHECK(v != 0);
    }
  }
}
