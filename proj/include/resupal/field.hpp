#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace resupal {

// An element of F_q encoded as c0 + p*c1 with respect to the basis {1, x}.
// Prime-field elements have c1 = 0, so F_p embeds into F_{p^2} unchanged.
using Scalar = std::uint32_t;

// F_p or F_{p^2} for an odd prime p. The quadratic case works modulo the
// monic polynomial x^2 + c1*x + c0.
class Field {
 public:
  Field() = default;

  static Field prime(unsigned p);
  static Field quadratic(unsigned p);
  static Field quadratic(unsigned p, unsigned c0, unsigned c1);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned order() const { return degree_ == 1 ? p_ : p_ * p_; }
  std::array<unsigned, 2> modulus() const { return {c0_, c1_}; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long v) const;
  Scalar from_rational(long long num, long long den) const;
  Scalar make(long long c0, long long c1) const;
  std::array<unsigned, 2> coeffs(Scalar a) const { return {a % p_, a / p_}; }

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar frobenius(Scalar a) const { return pow(a, p_); }
  // Square root with the smallest encoding, if one exists.
  std::optional<Scalar> sqrt(Scalar a) const;

  bool contains(Scalar a) const { return a < order(); }
  bool in_prime_field(Scalar a) const { return a < p_; }
  std::vector<Scalar> elements() const;
  std::string format(Scalar a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && degree_ == o.degree_ && c0_ == o.c0_ && c1_ == o.c1_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  unsigned p_ = 3;
  unsigned degree_ = 1;
  unsigned c0_ = 0;
  unsigned c1_ = 0;
};

bool is_prime(unsigned n);

// Value type pairing a scalar with its field; arithmetic rejects mixing.
class FieldElem {
 public:
  FieldElem(const Field& f, Scalar v) : field_(f), value_(v) {}

  const Field& field() const { return field_; }
  Scalar value() const { return value_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {field_, field_.neg(value_)}; }
  FieldElem inverse() const { return {field_, field_.inv(value_)}; }
  FieldElem pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
  FieldElem frobenius() const { return {field_, field_.frobenius(value_)}; }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  void require_same(const FieldElem& o) const;
  Field field_;
  Scalar value_;
};

std::vector<FieldElem> enumerate_field(const Field& f);

}  // namespace resupal
