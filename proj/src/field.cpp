#include "resupal/field.hpp"

#include "resupal/errors.hpp"

namespace resupal {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

unsigned mod(long long v, unsigned p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

unsigned inv_mod(unsigned a, unsigned p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod(t, p);
}

bool is_square_mod(unsigned a, unsigned p) {
  if (a % p == 0) return true;
  unsigned long long r = 1, b = a % p;
  unsigned e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1;
}

}  // namespace

Field Field::prime(unsigned p) {
  if (p == 2 || !is_prime(p)) throw InvalidField("characteristic must be an odd prime, got " + std::to_string(p));
  Field f;
  f.p_ = p;
  f.degree_ = 1;
  return f;
}

Field Field::quadratic(unsigned p) {
  if (p == 2 || !is_prime(p)) throw InvalidField("characteristic must be an odd prime, got " + std::to_string(p));
  if (p % 4 == 3) return quadratic(p, 1, 0);
  // x^2 + c1 x + c0 is irreducible iff c1^2 - 4 c0 is a non-square.
  for (unsigned c1 = 0; c1 < p; ++c1)
    for (unsigned c0 = 0; c0 < p; ++c0) {
      unsigned disc = mod(static_cast<long long>(c1) * c1 - 4LL * c0, p);
      if (disc != 0 && !is_square_mod(disc, p)) return quadratic(p, c0, c1);
    }
  throw InvalidField("no irreducible quadratic");  // unreachable
}

Field Field::quadratic(unsigned p, unsigned c0, unsigned c1) {
  if (p == 2 || !is_prime(p)) throw InvalidField("characteristic must be an odd prime, got " + std::to_string(p));
  c0 %= p;
  c1 %= p;
  unsigned disc = mod(static_cast<long long>(c1) * c1 - 4LL * c0, p);
  if (disc == 0 || is_square_mod(disc, p)) throw InvalidField("modulus is reducible");
  Field f;
  f.p_ = p;
  f.degree_ = 2;
  f.c0_ = c0;
  f.c1_ = c1;
  return f;
}

Scalar Field::from_int(long long v) const { return mod(v, p_); }

Scalar Field::from_rational(long long num, long long den) const {
  unsigned d = mod(den, p_);
  if (d == 0) throw DivisionByZero("denominator " + std::to_string(den) + " vanishes mod " + std::to_string(p_));
  return static_cast<Scalar>(static_cast<unsigned long long>(mod(num, p_)) * inv_mod(d, p_) % p_);
}

Scalar Field::make(long long c0, long long c1) const {
  unsigned b = mod(c1, p_);
  if (degree_ == 1 && b != 0) throw MixedFields("quadratic coefficient in a prime field");
  return mod(c0, p_) + p_ * b;
}

Scalar Field::add(Scalar a, Scalar b) const {
  if (degree_ == 1) return (a + b) % p_;
  unsigned a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
  return (a0 + b0) % p_ + p_ * ((a1 + b1) % p_);
}

Scalar Field::neg(Scalar a) const {
  if (degree_ == 1) return a == 0 ? 0 : p_ - a;
  unsigned a0 = a % p_, a1 = a / p_;
  return (a0 ? p_ - a0 : 0) + p_ * (a1 ? p_ - a1 : 0);
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (degree_ == 1) return static_cast<Scalar>(static_cast<unsigned long long>(a) * b % p_);
  unsigned long long a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
  unsigned long long hi = a1 * b1 % p_;
  // x^2 = -c1 x - c0
  long long r0 = static_cast<long long>((a0 * b0) % p_) - static_cast<long long>(hi * c0_ % p_);
  long long r1 = static_cast<long long>((a0 * b1 + a1 * b0) % p_) - static_cast<long long>(hi * c1_ % p_);
  return mod(r0, p_) + p_ * mod(r1, p_);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (degree_ == 1) return inv_mod(a, p_);
  long long a0 = a % p_, a1 = a / p_;
  // (a0 + a1 x)(a0 - a1 c1 - a1 x) = a0^2 - a0 a1 c1 + a1^2 c0
  unsigned norm = mod(a0 * a0 - a0 * a1 % p_ * c1_ + a1 * a1 % p_ * c0_, p_);
  unsigned long long ni = inv_mod(norm, p_);
  unsigned r0 = mod(a0 - a1 * c1_, p_);
  unsigned r1 = mod(-a1, p_);
  return static_cast<Scalar>(r0 * ni % p_ + p_ * (r1 * ni % p_));
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<Scalar> Field::sqrt(Scalar a) const {
  for (Scalar r = 0; r < order(); ++r)
    if (mul(r, r) == a) return r;
  return std::nullopt;
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out(order());
  for (Scalar i = 0; i < order(); ++i) out[i] = i;
  return out;
}

std::string Field::format(Scalar a) const {
  if (degree_ == 1) return std::to_string(a);
  unsigned a0 = a % p_, a1 = a / p_;
  if (a1 == 0) return std::to_string(a0);
  std::string s = a1 == 1 ? "x" : std::to_string(a1) + "x";
  return a0 == 0 ? s : std::to_string(a0) + "+" + s;
}

void FieldElem::require_same(const FieldElem& o) const {
  if (field_ != o.field_) throw MixedFields("operands live in different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(o);
  return {field_, field_.add(value_, o.value_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(o);
  return {field_, field_.sub(value_, o.value_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(o);
  return {field_, field_.mul(value_, o.value_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same(o);
  return {field_, field_.div(value_, o.value_)};
}

bool FieldElem::operator==(const FieldElem& o) const { return field_ == o.field_ && value_ == o.value_; }

std::vector<FieldElem> enumerate_field(const Field& f) {
  std::vector<FieldElem> out;
  out.reserve(f.order());
  for (Scalar s : f.elements()) out.emplace_back(f, s);
  return out;
}

}  // namespace resupal
