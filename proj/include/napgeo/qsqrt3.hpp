#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace napgeo {

/*
 * Exact arithmetic in the real quadratic field Q(sqrt 3).
 *
 * Every construction used by the Napoleon kernel (rotations by multiples of
 * 60 degrees, equilateral apexes, centroids, line/circle meets, reflections,
 * homothety by rational ratios) stays inside this field, so all geometric
 * claims reduce to component-wise equality of canonical representations.
 */

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& v) : num_(v), den_(1) {}

  // Throws GeometryError("division by zero") when den == 0.
  static Rat normalize(mpz_class num, mpz_class den);
  static Rat normalize(long num, long den) {
    return normalize(mpz_class(num), mpz_class(den));
  }

  // Accepts "n" or "n/d" with an optional leading '-'. Throws
  // std::invalid_argument on malformed text, GeometryError on d == 0.
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat x, const Rat& y) { return x += y; }
  friend Rat operator-(Rat x, const Rat& y) { return x -= y; }
  friend Rat operator*(Rat x, const Rat& y) { return x *= y; }
  friend Rat operator/(Rat x, const Rat& y) { return x /= y; }

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);

  double to_double() const;
  // "num/den", or "num" when den == 1.
  std::string str() const;

 private:
  Rat(mpz_class num, mpz_class den, bool /*already_normal*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  mpz_class num_;
  mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// a + b*sqrt(3) with rational a, b. Representation is unique because sqrt 3
// is irrational, so equality is component-wise.
class F3 {
 public:
  F3() = default;
  F3(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  F3(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  F3(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static F3 sqrt3() { return F3(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Field norm a^2 - 3 b^2; zero only for the zero element.
  Rat norm() const { return a_ * a_ - Rat(3) * b_ * b_; }
  F3 conjugate() const { return F3(a_, -b_); }

  // Exact sign of the real value a + b*sqrt(3): -1, 0 or +1.
  int sign() const;

  F3 operator-() const { return F3(-a_, -b_); }
  F3& operator+=(const F3& o);
  F3& operator-=(const F3& o);
  F3& operator*=(const F3& o);
  F3& operator/=(const F3& o);  // GeometryError("division by zero") on o == 0

  friend F3 operator+(F3 x, const F3& y) { return x += y; }
  friend F3 operator-(F3 x, const F3& y) { return x -= y; }
  friend F3 operator*(F3 x, const F3& y) { return x *= y; }
  friend F3 operator/(F3 x, const F3& y) { return x /= y; }

  friend bool operator==(const F3&, const F3&) = default;
  friend std::strong_ordering operator<=>(const F3& x, const F3& y);

  double to_double() const;

  // Human/DSL form: "a" when b == 0, otherwise "a + b r3" (b keeps its sign,
  // e.g. "3 + -25/12 r3"). Parsable by the scenario language.
  std::string str() const;

 private:
  Rat a_;
  Rat b_;
};

std::ostream& operator<<(std::ostream& os, const F3& x);

// Free-function spellings used by the geometry layer and tests.
inline F3 field_mul(const F3& x, const F3& y) { return x * y; }
inline F3 field_div(const F3& x, const F3& y) { return x / y; }
inline int field_sign(const F3& x) { return x.sign(); }

}  // namespace napgeo
