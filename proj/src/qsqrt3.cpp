#include "napgeo/qsqrt3.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "napgeo/errors.hpp"

namespace napgeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat Rat::normalize(mpz_class num, mpz_class den) {
  if (den == 0) throw GeometryError("division by zero");
  Rat r(std::move(num), std::move(den), true);
  r.reduce();
  return r;
}

void Rat::reduce() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (negative) num = -num;
  return normalize(std::move(num), std::move(den));
}

Rat Rat::operator-() const { return Rat(-num_, den_, true); }

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw GeometryError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
  const mpz_class lhs = x.num_ * y.den_;
  const mpz_class rhs = y.num_ * x.den_;
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rat::to_double() const { return mpq_class(num_, den_).get_d(); }

std::string Rat::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

int F3::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: the component with the larger square wins. The squares
  // can never tie because sqrt 3 is irrational.
  const mpz_class a2 = a_.num() * a_.num() * b_.den() * b_.den();
  const mpz_class b2 = 3 * b_.num() * b_.num() * a_.den() * a_.den();
  return cmp(a2, b2) > 0 ? sa : sb;
}

F3& F3::operator+=(const F3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

F3& F3::operator-=(const F3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

F3& F3::operator*=(const F3& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rat a = a_ * o.a_ + Rat(3) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

F3& F3::operator/=(const F3& o) {
  if (o.is_zero()) throw GeometryError("division by zero");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rat n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const F3& x, const F3& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double F3::to_double() const {
  static const double kSqrt3 = 1.7320508075688772935;
  return a_.to_double() + b_.to_double() * kSqrt3;
}

std::string F3::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + " r3";
}

std::ostream& operator<<(std::ostream& os, const F3& x) { return os << x.str(); }

}  // namespace napgeo
