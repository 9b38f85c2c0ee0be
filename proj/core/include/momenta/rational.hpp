#ifndef MOMENTA_RATIONAL_HPP
#define MOMENTA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "momenta/errors.hpp"

namespace momenta {

// Arbitrary-precision rational scalar, always kept canonical: lowest
// terms, positive denominator. Arithmetic is exact; division by zero
// throws. This is the coefficient field for everything symbolic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design
  Rational(long n) : v_(n) {}         // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q", and plain decimal literals such as "-1.25" or
  // "3e-2" (converted exactly).
  static Rational parse(const std::string& text);

  // "p/q", or just "p" when the denominator is one.
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// n! as an exact rational (numerator only, of course).
Rational factorial(unsigned n);

// Binomial coefficient C(n, k), exact.
Rational binomial(unsigned n, unsigned k);

}  // namespace momenta

#endif  // MOMENTA_RATIONAL_HPP
