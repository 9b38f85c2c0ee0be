#ifndef MOMENTA_SERIES_HPP
#define MOMENTA_SERIES_HPP

#include <span>
#include <vector>

#include "momenta/rational.hpp"

namespace momenta {

// Formal power series in one variable, truncated at a fixed order N:
// exactly N+1 rational coefficients, coefficient of lambda^k at index k.
// Every operation is correct modulo lambda^{N+1}.
class Series {
 public:
  Series(int order, std::vector<Rational> coeffs);

  static Series zero(int order);
  static Series one(int order);
  // The identity series lambda itself.
  static Series lambda(int order);
  // Pads (or rejects an over-long) coefficient list to the given order.
  static Series from_coeffs(std::span<const Rational> coeffs, int order);

  int order() const { return order_; }
  const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { a += b; return a; }
  friend Series operator-(Series a, const Series& b) { a -= b; return a; }
  // Cauchy product truncated at the common order.
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  Series scaled(const Rational& c) const;

 private:
  int order_;
  std::vector<Rational> coeffs_;  // order_ + 1 entries
};

// exp(a) mod lambda^{N+1}; requires a(0) == 0. Computed through the
// derivative recurrence (exp a)' = a' * exp a.
Series exp(const Series& a);

// log(a) mod lambda^{N+1}; requires a(0) == 1. Computed through
// (log a)' = a' / a.
Series log(const Series& a);

}  // namespace momenta

#endif  // MOMENTA_SERIES_HPP
