#include "momenta/series.hpp"

#include <utility>

namespace momenta {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw InputError("series order mismatch: " + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()));
}

}  // namespace

Series::Series(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 0) throw InputError("negative series order");
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw InputError("series coefficient count does not match order");
}

Series Series::zero(int order) {
  if (order < 0) throw InputError("negative series order");
  return Series(order, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

Series Series::one(int order) {
  Series s = zero(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::lambda(int order) {
  Series s = zero(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::from_coeffs(std::span<const Rational> coeffs, int order) {
  if (coeffs.size() > static_cast<std::size_t>(order) + 1)
    throw InputError("coefficient list longer than series order allows");
  Series s = zero(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) s.coeffs_[k] = coeffs[k];
  return s;
}

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const int n = a.order();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return Series(n, std::move(out));
}

Series Series::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
  return Series(order_, std::move(out));
}

Series exp(const Series& a) {
  if (!a.coeff(0).is_zero())
    throw InputError("series exp requires zero constant term");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  // n*b_n = sum_{k=1..n} k*a_k*b_{n-k}, from b' = a'*b.
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (a.coeff(k).is_zero()) continue;
      acc += Rational(k) * a.coeff(k) * b[static_cast<std::size_t>(m - k)];
    }
    b[static_cast<std::size_t>(m)] = acc / Rational(m);
  }
  return Series(n, std::move(b));
}

Series log(const Series& a) {
  if (a.coeff(0) != Rational(1))
    throw InputError("series log requires unit constant term");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  // m*a_m = m*b_m + sum_{k=1..m-1} k*b_k*a_{m-k}, from a' = a*b' with a_0 = 1.
  for (int m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * a.coeff(m);
    for (int k = 1; k < m; ++k) {
      if (b[static_cast<std::size_t>(k)].is_zero() || a.coeff(m - k).is_zero())
        continue;
      acc -= Rational(k) * b[static_cast<std::size_t>(k)] * a.coeff(m - k);
    }
    b[static_cast<std::size_t>(m)] = acc / Rational(m);
  }
  return Series(n, std::move(b));
}

}  // namespace momenta
