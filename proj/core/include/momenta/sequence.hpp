#ifndef MOMENTA_SEQUENCE_HPP
#define MOMENTA_SEQUENCE_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "momenta/rational.hpp"

namespace momenta {

using Complex = std::complex<double>;

namespace detail {

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(double v) { return v == 0.0; }
inline bool scalar_is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }

template <typename T>
T from_rational(const Rational& v);
template <>
inline Rational from_rational<Rational>(const Rational& v) { return v; }
template <>
inline double from_rational<double>(const Rational& v) { return v.to_double(); }
template <>
inline Complex from_rational<Complex>(const Rational& v) { return {v.to_double(), 0.0}; }

inline Rational conj_scalar(const Rational& v) { return v; }
inline double conj_scalar(double v) { return v; }
inline Complex conj_scalar(const Complex& v) { return std::conj(v); }

}  // namespace detail

// An element of l_fin: a finitely supported coefficient sequence.
// Trailing zeros are trimmed on construction, so equality of the stored
// vectors is equality of sequences.
template <typename T>
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Sequence(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  // The unit vector with a one at index n.
  static Sequence delta(std::size_t n) {
    std::vector<T> c(n + 1);
    c[n] = T(1);
    return Sequence(std::move(c));
  }

  // Highest nonzero index plus one; zero for the zero sequence.
  std::size_t length() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the represented polynomial; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Value at any index; zero beyond the stored support.
  T at(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  std::span<const T> coeffs() const { return coeffs_; }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using ExactSequence = Sequence<Rational>;
using RealSequence = Sequence<double>;
using ComplexSequence = Sequence<Complex>;

template <typename T>
Sequence<T> conj(const Sequence<T>& f) {
  std::vector<T> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v = detail::conj_scalar(v);
  return Sequence<T>(std::move(out));
}

inline RealSequence to_real(const ExactSequence& f) {
  std::vector<double> out(f.length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.at(i).to_double();
  return RealSequence(std::move(out));
}

}  // namespace momenta

#endif  // MOMENTA_SEQUENCE_HPP
