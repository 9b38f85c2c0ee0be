#ifndef MOMENTA_CONVOLUTION_HPP
#define MOMENTA_CONVOLUTION_HPP

#include <algorithm>
#include <span>
#include <type_traits>
#include <vector>

#include "momenta/family.hpp"
#include "momenta/sequence.hpp"

namespace momenta {

// The weight (i+j)!(j+k)!/(i!j!k!) of the closed-form Newton product,
// as binom(i+j, j) * binom(j+k, j) * j!. Exact.
Rational newton_weight(int i, int j, int k);

// Cauchy product: (f*g)_n = sum_{i+j=n} f_i g_j. The monomial-family
// product in closed form.
template <typename T>
Sequence<T> conv_cauchy(const Sequence<T>& f, const Sequence<T>& g) {
  if (f.is_zero() || g.is_zero()) return Sequence<T>{};
  std::vector<T> out(f.length() + g.length() - 1, T(0));
  for (std::size_t i = 0; i < f.length(); ++i) {
    const T fi = f.at(i);
    if (detail::scalar_is_zero(fi)) continue;
    for (std::size_t j = 0; j < g.length(); ++j) out[i + j] += fi * g.at(j);
  }
  return Sequence<T>(std::move(out));
}

// Product over a general family through its structure constants:
// (f *_P g)_n = sum_{j,k} f_j g_k (P_j P_k, P_n)_P.
template <typename T>
Sequence<T> conv_general(const Sequence<T>& f, const Sequence<T>& g,
                         const PolynomialFamily& family) {
  if (f.is_zero() || g.is_zero()) return Sequence<T>{};
  if (f.degree() + g.degree() > family.order())
    throw InputError("convolution exceeds family truncation: deg sum " +
                     std::to_string(f.degree() + g.degree()) + " > order " +
                     std::to_string(family.order()));
  std::vector<T> out(f.length() + g.length() - 1, T(0));
  [[maybe_unused]] T fg{};       // scratch values reuse their allocations
  [[maybe_unused]] T scratch{};
  for (std::size_t j = 0; j < f.length(); ++j) {
    const T fj = f.at(j);
    if (detail::scalar_is_zero(fj)) continue;
    for (std::size_t k = 0; k < g.length(); ++k) {
      const T gk = g.at(k);
      if (detail::scalar_is_zero(gk)) continue;
      fg = fj;
      fg *= gk;
      const auto& c = family.structure_constants(static_cast<int>(j), static_cast<int>(k));
      for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        if constexpr (std::is_same_v<T, Rational>) {
          scratch = fg;
          scratch *= c[n];
          out[n] += scratch;
        } else {
          out[n] += fg * detail::from_rational<T>(c[n]);
        }
      }
    }
  }
  return Sequence<T>(std::move(out));
}

// Closed-form product for the falling-factorial family:
// (f ⋆ g)_n = sum_{i+j+k=n} (i+j)!(j+k)!/(i!j!k!) f_{i+j} g_{j+k}.
// Agrees exactly with conv_general over the Newton family.
template <typename T>
Sequence<T> conv_newton(const Sequence<T>& f, const Sequence<T>& g) {
  if (f.is_zero() || g.is_zero()) return Sequence<T>{};
  const int df = f.degree();
  const int dg = g.degree();
  std::vector<T> out(static_cast<std::size_t>(df + dg) + 1, T(0));
  [[maybe_unused]] T fg{};
  [[maybe_unused]] T scratch{};
  Rational w(1);
  for (int a = 0; a <= df; ++a) {
    const T fa = f.at(static_cast<std::size_t>(a));
    if (detail::scalar_is_zero(fa)) continue;
    for (int b = 0; b <= dg; ++b) {
      const T gb = g.at(static_cast<std::size_t>(b));
      if (detail::scalar_is_zero(gb)) continue;
      fg = fa;
      fg *= gb;
      // a = i+j, b = j+k: a term lands at n = a + b - j. The weight
      // satisfies w_0 = 1, w_j = w_{j-1} * (a-j+1)(b-j+1)/j.
      w = 1;
      for (int j = 0; j <= std::min(a, b); ++j) {
        if (j > 0) w *= Rational(static_cast<long>(a - j + 1) * (b - j + 1), j);
        if constexpr (std::is_same_v<T, Rational>) {
          scratch = fg;
          scratch *= w;
          out[static_cast<std::size_t>(a + b - j)] += scratch;
        } else {
          out[static_cast<std::size_t>(a + b - j)] += fg * detail::from_rational<T>(w);
        }
      }
    }
  }
  return Sequence<T>(std::move(out));
}

// Linear pairing tau(f) = sum_n tau_n f_n.
template <typename S, typename T>
T apply_functional(std::span<const S> tau, const Sequence<T>& f) {
  if (f.length() > tau.size())
    throw InputError("functional shorter than sequence: " +
                     std::to_string(tau.size()) + " < " + std::to_string(f.length()));
  T acc{};
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (detail::scalar_is_zero(f.at(n))) continue;
    if constexpr (std::is_same_v<S, Rational>)
      acc += detail::from_rational<T>(tau[n]) * f.at(n);
    else
      acc += T(tau[n]) * f.at(n);
  }
  return acc;
}

}  // namespace momenta

#endif  // MOMENTA_CONVOLUTION_HPP
