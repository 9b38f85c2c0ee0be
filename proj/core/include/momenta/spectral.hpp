#ifndef MOMENTA_SPECTRAL_HPP
#define MOMENTA_SPECTRAL_HPP

#include <span>
#include <vector>

#include "momenta/functional.hpp"

namespace momenta {

// Matrix of multiplication by x in the P basis, i.e. of f -> delta_1 *_P f
// on span{delta_0..delta_N}. Exact entries; column n below row N+1 equals
// the structure constants (P_1 P_n, P_m)_P, affinely corrected when
// P_1 != x (the `renormalized` flag records that correction).
struct OperatorMatrix {
  int size = 0;  // (size)x(size), size = N+1
  std::vector<Rational> entries;
  bool renormalized = false;

  const Rational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * size + c];
  }
  Rational& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * size + c];
  }
};

// Requires family.order() >= N+1 so that the last column is exact.
OperatorMatrix jacobi_matrix(const PolynomialFamily& family, int size_n);

// A finite nonnegative discrete measure: strictly increasing atoms with
// positive weights. Empty is allowed and stands for the zero measure.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  std::span<const double> atoms() const { return atoms_; }
  std::span<const double> weights() const { return weights_; }
  double mass() const;

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
};

// Poisson(intensity) truncated at the first index whose tail mass drops
// below tail_eps; atoms 0..K with weights e^-intensity intensity^j / j!.
DiscreteMeasure truncated_poisson(double intensity, double tail_eps = 1e-15);

// Power moments m_k = integral of x^k from generalized moments
// tau_n = integral of P_n, by the exact triangular relation
// tau_n = sum_k [P_n]_k m_k.
std::vector<Rational> to_power_moments(std::span<const Rational> tau,
                                       const PolynomialFamily& family);
std::vector<double> to_power_moments(std::span<const double> tau,
                                     const PolynomialFamily& family);

// Reconstructs the discrete spectral measure at truncation N from
// tau_0..tau_2N: power moments, Hankel LDL^T with pivot-based rank
// detection, three-term recurrence, then a symmetric tridiagonal
// eigensolve. Returns min(rank, N) atoms; the result reproduces power
// moments m_0..m_{2r-1}. Throws ComputeError on indefinite input.
DiscreteMeasure reconstruct_measure(const MomentFunctional& tau,
                                    const PolynomialFamily& family, int size_n);

// Generalized moments tau_n = sum_i w_i P_n(x_i) for n <= M.
MomentFunctional forward_moments(const DiscreteMeasure& mu,
                                 const PolynomialFamily& family, int top_m);
// Exact variant for rational atom/weight data.
MomentFunctional forward_moments(std::span<const Rational> atoms,
                                 std::span<const Rational> weights,
                                 const PolynomialFamily& family, int top_m);

// Evaluates (I_P f)(x) = sum_n f_n P_n(x).
double evaluate_sequence(const PolynomialFamily& family, const RealSequence& f, double x);

}  // namespace momenta

#endif  // MOMENTA_SPECTRAL_HPP
