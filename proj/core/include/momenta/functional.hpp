#ifndef MOMENTA_FUNCTIONAL_HPP
#define MOMENTA_FUNCTIONAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "momenta/convolution.hpp"
#include "momenta/family.hpp"
#include "momenta/sequence.hpp"

namespace momenta {

// A truncated moment functional tau_0..tau_M, real-valued, interpreted
// against an annotated family kind. Carries either exact rational or
// floating entries; exactness is preserved wherever the algebra allows.
class MomentFunctional {
 public:
  static MomentFunctional exact(std::vector<Rational> values, FamilyKind kind);
  static MomentFunctional numeric(std::vector<double> values, FamilyKind kind);

  bool is_exact() const { return exact_.has_value(); }
  std::size_t size() const;
  FamilyKind family_kind() const { return kind_; }

  // Throws unless exact.
  std::span<const Rational> exact_values() const;
  // Always available; exact entries are rounded.
  std::span<const double> values() const { return numeric_; }
  double value(std::size_t n) const;

 private:
  MomentFunctional(std::optional<std::vector<Rational>> exact,
                   std::vector<double> numeric, FamilyKind kind);

  std::optional<std::vector<Rational>> exact_;
  std::vector<double> numeric_;
  FamilyKind kind_;
};

// Dense symmetric matrix with explicit storage of every entry.
template <typename T>
struct SymmetricMatrix {
  int n = 0;
  std::vector<T> a;  // row-major, n*n entries

  explicit SymmetricMatrix(int size)
      : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), T(0)) {}
  T& at(int j, int k) { return a[static_cast<std::size_t>(j) * n + k]; }
  const T& at(int j, int k) const { return a[static_cast<std::size_t>(j) * n + k]; }
};

// Gram kernel K_{jk} = sum_n tau_n (P_j P_k, P_n)_P for j,k <= N.
// Over the monomial family this is the Hankel matrix tau_{j+k}.
SymmetricMatrix<Rational> gram_exact(std::span<const Rational> tau,
                                     const PolynomialFamily& family, int size_n);
SymmetricMatrix<double> gram_numeric(std::span<const double> tau,
                                     const PolynomialFamily& family, int size_n);

enum class Verdict { positive, indefinite, borderline };

std::string verdict_name(Verdict v);

struct PositivityResult {
  Verdict verdict = Verdict::positive;
  bool exact = false;
  // Populated for indefinite verdicts: a real vector f with
  // tau(f *_P conj(f)) < 0 (exactly so on the exact path).
  std::optional<std::vector<Rational>> exact_witness;
  std::optional<std::vector<double>> witness;
  std::optional<double> lambda_min;
};

// Positivity of tau as a functional on (l_fin, *_P), decided on the
// Gram kernel of size N+1. Exact input gives a certain verdict through
// a pivoted rational LDL^T; floating input uses a symmetric eigensolve
// where eigenvalues within tol*max|lambda| of zero read as degenerate
// ("borderline").
PositivityResult is_positive(const MomentFunctional& tau, const PolynomialFamily& family,
                             int size_n, double tol = 1e-10);

// Exact PSD decision with witness for a rational symmetric matrix.
PositivityResult psd_check_exact(const SymmetricMatrix<Rational>& k_matrix);
// Floating PSD decision on an eigensolve, with the borderline band.
PositivityResult psd_check_numeric(const SymmetricMatrix<double>& k_matrix, double tol);

// Quasiscalar product (f, g)_{H_tau} = tau(f *_P conj(g)).
Rational quasiscalar(std::span<const Rational> tau, const PolynomialFamily& family,
                     const ExactSequence& f, const ExactSequence& g);
Complex quasiscalar(std::span<const double> tau, const PolynomialFamily& family,
                    const ComplexSequence& f, const ComplexSequence& g);
double quasiscalar(std::span<const double> tau, const PolynomialFamily& family,
                   const RealSequence& f, const RealSequence& g);

// Fit of the smallest C with |v_n| <= n! C^{n+1} over the stored range.
struct GrowthFit {
  double c = 0.0;
  std::size_t argmax = 0;
  // Set when the maximizing index is the last one and the per-index fit
  // is strictly increasing over its last five values: the data trends as
  // if no finite C works.
  bool unbounded_trend = false;
};

GrowthFit growth_constant(std::span<const double> values);
GrowthFit growth_constant(const MomentFunctional& tau);

// Diagonal energies tau(delta_n *_P delta_n) for n <= N, their
// (n!)^2-normalized values, and the smallest C with
// energy_n <= (n!)^2 C^{n+1}, flagged like growth_constant.
struct DiagEnergyReport {
  std::vector<double> energies;
  std::vector<double> normalized;  // energies[n] / (n!)^2
  double c = 0.0;
  bool unbounded_trend = false;
};

DiagEnergyReport diag_energy_check(const MomentFunctional& tau,
                                   const PolynomialFamily& family, int size_n);

// Partial sums of sum_{n=1..terms} tau_{2k+2n}^{-1/(2n)}. A diagnostic
// trajectory only; divergence is not decidable from finite data.
struct CarlemanReport {
  int shift = 0;  // the k in tau_{2k+2n}
  std::vector<double> partial_sums;
};

CarlemanReport carleman_report(const MomentFunctional& tau, int shift, int terms);

}  // namespace momenta

#endif  // MOMENTA_FUNCTIONAL_HPP
