#ifndef MOMENTA_TRANSFORMS_HPP
#define MOMENTA_TRANSFORMS_HPP

#include <functional>
#include <span>

#include "momenta/functional.hpp"
#include "momenta/spectral.hpp"

namespace momenta {

// One evaluation of a series-defined transform. tail_bound is the
// magnitude of the last term actually added.
struct TransformSample {
  Complex lambda;
  Complex value;
  int terms_used = 0;
  double tail_bound = 0.0;
  // Set when |lambda| is at or beyond the empirical radius 1/(2C)
  // implied by the growth fit of the coefficient sequence.
  bool radius_warning = false;
};

inline constexpr int kDefaultTransformTerms = 64;

// Partial sum of sum_n lambda^n/n! xi_n. Stops at n_terms or when the
// running term drops below 1e-16 of the partial sum.
TransformSample s_transform(std::span<const double> xi, Complex lambda,
                            int n_terms = kDefaultTransformTerms);
TransformSample s_transform(const MomentFunctional& xi, Complex lambda,
                            int n_terms = kDefaultTransformTerms);

// Laplace transform of a finite discrete measure: sum_i w_i e^{x_i lambda};
// entire in lambda.
Complex laplace(const DiscreteMeasure& mu, Complex lambda);

// Bogoliubov functional. Measure route: sum_i w_i (1+lambda)^{x_i} with
// the principal branch; errors when 1+lambda lies on the closed negative
// real axis and some atom is not an integer. Series route: the S-transform
// of Newton-annotated moments. Both routes agree where both converge.
TransformSample bogoliubov(const DiscreteMeasure& mu, Complex lambda);
TransformSample bogoliubov(const MomentFunctional& tau, Complex lambda,
                           int n_terms = kDefaultTransformTerms);

struct ExpConvexityResult {
  Verdict verdict = Verdict::positive;
  std::optional<std::vector<double>> witness;
  double lambda_min = 0.0;
};

// Bernstein-style check: is [k(x_i+x_j)] positive semidefinite on the
// grid? Positive means PSD within the floating tolerance; a strictly
// negative eigenvalue yields indefinite with the offending vector.
// `sums` holds k(x_i+x_j) for i <= j in lexicographic order,
// grid.size()*(grid.size()+1)/2 values.
ExpConvexityResult exp_convexity_check(std::span<const double> grid,
                                       std::span<const double> sums,
                                       double tol = 1e-10);
ExpConvexityResult exp_convexity_check(std::span<const double> grid,
                                       const std::function<double(double)>& k,
                                       double tol = 1e-10);

// tau_n = n! * [lambda^n] of an exact series (k or B given near zero), or
// tau_n = the n-th entry of an explicit derivative list.
MomentFunctional taylor_functional(const Series& series, FamilyKind annotate);
MomentFunctional taylor_functional(std::span<const double> derivatives, FamilyKind annotate);

}  // namespace momenta

#endif  // MOMENTA_TRANSFORMS_HPP
