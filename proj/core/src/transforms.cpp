#include "momenta/transforms.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace momenta {

namespace {

constexpr double kTermFloor = 1e-16;

TransformSample sum_series(std::span<const double> xi, Complex lambda, int n_terms,
                           bool warn) {
  if (n_terms < 1) throw InputError("transform needs at least one term");
  TransformSample sample;
  sample.lambda = lambda;
  sample.radius_warning = warn;
  Complex acc(0.0, 0.0);
  Complex power(1.0, 0.0);  // lambda^n / n!
  double last = 0.0;
  int used = 0;
  for (std::size_t n = 0; n < xi.size() && n <= static_cast<std::size_t>(n_terms); ++n) {
    if (n > 0) power *= lambda / static_cast<double>(n);
    const Complex term = power * xi[n];
    acc += term;
    last = std::abs(term);
    ++used;
    if (last < kTermFloor * std::abs(acc)) break;
  }
  sample.value = acc;
  sample.terms_used = used;
  sample.tail_bound = last;
  return sample;
}

bool beyond_empirical_radius(std::span<const double> xi, Complex lambda) {
  if (xi.size() < 2) return false;
  const GrowthFit fit = growth_constant(xi);
  if (!(fit.c > 0.0) || !std::isfinite(fit.c)) return false;
  return std::abs(lambda) >= 1.0 / (2.0 * fit.c);
}

}  // namespace

TransformSample s_transform(std::span<const double> xi, Complex lambda, int n_terms) {
  return sum_series(xi, lambda, n_terms, beyond_empirical_radius(xi, lambda));
}

TransformSample s_transform(const MomentFunctional& xi, Complex lambda, int n_terms) {
  return s_transform(xi.values(), lambda, n_terms);
}

Complex laplace(const DiscreteMeasure& mu, Complex lambda) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    acc += mu.weights()[i] * std::exp(lambda * mu.atoms()[i]);
  return acc;
}

TransformSample bogoliubov(const DiscreteMeasure& mu, Complex lambda) {
  const Complex base = Complex(1.0, 0.0) + lambda;
  TransformSample sample;
  sample.lambda = lambda;
  sample.terms_used = static_cast<int>(mu.size());
  sample.tail_bound = 0.0;

  const bool on_cut = base.imag() == 0.0 && base.real() <= 0.0;
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double x = mu.atoms()[i];
    const double rounded = std::round(x);
    const bool integral = std::abs(x - rounded) <= 1e-9 * std::max(1.0, std::abs(x));
    Complex term;
    if (integral) {
      const long e = static_cast<long>(rounded);
      if (base == Complex(0.0, 0.0)) {
        if (e < 0)
          throw ComputeError("bogoliubov: negative integer atom at lambda = -1");
        term = e == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      } else {
        term = std::pow(base, static_cast<int>(e));
      }
    } else if (on_cut) {
      throw ComputeError(
          "bogoliubov: (1+lambda)^x is branch-ambiguous on the negative real "
          "axis for non-integer atoms");
    } else {
      term = std::exp(Complex(x, 0.0) * std::log(base));
    }
    acc += mu.weights()[i] * term;
  }
  sample.value = acc;
  return sample;
}

TransformSample bogoliubov(const MomentFunctional& tau, Complex lambda, int n_terms) {
  if (tau.family_kind() != FamilyKind::newton)
    throw InputError("bogoliubov series route expects Newton-annotated moments");
  return s_transform(tau.values(), lambda, n_terms);
}

ExpConvexityResult exp_convexity_check(std::span<const double> grid,
                                       std::span<const double> sums, double tol) {
  const std::size_t m = grid.size();
  if (m == 0) throw InputError("exponential convexity needs a nonempty grid");
  if (sums.size() != m * (m + 1) / 2)
    throw InputError("missing samples: need " + std::to_string(m * (m + 1) / 2) +
                     " pairwise-sum values, have " + std::to_string(sums.size()));
  Eigen::MatrixXd k_matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      if (!std::isfinite(sums[idx])) throw InputError("missing samples: non-finite value");
      k_matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sums[idx];
      k_matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = sums[idx];
      ++idx;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k_matrix);
  if (solver.info() != Eigen::Success)
    throw ComputeError("symmetric eigensolve failed");
  const auto& ev = solver.eigenvalues();
  const double lambda_min = ev(0);
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(static_cast<Eigen::Index>(m) - 1)));

  ExpConvexityResult result;
  result.lambda_min = lambda_min;
  if (lambda_min >= -tol * scale) {
    result.verdict = Verdict::positive;
  } else {
    result.verdict = Verdict::indefinite;
    Eigen::VectorXd v = solver.eigenvectors().col(0);
    result.witness = std::vector<double>(v.data(), v.data() + static_cast<Eigen::Index>(m));
  }
  return result;
}

ExpConvexityResult exp_convexity_check(std::span<const double> grid,
                                       const std::function<double(double)>& k, double tol) {
  std::vector<double> sums;
  sums.reserve(grid.size() * (grid.size() + 1) / 2);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i; j < grid.size(); ++j) sums.push_back(k(grid[i] + grid[j]));
  return exp_convexity_check(grid, sums, tol);
}

MomentFunctional taylor_functional(const Series& series, FamilyKind annotate) {
  std::vector<Rational> tau(static_cast<std::size_t>(series.order()) + 1);
  Rational nfact(1);
  for (int n = 0; n <= series.order(); ++n) {
    if (n > 0) nfact *= Rational(n);
    tau[static_cast<std::size_t>(n)] = nfact * series.coeff(n);
  }
  return MomentFunctional::exact(std::move(tau), annotate);
}

MomentFunctional taylor_functional(std::span<const double> derivatives, FamilyKind annotate) {
  if (derivatives.empty()) throw InputError("empty derivative list");
  return MomentFunctional::numeric(std::vector<double>(derivatives.begin(), derivatives.end()),
                                   annotate);
}

}  // namespace momenta
