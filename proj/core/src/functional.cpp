#include "momenta/functional.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <utility>

namespace momenta {

MomentFunctional::MomentFunctional(std::optional<std::vector<Rational>> exact,
                                   std::vector<double> numeric, FamilyKind kind)
    : exact_(std::move(exact)), numeric_(std::move(numeric)), kind_(kind) {}

MomentFunctional MomentFunctional::exact(std::vector<Rational> values, FamilyKind kind) {
  std::vector<double> numeric(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) numeric[i] = values[i].to_double();
  return MomentFunctional(std::move(values), std::move(numeric), kind);
}

MomentFunctional MomentFunctional::numeric(std::vector<double> values, FamilyKind kind) {
  for (double v : values)
    if (!std::isfinite(v)) throw InputError("functional entries must be finite reals");
  return MomentFunctional(std::nullopt, std::move(values), kind);
}

std::size_t MomentFunctional::size() const { return numeric_.size(); }

std::span<const Rational> MomentFunctional::exact_values() const {
  if (!exact_) throw InputError("functional does not carry exact values");
  return *exact_;
}

double MomentFunctional::value(std::size_t n) const {
  if (n >= numeric_.size()) throw InputError("functional index out of range");
  return numeric_[n];
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::indefinite: return "indefinite";
    case Verdict::borderline: return "borderline";
  }
  throw InputError("unknown verdict");
}

namespace {

void require_tau_length(std::size_t have, int size_n) {
  if (size_n < 0) throw InputError("gram size must be non-negative");
  const std::size_t need = 2 * static_cast<std::size_t>(size_n) + 1;
  if (have < need)
    throw InputError("functional too short: need " + std::to_string(need) +
                     " entries, have " + std::to_string(have));
}

void require_family_order(const PolynomialFamily& family, int size_n) {
  if (2 * size_n > family.order())
    throw InputError("gram kernel needs structure constants up to 2N = " +
                     std::to_string(2 * size_n) + " > family order " +
                     std::to_string(family.order()));
}

}  // namespace

SymmetricMatrix<Rational> gram_exact(std::span<const Rational> tau,
                                     const PolynomialFamily& family, int size_n) {
  require_tau_length(tau.size(), size_n);
  require_family_order(family, size_n);
  SymmetricMatrix<Rational> k_matrix(size_n + 1);
  for (int j = 0; j <= size_n; ++j)
    for (int k = j; k <= size_n; ++k) {
      const auto& c = family.structure_constants(j, k);
      Rational acc;
      for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        acc += tau[n] * c[n];
      }
      k_matrix.at(j, k) = acc;
      k_matrix.at(k, j) = std::move(acc);
    }
  return k_matrix;
}

SymmetricMatrix<double> gram_numeric(std::span<const double> tau,
                                     const PolynomialFamily& family, int size_n) {
  require_tau_length(tau.size(), size_n);
  require_family_order(family, size_n);
  SymmetricMatrix<double> k_matrix(size_n + 1);
  for (int j = 0; j <= size_n; ++j)
    for (int k = j; k <= size_n; ++k) {
      const auto& c = family.structure_constants(j, k);
      double acc = 0.0;
      for (std::size_t n = 0; n < c.size(); ++n)
        acc += tau[n] * c[n].to_double();
      k_matrix.at(j, k) = acc;
      k_matrix.at(k, j) = acc;
    }
  return k_matrix;
}

PositivityResult psd_check_exact(const SymmetricMatrix<Rational>& k_matrix) {
  const int n = k_matrix.n;
  SymmetricMatrix<Rational> s = k_matrix;  // working Schur complement

  // Elimination record for lifting witnesses back to original coordinates:
  // eliminating index p replaced Q by d*(x_p + sum_i l_i x_i)^2 + Q'.
  struct Elimination {
    int index;
    std::vector<std::pair<int, Rational>> column;
  };
  std::vector<Elimination> eliminations;

  auto lift = [&](std::vector<Rational> w) {
    for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
      Rational acc;
      for (const auto& [i, l] : it->column) acc -= l * w[static_cast<std::size_t>(i)];
      w[static_cast<std::size_t>(it->index)] = acc;
    }
    PositivityResult r;
    r.verdict = Verdict::indefinite;
    r.exact = true;
    std::vector<double> approx(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) approx[i] = w[i].to_double();
    r.exact_witness = std::move(w);
    r.witness = std::move(approx);
    return r;
  };

  std::vector<bool> active(static_cast<std::size_t>(n), true);
  for (int k = 0; k < n; ++k) {
    const Rational d = s.at(k, k);
    if (d.sign() < 0) {
      std::vector<Rational> w(static_cast<std::size_t>(n));
      w[static_cast<std::size_t>(k)] = 1;
      return lift(std::move(w));
    }
    if (d.sign() == 0) {
      // A zero diagonal is consistent with positivity only on a zero row.
      for (int j = k + 1; j < n; ++j) {
        if (!active[static_cast<std::size_t>(j)]) continue;
        const Rational& sjk = s.at(k, j);
        if (sjk.is_zero()) continue;
        // Q restricted to {k, j} is 2*s*x_k*x_j + s_jj*x_j^2; pick x_k so
        // that the value is exactly -1.
        std::vector<Rational> w(static_cast<std::size_t>(n));
        w[static_cast<std::size_t>(j)] = 1;
        w[static_cast<std::size_t>(k)] = -(s.at(j, j) + Rational(1)) / (Rational(2) * sjk);
        return lift(std::move(w));
      }
      active[static_cast<std::size_t>(k)] = false;
      continue;
    }
    Elimination elim;
    elim.index = k;
    for (int j = k + 1; j < n; ++j) {
      if (!active[static_cast<std::size_t>(j)]) continue;
      if (s.at(j, k).is_zero()) continue;
      elim.column.emplace_back(j, s.at(j, k) / d);
    }
    for (const auto& [i, li] : elim.column)
      for (const auto& [j, lj] : elim.column)
        if (j >= i) {
          Rational upd = s.at(i, j) - li * lj * d;
          s.at(i, j) = upd;
          if (i != j) s.at(j, i) = std::move(upd);
        }
    active[static_cast<std::size_t>(k)] = false;
    eliminations.push_back(std::move(elim));
  }

  PositivityResult r;
  r.verdict = Verdict::positive;
  r.exact = true;
  return r;
}

PositivityResult psd_check_numeric(const SymmetricMatrix<double>& k_matrix, double tol) {
  const int n = k_matrix.n;
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = k_matrix.at(j, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw ComputeError("symmetric eigensolve failed");
  const auto& ev = solver.eigenvalues();
  const double lambda_min = ev(0);
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));

  PositivityResult r;
  r.exact = false;
  r.lambda_min = lambda_min;
  if (std::abs(lambda_min) < tol * scale) {
    r.verdict = Verdict::borderline;
  } else if (lambda_min >= 0.0) {
    r.verdict = Verdict::positive;
  } else {
    r.verdict = Verdict::indefinite;
    Eigen::VectorXd v = solver.eigenvectors().col(0);
    r.witness = std::vector<double>(v.data(), v.data() + n);
  }
  return r;
}

PositivityResult is_positive(const MomentFunctional& tau, const PolynomialFamily& family,
                             int size_n, double tol) {
  if (tau.is_exact()) return psd_check_exact(gram_exact(tau.exact_values(), family, size_n));
  return psd_check_numeric(gram_numeric(tau.values(), family, size_n), tol);
}

Rational quasiscalar(std::span<const Rational> tau, const PolynomialFamily& family,
                     const ExactSequence& f, const ExactSequence& g) {
  return apply_functional(tau, conv_general(f, conj(g), family));
}

Complex quasiscalar(std::span<const double> tau, const PolynomialFamily& family,
                    const ComplexSequence& f, const ComplexSequence& g) {
  return apply_functional(tau, conv_general(f, conj(g), family));
}

double quasiscalar(std::span<const double> tau, const PolynomialFamily& family,
                   const RealSequence& f, const RealSequence& g) {
  return apply_functional(tau, conv_general(f, conj(g), family));
}

namespace {

// log(|v_n| / n!)^(1/(n+1)) fits computed in log space; returns the fit
// and whether the trailing window increases strictly.
GrowthFit fit_growth(const std::vector<double>& per_index) {
  GrowthFit fit;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < per_index.size(); ++i) {
    if (per_index[i] > best) {
      best = per_index[i];
      fit.argmax = i;
    }
  }
  fit.c = std::exp(best);
  if (fit.argmax == per_index.size() - 1 && per_index.size() >= 2) {
    // Strict increase at working precision: log-scale steps below 1e-12
    // are rounding noise, not a trend.
    constexpr double kLogEps = 1e-12;
    const std::size_t window = std::min<std::size_t>(5, per_index.size());
    bool increasing = true;
    for (std::size_t i = per_index.size() - window + 1; i < per_index.size(); ++i)
      if (!(per_index[i] > per_index[i - 1] + kLogEps)) increasing = false;
    fit.unbounded_trend = increasing;
  }
  return fit;
}

}  // namespace

GrowthFit growth_constant(std::span<const double> values) {
  if (values.size() < 2)
    throw InputError("growth fit needs at least two entries");
  std::vector<double> per_index(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    const double v = std::abs(values[n]);
    const double lg = v == 0.0 ? -std::numeric_limits<double>::infinity()
                               : std::log(v) - std::lgamma(static_cast<double>(n) + 1.0);
    per_index[n] = lg / static_cast<double>(n + 1);
  }
  return fit_growth(per_index);
}

GrowthFit growth_constant(const MomentFunctional& tau) {
  return growth_constant(tau.values());
}

DiagEnergyReport diag_energy_check(const MomentFunctional& tau,
                                   const PolynomialFamily& family, int size_n) {
  require_tau_length(tau.size(), size_n);
  require_family_order(family, size_n);
  DiagEnergyReport report;
  std::vector<double> per_index(static_cast<std::size_t>(size_n) + 1);
  for (int n = 0; n <= size_n; ++n) {
    const auto& c = family.structure_constants(n, n);
    double energy;
    if (tau.is_exact()) {
      Rational acc;
      auto values = tau.exact_values();
      for (std::size_t m = 0; m < c.size(); ++m)
        if (!c[m].is_zero()) acc += values[m] * c[m];
      energy = acc.to_double();
    } else {
      double acc = 0.0;
      auto values = tau.values();
      for (std::size_t m = 0; m < c.size(); ++m) acc += values[m] * c[m].to_double();
      energy = acc;
    }
    report.energies.push_back(energy);
    const double lfact = std::lgamma(static_cast<double>(n) + 1.0);
    report.normalized.push_back(energy == 0.0 ? 0.0
                                              : energy / std::exp(2.0 * lfact));
    const double lg = std::abs(energy) == 0.0
                          ? -std::numeric_limits<double>::infinity()
                          : std::log(std::abs(energy)) - 2.0 * lfact;
    per_index[static_cast<std::size_t>(n)] = lg / static_cast<double>(n + 1);
  }
  GrowthFit fit = fit_growth(per_index);
  report.c = fit.c;
  report.unbounded_trend = fit.unbounded_trend;
  return report;
}

CarlemanReport carleman_report(const MomentFunctional& tau, int shift, int terms) {
  if (shift < 0 || terms < 1) throw InputError("carleman report needs shift >= 0 and terms >= 1");
  const std::size_t top = 2 * static_cast<std::size_t>(shift) + 2 * static_cast<std::size_t>(terms);
  if (tau.size() <= top)
    throw InputError("functional too short for carleman report: need index " +
                     std::to_string(top));
  CarlemanReport report;
  report.shift = shift;
  double acc = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double v = tau.value(2 * static_cast<std::size_t>(shift) + 2 * static_cast<std::size_t>(n));
    if (!(v > 0.0))
      throw InputError("carleman report requires positive diagonal entries");
    acc += std::exp(-std::log(v) / (2.0 * n));
    report.partial_sums.push_back(acc);
  }
  return report;
}

}  // namespace momenta
