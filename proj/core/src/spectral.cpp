#include "momenta/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace momenta {

OperatorMatrix jacobi_matrix(const PolynomialFamily& family, int size_n) {
  if (size_n < 0) throw InputError("jacobi matrix size must be non-negative");
  if (family.order() < size_n + 1)
    throw InputError("jacobi matrix at size N+1 = " + std::to_string(size_n + 1) +
                     " needs family order >= " + std::to_string(size_n + 1));
  OperatorMatrix op;
  op.size = size_n + 1;
  op.entries.assign(static_cast<std::size_t>(op.size) * op.size, Rational(0));
  op.renormalized = !family.p1_is_x();
  const Rational& slope = family.p1_slope();
  const Rational& shift = family.p1_shift();
  for (int n = 0; n <= size_n; ++n) {
    // x P_n = (P_1 - shift)/slope * P_n.
    const auto& c = family.structure_constants(1, n);
    for (int m = 0; m <= std::min(size_n, n + 1); ++m) {
      Rational v = c[static_cast<std::size_t>(m)] / slope;
      if (m == n) v -= shift / slope;
      op.at(m, n) = std::move(v);
    }
  }
  return op;
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.size() != weights_.size())
    throw InputError("measure atom and weight counts differ");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i]) || !std::isfinite(weights_[i]))
      throw InputError("measure entries must be finite");
    if (!(weights_[i] > 0.0)) throw InputError("measure weights must be positive");
    if (i > 0 && !(atoms_[i] > atoms_[i - 1]))
      throw InputError("measure atoms must be strictly increasing");
  }
}

double DiscreteMeasure::mass() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

DiscreteMeasure truncated_poisson(double intensity, double tail_eps) {
  if (!(intensity > 0.0)) throw InputError("poisson intensity must be positive");
  if (!(tail_eps > 0.0)) throw InputError("poisson tail bound must be positive");
  std::vector<double> atoms;
  std::vector<double> weights;
  double w = std::exp(-intensity);
  for (int j = 0; j < 4096; ++j) {
    atoms.push_back(static_cast<double>(j));
    weights.push_back(w);
    w *= intensity / static_cast<double>(j + 1);
    // tail(j) <= w_{j+1} / (1 - intensity/(j+2)): a geometric envelope that
    // stays meaningful far below double-precision mass resolution.
    if (static_cast<double>(j) > intensity) {
      const double ratio = intensity / static_cast<double>(j + 2);
      if (ratio < 1.0 && w / (1.0 - ratio) < tail_eps) break;
    }
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

std::vector<Rational> to_power_moments(std::span<const Rational> tau,
                                       const PolynomialFamily& family) {
  if (tau.size() > static_cast<std::size_t>(family.order()) + 1)
    throw InputError("functional longer than family truncation");
  std::vector<Rational> m(tau.size());
  for (std::size_t n = 0; n < tau.size(); ++n) {
    auto row = family.row(static_cast<int>(n));
    Rational acc = tau[n];
    for (std::size_t k = 0; k < n; ++k) acc -= row[k] * m[k];
    m[n] = acc / row[n];
  }
  return m;
}

std::vector<double> to_power_moments(std::span<const double> tau,
                                     const PolynomialFamily& family) {
  if (tau.size() > static_cast<std::size_t>(family.order()) + 1)
    throw InputError("functional longer than family truncation");
  std::vector<double> m(tau.size());
  for (std::size_t n = 0; n < tau.size(); ++n) {
    auto row = family.row(static_cast<int>(n));
    double acc = tau[n];
    for (std::size_t k = 0; k < n; ++k) acc -= row[k].to_double() * m[k];
    m[n] = acc / row[n].to_double();
  }
  return m;
}

namespace {

constexpr double kPivotRelTol = 1e-12;

struct Tridiagonal {
  std::vector<double> diag;     // alpha_0..alpha_{r-1}
  std::vector<double> subdiag;  // sqrt(beta_1)..sqrt(beta_{r-1})
  double mass = 0.0;            // m_0
};

// Shared second half: recurrence coefficients from the unit-lower LDL^T
// rows. alpha_k = L[k+1][k] - L[k][k-1], beta_k = D_k/D_{k-1}. A full-rank
// Hankel built from moments through 2N still only pins an N-point rule,
// so the atom count is min(rank, N).
template <typename S>
Tridiagonal recurrence_from_ldl(const std::vector<std::vector<S>>& lower,
                                const std::vector<S>& pivots, int rank, int size_n,
                                double mass) {
  const int atoms = std::min(rank, size_n);
  Tridiagonal tri;
  tri.mass = mass;
  if (atoms <= 0) return tri;
  tri.diag.resize(static_cast<std::size_t>(atoms));
  tri.subdiag.resize(static_cast<std::size_t>(atoms) - 1);
  auto to_dbl = [](const S& v) {
    if constexpr (std::is_same_v<S, Rational>) return v.to_double();
    else return v;
  };
  for (int k = 0; k < atoms; ++k) {
    double a = to_dbl(lower[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(k)]);
    if (k > 0)
      a -= to_dbl(lower[static_cast<std::size_t>(k)][static_cast<std::size_t>(k) - 1]);
    tri.diag[static_cast<std::size_t>(k)] = a;
    if (k + 1 < atoms)
      tri.subdiag[static_cast<std::size_t>(k)] =
          std::sqrt(to_dbl(pivots[static_cast<std::size_t>(k) + 1]) /
                    to_dbl(pivots[static_cast<std::size_t>(k)]));
  }
  return tri;
}

// Left-looking LDL^T of the Hankel matrix H_{jk} = m_{j+k} without
// pivoting (the rank profile of a PSD Hankel matrix is a prefix).
// Row j is fully formed before its pivot is tested, which is exactly
// what the recurrence extraction needs at a rank collapse.
template <typename S, typename PivotPolicy>
Tridiagonal hankel_recurrence(const std::vector<S>& moments, int size_n,
                              PivotPolicy accept_pivot, double mass) {
  const int dim = size_n + 1;
  std::vector<std::vector<S>> lower(static_cast<std::size_t>(dim));
  std::vector<S> pivots;
  int rank = dim;
  for (int j = 0; j < dim && rank == dim; ++j) {
    auto& row = lower[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(j) + 1, S(0));
    for (int k = 0; k < j; ++k) {
      S acc = moments[static_cast<std::size_t>(j + k)];
      for (int s = 0; s < k; ++s)
        acc -= row[static_cast<std::size_t>(s)] *
               lower[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] *
               pivots[static_cast<std::size_t>(s)];
      row[static_cast<std::size_t>(k)] = acc / pivots[static_cast<std::size_t>(k)];
    }
    row[static_cast<std::size_t>(j)] = S(1);
    S d = moments[static_cast<std::size_t>(2 * j)];
    for (int s = 0; s < j; ++s)
      d -= row[static_cast<std::size_t>(s)] * row[static_cast<std::size_t>(s)] *
           pivots[static_cast<std::size_t>(s)];
    if (accept_pivot(d, pivots))
      pivots.push_back(std::move(d));
    else
      rank = j;
  }
  return recurrence_from_ldl(lower, pivots, rank, size_n, mass);
}

DiscreteMeasure measure_from_tridiagonal(const Tridiagonal& tri) {
  const int r = static_cast<int>(tri.diag.size());
  if (r == 0) return DiscreteMeasure{};
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(tri.diag.data(), r);
  Eigen::VectorXd sub =
      r > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(tri.subdiag.data(), r - 1))
            : Eigen::VectorXd(0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw ComputeError("tridiagonal eigensolve failed");
  std::vector<double> atoms(static_cast<std::size_t>(r));
  std::vector<double> weights(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    atoms[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    weights[static_cast<std::size_t>(i)] = tri.mass * v0 * v0;
  }
  // Jacobi matrices with positive subdiagonal have simple eigenvalues,
  // reported in ascending order; the constructor re-checks.
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

}  // namespace

DiscreteMeasure reconstruct_measure(const MomentFunctional& tau,
                                    const PolynomialFamily& family, int size_n) {
  if (size_n < 0) throw InputError("reconstruction size must be non-negative");
  const std::size_t need = 2 * static_cast<std::size_t>(size_n) + 1;
  if (tau.size() < need)
    throw InputError("reconstruction needs " + std::to_string(need) +
                     " moments, have " + std::to_string(tau.size()));
  if (2 * size_n > family.order())
    throw InputError("reconstruction at N = " + std::to_string(size_n) +
                     " needs family order >= " + std::to_string(2 * size_n));

  Tridiagonal tri;
  if (tau.is_exact()) {
    auto m = to_power_moments(tau.exact_values().subspan(0, need), family);
    tri = hankel_recurrence<Rational>(
        m, size_n,
        [](const Rational& d, const std::vector<Rational>&) {
          if (d.sign() < 0)
            throw ComputeError("indefinite functional: negative Hankel pivot");
          return d.sign() > 0;
        },
        m[0].to_double());
  } else {
    auto values = tau.values();
    std::vector<double> head(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(need));
    auto m = to_power_moments(std::span<const double>(head), family);
    tri = hankel_recurrence<double>(
        m, size_n,
        [](double d, const std::vector<double>& pivots) {
          double largest = 0.0;
          for (double p : pivots) largest = std::max(largest, p);
          const double threshold = kPivotRelTol * largest;
          if (d < -threshold && (largest > 0.0 || d < 0.0))
            throw ComputeError("indefinite functional: negative Hankel pivot");
          return d > threshold && d > 0.0;
        },
        m[0]);
  }
  return measure_from_tridiagonal(tri);
}

MomentFunctional forward_moments(const DiscreteMeasure& mu,
                                 const PolynomialFamily& family, int top_m) {
  if (top_m < 0 || top_m > family.order())
    throw InputError("forward moments exceed family truncation");
  std::vector<double> tau(static_cast<std::size_t>(top_m) + 1, 0.0);
  for (int n = 0; n <= top_m; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      acc += mu.weights()[i] * family.evaluate(n, mu.atoms()[i]);
    tau[static_cast<std::size_t>(n)] = acc;
  }
  return MomentFunctional::numeric(std::move(tau), family.kind());
}

MomentFunctional forward_moments(std::span<const Rational> atoms,
                                 std::span<const Rational> weights,
                                 const PolynomialFamily& family, int top_m) {
  if (atoms.size() != weights.size())
    throw InputError("measure atom and weight counts differ");
  if (top_m < 0 || top_m > family.order())
    throw InputError("forward moments exceed family truncation");
  std::vector<Rational> tau(static_cast<std::size_t>(top_m) + 1);
  for (int n = 0; n <= top_m; ++n) {
    Rational acc;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      acc += weights[i] * family.evaluate_exact(n, atoms[i]);
    tau[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return MomentFunctional::exact(std::move(tau), family.kind());
}

double evaluate_sequence(const PolynomialFamily& family, const RealSequence& f, double x) {
  double acc = 0.0;
  for (std::size_t n = 0; n < f.length(); ++n)
    if (f.at(n) != 0.0) acc += f.at(n) * family.evaluate(static_cast<int>(n), x);
  return acc;
}

}  // namespace momenta
