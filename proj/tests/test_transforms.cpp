#include <cmath>
#include <vector>

#include "doctest.h"
#include "momenta/transforms.hpp"

using momenta::Complex;
using momenta::DiscreteMeasure;
using momenta::InputError;
using momenta::MomentFunctional;
using momenta::Rational;
using momenta::Series;
using momenta::Verdict;

TEST_SUITE_BEGIN("transforms");

TEST_CASE("s-transform of factorial coefficients sums the geometric series") {
  std::vector<double> xi(61);
  double f = 1.0;
  for (std::size_t n = 0; n < xi.size(); ++n) {
    xi[n] = f;
    f *= static_cast<double>(n + 1);
  }
  auto sample = momenta::s_transform(xi, Complex(0.5, 0.0), 60);
  CHECK(std::abs(sample.value - Complex(2.0, 0.0)) <= 1e-12);
  CHECK(sample.terms_used >= 50);
  CHECK(sample.tail_bound <= 1e-15);
}

TEST_CASE("s-transform trivia") {
  std::vector<double> delta0{1.0, 0.0, 0.0};
  CHECK(momenta::s_transform(delta0, Complex(0.8, 0.3)).value == Complex(1.0, 0.0));
  std::vector<double> ones(40, 1.0);
  auto e = momenta::s_transform(ones, Complex(1.0, 0.0), 39);
  CHECK(std::abs(e.value - Complex(std::exp(1.0), 0.0)) <= 1e-12);
}

TEST_CASE("s-transform flags evaluation beyond the fitted radius") {
  // xi_n = n! 2^{n+1} has C = 2, radius 1/(2C) = 1/4
  std::vector<double> xi(32);
  double f = 1.0;
  for (std::size_t n = 0; n < xi.size(); ++n) {
    xi[n] = f * 2.0 * std::pow(2.0, static_cast<double>(n));
    f *= static_cast<double>(n + 1);
  }
  CHECK_FALSE(momenta::s_transform(xi, Complex(0.2, 0.0), 30).radius_warning);
  CHECK(momenta::s_transform(xi, Complex(0.3, 0.0), 30).radius_warning);
}

TEST_CASE("last-term tail bound obeys the geometric envelope") {
  // xi_n = n! 2^{n+1}: terms are 2 (2 lambda)^n, so the last term is below
  // 2C (2C |lambda|)^{N} with C = 2.
  const double c = 2.0;
  std::vector<double> xi(40);
  double f = 1.0;
  for (std::size_t n = 0; n < xi.size(); ++n) {
    xi[n] = f * 2.0 * std::pow(2.0, static_cast<double>(n));
    f *= static_cast<double>(n + 1);
  }
  for (double lam : {0.05, 0.1, 0.2}) {
    const int terms = 30;
    auto sample = momenta::s_transform(xi, Complex(lam, 0.0), terms);
    CHECK(sample.tail_bound <=
          2 * c * std::pow(2 * c * lam, sample.terms_used - 1) + 1e-18);
  }
  // at lambda = 0.2 all 31 terms are summed, so the stated envelope with
  // exponent N_terms applies directly
  auto full = momenta::s_transform(xi, Complex(0.2, 0.0), 30);
  CHECK(full.terms_used == 31);
  CHECK(full.tail_bound <= 2 * c * std::pow(2 * c * 0.2, 30));
}

TEST_CASE("laplace transform of the symmetric two-atom measure is cosh") {
  DiscreteMeasure mu({-1.0, 1.0}, {0.5, 0.5});
  for (double lam : {-1.0, -0.3, 0.0, 0.4, 1.2})
    CHECK(momenta::laplace(mu, Complex(lam, 0.0)).real() ==
          doctest::Approx(std::cosh(lam)).epsilon(1e-14));
  DiscreteMeasure point({0.0}, {1.0});
  CHECK(momenta::laplace(point, Complex(0.7, 0.2)) == Complex(1.0, 0.0));
}

TEST_CASE("laplace transform of truncated poisson matches its closed form") {
  auto mu = momenta::truncated_poisson(0.5, 1e-30);
  for (double lam = -1.0; lam <= 1.0; lam += 0.25) {
    const double want = std::exp(0.5 * (std::exp(lam) - 1.0));
    CHECK(std::abs(momenta::laplace(mu, Complex(lam, 0.0)).real() - want) <= 1e-10);
  }
}

TEST_CASE("bogoliubov measure route on poisson hits e^{0.15}") {
  auto mu = momenta::truncated_poisson(0.5);
  auto sample = momenta::bogoliubov(mu, Complex(0.3, 0.0));
  CHECK(std::abs(sample.value.real() - std::exp(0.15)) <= 1e-9);
  CHECK(sample.value.imag() == doctest::Approx(0.0));

  DiscreteMeasure point({0.0}, {1.0});
  for (double lam : {-0.4, 0.0, 0.9})
    CHECK(momenta::bogoliubov(point, Complex(lam, 0.0)).value == Complex(1.0, 0.0));
}

TEST_CASE("bogoliubov series and measure routes agree") {
  // factorial moments of Poisson(0.5): tau_n = 0.5^n
  std::vector<double> tau(40);
  double p = 1.0;
  for (auto& t : tau) {
    t = p;
    p *= 0.5;
  }
  auto functional = MomentFunctional::numeric(tau, momenta::FamilyKind::newton);
  auto mu = momenta::truncated_poisson(0.5);
  for (double lam = -0.5; lam <= 0.5; lam += 0.125) {
    auto series_route = momenta::bogoliubov(functional, Complex(lam, 0.0), 39);
    auto measure_route = momenta::bogoliubov(mu, Complex(lam, 0.0));
    CHECK(std::abs(series_route.value - measure_route.value) <= 1e-8);
  }

  // two-atom measure (delta_0 + delta_2)/2: factorial moments (1, 1, 1, 0, ...)
  DiscreteMeasure two_atoms({0.0, 2.0}, {0.5, 0.5});
  auto two_tau = MomentFunctional::numeric({1.0, 1.0, 1.0}, momenta::FamilyKind::newton);
  for (double lam = -0.5; lam <= 0.5; lam += 0.125) {
    auto series_route = momenta::bogoliubov(two_tau, Complex(lam, 0.0), 10);
    auto measure_route = momenta::bogoliubov(two_atoms, Complex(lam, 0.0));
    CHECK(std::abs(series_route.value - measure_route.value) <= 1e-8);
    const double closed = 0.5 * (1.0 + (1.0 + lam) * (1.0 + lam));
    CHECK(measure_route.value.real() == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("bogoliubov branch handling on the negative axis") {
  // integer atoms power through (1+lambda) <= 0
  DiscreteMeasure integer_atoms({0.0, 1.0, 2.0}, {0.2, 0.5, 0.3});
  auto ok = momenta::bogoliubov(integer_atoms, Complex(-2.5, 0.0));
  const double base = -1.5;
  CHECK(ok.value.real() ==
        doctest::Approx(0.2 + 0.5 * base + 0.3 * base * base).epsilon(1e-14));

  DiscreteMeasure fractional({0.5, 1.0}, {0.5, 0.5});
  CHECK_THROWS_AS(momenta::bogoliubov(fractional, Complex(-2.5, 0.0)),
                  momenta::ComputeError);
  // off the axis the principal branch is fine
  CHECK_NOTHROW(momenta::bogoliubov(fractional, Complex(-2.5, 0.1)));
  // series route refuses non-newton annotations
  auto monomial_tau = MomentFunctional::numeric({1.0, 0.5}, momenta::FamilyKind::monomial);
  CHECK_THROWS_AS(momenta::bogoliubov(monomial_tau, Complex(0.1, 0.0)), InputError);
}

TEST_CASE("exponential convexity of cosh and failure of the identity") {
  std::vector<double> grid{-0.5, 0.0, 0.5};
  auto cosh_result = momenta::exp_convexity_check(
      grid, [](double s) { return std::cosh(s); });
  CHECK(cosh_result.verdict == Verdict::positive);

  std::vector<double> pair{-1.0, 1.0};
  auto linear = momenta::exp_convexity_check(pair, [](double s) { return s; });
  REQUIRE(linear.verdict == Verdict::indefinite);
  REQUIRE(linear.witness.has_value());
  // witness quadratic form is negative: matrix is diag(-2, 2)
  const auto& w = *linear.witness;
  double q = 0.0;
  std::vector<std::vector<double>> m{{-2.0, 0.0}, {0.0, 2.0}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) q += w[i] * m[i][j] * w[j];
  CHECK(q < 0.0);

  std::vector<double> single{0.0};
  CHECK(momenta::exp_convexity_check(single, [](double) { return 0.25; }).verdict ==
        Verdict::positive);

  std::vector<double> samples{1.0, 2.0};  // wrong count for a 2-point grid
  CHECK_THROWS_AS(momenta::exp_convexity_check(pair, samples), InputError);
}

TEST_CASE("taylor functionals from exact series") {
  auto from_exp = momenta::taylor_functional(exp(Series::lambda(10)),
                                             momenta::FamilyKind::monomial);
  REQUIRE(from_exp.is_exact());
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(from_exp.exact_values()[n] == Rational(1));

  // cosh series: 1, 0, 1/2!, 0, ... gives tau = (1, 0, 1, 0, ...)
  std::vector<Rational> ch(11);
  for (std::size_t n = 0; n <= 10; n += 2)
    ch[n] = Rational(1) / momenta::factorial(static_cast<unsigned>(n));
  auto from_cosh = momenta::taylor_functional(Series(10, ch), momenta::FamilyKind::monomial);
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(from_cosh.exact_values()[n] == (n % 2 == 0 ? Rational(1) : Rational(0)));
}

TEST_CASE("taylor functional of exp(lambda/2) against quadrature") {
  // B(lambda) = e^{lambda/2} generates tau_n = 0.5^n, the factorial
  // moments of Poisson(1/2)
  std::vector<Rational> half{Rational(0), Rational(1, 2)};
  auto tau = momenta::taylor_functional(exp(Series::from_coeffs(half, 12)),
                                        momenta::FamilyKind::newton);
  auto mu = momenta::truncated_poisson(0.5, 1e-30);
  auto newt = momenta::PolynomialFamily::newton(14);
  auto quad = momenta::forward_moments(mu, newt, 12);
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(tau.exact_values()[n].to_double() ==
          doctest::Approx(quad.value(n)).epsilon(1e-10));
}

TEST_CASE("bernstein consistency square for truncated poisson") {
  auto mu = momenta::truncated_poisson(0.5);
  std::vector<double> grid{-0.4, -0.2, 0.0, 0.2, 0.4};
  auto k = [&](double s) { return momenta::laplace(mu, Complex(s, 0.0)).real(); };
  CHECK(momenta::exp_convexity_check(grid, k).verdict == Verdict::positive);

  // derivatives of the laplace transform at zero are the power moments
  std::vector<double> derivatives(9);
  for (int n = 0; n <= 8; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      acc += mu.weights()[i] * std::pow(mu.atoms()[i], n);
    derivatives[static_cast<std::size_t>(n)] = acc;
  }
  auto tau = momenta::taylor_functional(std::span<const double>(derivatives),
                                        momenta::FamilyKind::monomial);
  auto mono = momenta::PolynomialFamily::monomial(10);
  auto quad = momenta::forward_moments(mu, mono, 8);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(std::abs(tau.value(n) - quad.value(n)) <=
          1e-8 * std::max(1.0, std::abs(quad.value(n))));
}

TEST_SUITE_END();
