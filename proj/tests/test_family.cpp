#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <random>
#include <thread>

#include "doctest.h"
#include "momenta/family.hpp"

using momenta::factorial;
using momenta::FamilyKind;
using momenta::InputError;
using momenta::PolynomialFamily;
using momenta::Rational;
using momenta::Series;
using momenta::ShefferSpec;

TEST_SUITE_BEGIN("family");

namespace {

std::vector<Rational> row_vec(const PolynomialFamily& fam, int n) {
  auto r = fam.row(n);
  return {r.begin(), r.end()};
}

ShefferSpec newton_spec(int order) {
  std::vector<Rational> one_plus{Rational(1), Rational(1)};
  return ShefferSpec(Series::one(order),
                     log(Series::from_coeffs(one_plus, order)));
}

ShefferSpec hermite_spec(int order) {
  std::vector<Rational> half_sq{Rational(0), Rational(0), Rational(-1, 2)};
  return ShefferSpec(exp(Series::from_coeffs(half_sq, order)), Series::lambda(order));
}

}  // namespace

TEST_CASE("monomial family is the identity table") {
  auto fam = PolynomialFamily::monomial(2);
  CHECK(row_vec(fam, 0) == std::vector<Rational>{1});
  CHECK(row_vec(fam, 1) == std::vector<Rational>{0, 1});
  CHECK(row_vec(fam, 2) == std::vector<Rational>{0, 0, 1});
  // (x^j x^k, x^n) = delta_{j+k,n}
  auto wide = PolynomialFamily::monomial(4);
  auto c = wide.structure_constants(1, 1);
  CHECK(c == std::vector<Rational>{0, 0, 1});
  auto c2 = wide.structure_constants(1, 2);
  CHECK(c2.back() == Rational(1));
  CHECK(c2[2].is_zero());
}

TEST_CASE("newton rows are falling factorials") {
  auto fam = PolynomialFamily::newton(6);
  CHECK(row_vec(fam, 0) == std::vector<Rational>{1});
  CHECK(row_vec(fam, 2) == std::vector<Rational>{0, -1, 1});     // x(x-1)
  CHECK(row_vec(fam, 3) == std::vector<Rational>{0, 2, -3, 1});  // x(x-1)(x-2)
}

TEST_CASE("sheffer regeneration of the built-in families") {
  auto mono = PolynomialFamily::sheffer(
      ShefferSpec(Series::one(20), Series::lambda(20)));
  auto mono_direct = PolynomialFamily::monomial(20);
  for (int n = 0; n <= 20; ++n) CHECK(row_vec(mono, n) == row_vec(mono_direct, n));

  auto newt = PolynomialFamily::sheffer(newton_spec(20));
  auto newt_direct = PolynomialFamily::newton(20);
  for (int n = 0; n <= 20; ++n) CHECK(row_vec(newt, n) == row_vec(newt_direct, n));
}

TEST_CASE("hermite generating function gives x^2 - 1 at degree two") {
  auto fam = PolynomialFamily::sheffer(hermite_spec(8));
  CHECK(row_vec(fam, 2) == std::vector<Rational>{-1, 0, 1});
  CHECK(fam.p1_is_x());
}

TEST_CASE("sheffer spec invariants are enforced") {
  CHECK_THROWS_AS(ShefferSpec(Series::lambda(4), Series::lambda(4)), InputError);
  CHECK_THROWS_AS(ShefferSpec(Series::one(4), Series::one(4)), InputError);
  CHECK_THROWS_AS(ShefferSpec(Series::one(4), Series::zero(4)), InputError);
  CHECK_THROWS_AS(PolynomialFamily::sheffer(newton_spec(4), 10), InputError);
}

TEST_CASE("order cap and bad arguments") {
  CHECK_THROWS_AS(PolynomialFamily::monomial(-1), InputError);
  CHECK_THROWS_AS(PolynomialFamily::monomial(257), InputError);
  CHECK(PolynomialFamily::monomial().order() == PolynomialFamily::kDefaultOrder);
  auto fam = PolynomialFamily::newton(4);
  CHECK_THROWS_AS(fam.structure_constants(3, 2), InputError);
  CHECK_THROWS_AS(fam.row(5), InputError);
}

TEST_CASE("newton structure constants match the closed product formula") {
  auto fam = PolynomialFamily::newton(16);
  // (x)_1 (x)_1 = (x)_1 + (x)_2
  auto c11 = fam.structure_constants(1, 1);
  CHECK(c11 == std::vector<Rational>{0, 1, 1});
  // instantiated at j=k=n=2: 2!2!/(0!0!2!) = 2
  CHECK(fam.structure_constants(2, 2)[2] == Rational(2));
  for (int j = 0; j <= 8; ++j)
    for (int k = 0; k <= 8; ++k) {
      auto c = fam.structure_constants(j, k);
      for (int n = 0; n <= j + k; ++n) {
        Rational expected(0);
        if (n >= j && n >= k) {
          expected = factorial(static_cast<unsigned>(j)) *
                     factorial(static_cast<unsigned>(k)) /
                     (factorial(static_cast<unsigned>(n - j)) *
                      factorial(static_cast<unsigned>(n - k)) *
                      factorial(static_cast<unsigned>(j + k - n)));
        }
        CHECK(c[static_cast<std::size_t>(n)] == expected);
      }
    }
}

TEST_CASE("structure constants expand products exactly for every family") {
  auto mono = PolynomialFamily::monomial(12);
  auto newt = PolynomialFamily::newton(12);
  auto herm = PolynomialFamily::sheffer(hermite_spec(12));
  for (const auto* fam : {&mono, &newt, &herm}) {
    for (int j = 0; j <= 12; ++j)
      for (int k = j; j + k <= 12; ++k) {
        auto c = fam->structure_constants(j, k);
        CHECK(c == fam->structure_constants(k, j));
        std::vector<Rational> lhs = fam->to_monomial(c);
        std::vector<Rational> rhs(static_cast<std::size_t>(j + k) + 1);
        auto pj = fam->row(j);
        auto pk = fam->row(k);
        for (std::size_t a = 0; a < pj.size(); ++a)
          for (std::size_t b = 0; b < pk.size(); ++b) rhs[a + b] += pj[a] * pk[b];
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("families with unit P_0 have delta structure constants at j=0") {
  auto herm = PolynomialFamily::sheffer(hermite_spec(10));
  for (int k = 0; k <= 10; ++k) {
    auto c = herm.structure_constants(0, k);
    for (int n = 0; n <= k; ++n)
      CHECK(c[static_cast<std::size_t>(n)] == (n == k ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("basis changes are mutually inverse") {
  auto fam = PolynomialFamily::sheffer(hermite_spec(10));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> v(11);
    for (auto& x : v)
      x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1);
    CHECK(fam.from_monomial(fam.to_monomial(v)) == v);
    CHECK(fam.to_monomial(fam.from_monomial(v)) == v);
  }
}

TEST_CASE("evaluation") {
  auto newt = PolynomialFamily::newton(6);
  CHECK(newt.evaluate(3, 5.0) == doctest::Approx(60.0));  // 5*4*3
  CHECK(newt.evaluate_exact(3, Rational(5)) == Rational(60));
  CHECK(newt.evaluate(0, 123.0) == doctest::Approx(1.0));
  auto mono = PolynomialFamily::monomial(6);
  CHECK(mono.evaluate(4, 2.0) == doctest::Approx(16.0));
}

TEST_CASE("cauchy-type growth bound for the newton family") {
  // |P_n(x)| <= 2 n!/r^n e^{eps|x|} with eps = 1 and r picked on a
  // sampled circle where |log(1+lambda)| stays below eps.
  const double eps = 1.0;
  double r = 0.0;
  for (double cand = 0.95; cand > 0.0; cand -= 0.05) {
    double worst = 0.0;
    for (int s = 0; s < 512; ++s) {
      const double theta = 2.0 * 3.14159265358979323846 * s / 512;
      std::complex<double> lam(cand * std::cos(theta), cand * std::sin(theta));
      worst = std::max(worst, std::abs(std::log(std::complex<double>(1.0, 0.0) + lam)));
    }
    if (worst <= eps) {
      r = cand;
      break;
    }
  }
  REQUIRE(r > 0.0);
  auto fam = PolynomialFamily::newton(12);
  for (int n = 0; n <= 12; ++n) {
    const double nfact = std::tgamma(static_cast<double>(n) + 1.0);
    for (double x = -10.0; x <= 10.0; x += 1.0) {
      const double bound = 2.0 * nfact / std::pow(r, n) * std::exp(eps * std::abs(x));
      CHECK(std::abs(fam.evaluate(n, x)) <= bound);
    }
  }
}

TEST_CASE("concurrent structure constant reads agree with eager values") {
  auto fam = PolynomialFamily::newton(12);
  auto eager = PolynomialFamily::newton(12);
  momenta::StructureTable table(eager, 12);  // forces every entry up front
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&fam, &table, &failures, t] {
      for (int j = t % 3; j <= 12; ++j)
        for (int k = 0; j + k <= 12; ++k) {
          const auto& got = fam.structure_constants(j, k);
          auto want = table.at(j, k);
          if (!std::equal(got.begin(), got.end(), want.begin(), want.end()))
            ++failures;
        }
    });
  for (auto& w : workers) w.join();
  CHECK(failures.load() == 0);
}

TEST_SUITE_END();
