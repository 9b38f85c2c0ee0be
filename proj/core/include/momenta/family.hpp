#ifndef MOMENTA_FAMILY_HPP
#define MOMENTA_FAMILY_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "momenta/series.hpp"

namespace momenta {

enum class FamilyKind { monomial, newton, sheffer };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

// Generating data for a family with exponential generating function
// gamma(lambda) * exp(alpha(lambda) * x). Requires gamma(0) = 1,
// alpha(0) = 0 and alpha'(0) != 0; both series share one truncation order.
struct ShefferSpec {
  Series gamma;
  Series alpha;

  ShefferSpec(Series g, Series a);
  int order() const { return gamma.order(); }
};

// A family P_0..P_N of real polynomials with deg P_n = n, held as a
// lower-triangular table of exact monomial coefficients together with
// the inverse basis change. Immutable after construction; the structure
// constant cache is internally synchronized, so concurrent reads are safe.
class PolynomialFamily {
 public:
  static constexpr int kDefaultOrder = 32;
  static constexpr int kMaxOrder = 256;

  static PolynomialFamily monomial(int order = kDefaultOrder);
  static PolynomialFamily newton(int order = kDefaultOrder);
  // Truncates the generated family at `order` (defaults to spec.order()).
  static PolynomialFamily sheffer(const ShefferSpec& spec, int order = -1);

  int order() const { return order_; }
  FamilyKind kind() const { return kind_; }
  const std::optional<ShefferSpec>& sheffer_spec() const { return spec_; }

  // P_n in monomial coordinates: n+1 entries, leading one nonzero.
  std::span<const Rational> row(int n) const;

  // Coefficients of P_j * P_k in the P basis: entries 0..j+k.
  // Computed by exact triangular back-substitution and memoized.
  const std::vector<Rational>& structure_constants(int j, int k) const;

  // Basis changes between P coordinates and monomial coordinates; both
  // exact, mutually inverse.
  std::vector<Rational> to_monomial(std::span<const Rational> p_coeffs) const;
  std::vector<Rational> from_monomial(std::span<const Rational> mono_coeffs) const;

  double evaluate(int n, double x) const;
  Rational evaluate_exact(int n, const Rational& x) const;

  // P_1(x) = slope*x + shift. Built-ins have slope 1, shift 0.
  const Rational& p1_slope() const { return p1_slope_; }
  const Rational& p1_shift() const { return p1_shift_; }
  bool p1_is_x() const { return p1_slope_ == Rational(1) && p1_shift_.is_zero(); }

 private:
  PolynomialFamily(FamilyKind kind, int order,
                   std::vector<std::vector<Rational>> rows,
                   std::optional<ShefferSpec> spec);

  void build_inverse_rows();

  FamilyKind kind_;
  int order_;
  std::optional<ShefferSpec> spec_;
  std::vector<std::vector<Rational>> rows_;      // rows_[n][m] = [x^m] P_n
  std::vector<std::vector<Rational>> inv_rows_;  // x^n = sum_m inv_rows_[n][m] P_m
  Rational p1_slope_;
  Rational p1_shift_;

  // Lock-free memo: one atomic slot per (j, k) with j <= k. Losing
  // writers discard their candidate, so every reader sees one value and
  // observable behavior equals eager computation.
  struct Cache {
    explicit Cache(std::size_t n) : slots(n) {
      for (auto& s : slots) s.store(nullptr, std::memory_order_relaxed);
    }
    ~Cache() {
      for (auto& s : slots) delete s.load(std::memory_order_relaxed);
    }
    std::vector<std::atomic<const std::vector<Rational>*>> slots;
  };
  std::unique_ptr<Cache> cache_;
};

// Eagerly materialized structure constants for all (j, k) with
// j + k <= order. Symmetric by construction.
class StructureTable {
 public:
  StructureTable(const PolynomialFamily& family, int order);

  int order() const { return order_; }
  std::span<const Rational> at(int j, int k) const;

 private:
  int order_;
  std::vector<std::vector<Rational>> entries_;  // index j*(order+1)+k, j <= k
};

}  // namespace momenta

#endif  // MOMENTA_FAMILY_HPP
