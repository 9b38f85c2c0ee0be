#include "momenta/family.hpp"

#include <algorithm>
#include <utility>

namespace momenta {

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::monomial: return "monomial";
    case FamilyKind::newton: return "newton";
    case FamilyKind::sheffer: return "sheffer";
  }
  throw InputError("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "monomial") return FamilyKind::monomial;
  if (name == "newton") return FamilyKind::newton;
  if (name == "sheffer") return FamilyKind::sheffer;
  throw InputError("unknown family kind: " + name);
}

ShefferSpec::ShefferSpec(Series g, Series a)
    : gamma(std::move(g)), alpha(std::move(a)) {
  if (gamma.order() != alpha.order())
    throw InputError("sheffer spec: gamma and alpha must share one order");
  if (gamma.coeff(0) != Rational(1))
    throw InputError("sheffer spec requires gamma(0) = 1");
  if (!alpha.coeff(0).is_zero())
    throw InputError("sheffer spec requires alpha(0) = 0");
  if (alpha.order() < 1 || alpha.coeff(1).is_zero())
    throw InputError("sheffer spec requires alpha'(0) != 0");
}

namespace {

void check_order(int order) {
  if (order < 0) throw InputError("family order must be non-negative");
  if (order > PolynomialFamily::kMaxOrder)
    throw InputError("family order exceeds the hard cap of " +
                     std::to_string(PolynomialFamily::kMaxOrder));
}

}  // namespace

PolynomialFamily::PolynomialFamily(FamilyKind kind, int order,
                                   std::vector<std::vector<Rational>> rows,
                                   std::optional<ShefferSpec> spec)
    : kind_(kind),
      order_(order),
      spec_(std::move(spec)),
      rows_(std::move(rows)),
      cache_(std::make_unique<Cache>((static_cast<std::size_t>(order) + 1) *
                                     (static_cast<std::size_t>(order) + 1))) {
  for (int n = 0; n <= order_; ++n) {
    const auto& r = rows_[static_cast<std::size_t>(n)];
    if (r.size() != static_cast<std::size_t>(n) + 1 || r.back().is_zero())
      throw InputError("family row " + std::to_string(n) +
                       " does not define a degree-" + std::to_string(n) +
                       " polynomial");
  }
  build_inverse_rows();
  p1_slope_ = order_ >= 1 ? rows_[1][1] : Rational(1);
  p1_shift_ = order_ >= 1 ? rows_[1][0] : Rational(0);
}

void PolynomialFamily::build_inverse_rows() {
  inv_rows_.resize(static_cast<std::size_t>(order_) + 1);
  for (int n = 0; n <= order_; ++n) {
    // Solve x^n = sum_m b_m P_m by back-substitution on the residual.
    std::vector<Rational> residual(static_cast<std::size_t>(n) + 1);
    residual[static_cast<std::size_t>(n)] = 1;
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (int m = n; m >= 0; --m) {
      const auto& pm = rows_[static_cast<std::size_t>(m)];
      Rational c = residual[static_cast<std::size_t>(m)] / pm[static_cast<std::size_t>(m)];
      if (!c.is_zero())
        for (int i = 0; i <= m; ++i)
          residual[static_cast<std::size_t>(i)] -= c * pm[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(m)] = c;
    }
    inv_rows_[static_cast<std::size_t>(n)] = std::move(b);
  }
}

PolynomialFamily PolynomialFamily::monomial(int order) {
  check_order(order);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));
    rows[static_cast<std::size_t>(n)].back() = 1;
  }
  return PolynomialFamily(FamilyKind::monomial, order, std::move(rows), std::nullopt);
}

PolynomialFamily PolynomialFamily::newton(int order) {
  check_order(order);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(order) + 1);
  rows[0] = {Rational(1)};
  for (int n = 1; n <= order; ++n) {
    // (x)_n = (x)_{n-1} * (x - (n-1))
    const auto& prev = rows[static_cast<std::size_t>(n - 1)];
    std::vector<Rational> cur(static_cast<std::size_t>(n) + 1);
    Rational shift(-(n - 1));
    for (std::size_t m = 0; m < prev.size(); ++m) {
      cur[m + 1] += prev[m];
      cur[m] += prev[m] * shift;
    }
    rows[static_cast<std::size_t>(n)] = std::move(cur);
  }
  return PolynomialFamily(FamilyKind::newton, order, std::move(rows), std::nullopt);
}

PolynomialFamily PolynomialFamily::sheffer(const ShefferSpec& spec, int order) {
  if (order < 0) order = spec.order();
  check_order(order);
  if (spec.order() < order)
    throw InputError("sheffer spec order is below the requested family order");
  // Row n collects n! * [lambda^n] gamma * alpha^k / k! as the x^k coefficient.
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));

  Series gamma = Series::from_coeffs(spec.gamma.coeffs(), order);
  Series alpha = Series::from_coeffs(spec.alpha.coeffs(), order);
  Series g = gamma;  // gamma * alpha^k / k!, built incrementally
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      g = g * alpha;
      g = g.scaled(Rational(1, k));
    }
    Rational nfact(1);
    for (int n = 0; n <= order; ++n) {
      if (n > 0) nfact *= Rational(n);
      if (n < k) continue;
      const Rational& c = g.coeff(n);
      if (!c.is_zero())
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = nfact * c;
    }
  }
  return PolynomialFamily(FamilyKind::sheffer, order, std::move(rows), spec);
}

std::span<const Rational> PolynomialFamily::row(int n) const {
  if (n < 0 || n > order_)
    throw InputError("family row index out of range");
  return rows_[static_cast<std::size_t>(n)];
}

std::vector<Rational> PolynomialFamily::to_monomial(std::span<const Rational> p_coeffs) const {
  if (p_coeffs.size() > static_cast<std::size_t>(order_) + 1)
    throw InputError("coefficient vector exceeds family order");
  std::vector<Rational> out(p_coeffs.size());
  for (std::size_t n = 0; n < p_coeffs.size(); ++n) {
    if (p_coeffs[n].is_zero()) continue;
    const auto& r = rows_[n];
    for (std::size_t m = 0; m < r.size(); ++m) out[m] += p_coeffs[n] * r[m];
  }
  return out;
}

std::vector<Rational> PolynomialFamily::from_monomial(std::span<const Rational> mono_coeffs) const {
  if (mono_coeffs.size() > static_cast<std::size_t>(order_) + 1)
    throw InputError("coefficient vector exceeds family order");
  std::vector<Rational> out(mono_coeffs.size());
  for (std::size_t n = 0; n < mono_coeffs.size(); ++n) {
    if (mono_coeffs[n].is_zero()) continue;
    const auto& b = inv_rows_[n];
    for (std::size_t m = 0; m < b.size(); ++m) out[m] += mono_coeffs[n] * b[m];
  }
  return out;
}

const std::vector<Rational>& PolynomialFamily::structure_constants(int j, int k) const {
  if (j < 0 || k < 0) throw InputError("negative structure constant index");
  if (j + k > order_)
    throw InputError("structure constants exceed family truncation: j+k = " +
                     std::to_string(j + k) + " > order " + std::to_string(order_));
  if (j > k) std::swap(j, k);
  auto& slot = cache_->slots[static_cast<std::size_t>(j) * (static_cast<std::size_t>(order_) + 1) +
                             static_cast<std::size_t>(k)];
  if (const auto* hit = slot.load(std::memory_order_acquire)) return *hit;

  const auto& pj = rows_[static_cast<std::size_t>(j)];
  const auto& pk = rows_[static_cast<std::size_t>(k)];
  std::vector<Rational> product(static_cast<std::size_t>(j + k) + 1);
  for (std::size_t a = 0; a < pj.size(); ++a) {
    if (pj[a].is_zero()) continue;
    for (std::size_t b = 0; b < pk.size(); ++b) {
      if (pk[b].is_zero()) continue;
      product[a + b] += pj[a] * pk[b];
    }
  }
  const auto* computed = new std::vector<Rational>(from_monomial(product));
  const std::vector<Rational>* expected = nullptr;
  if (slot.compare_exchange_strong(expected, computed, std::memory_order_acq_rel))
    return *computed;
  delete computed;
  return *expected;
}

double PolynomialFamily::evaluate(int n, double x) const {
  if (n < 0 || n > order_) throw InputError("evaluate: degree out of range");
  const auto& r = rows_[static_cast<std::size_t>(n)];
  double acc = 0.0;
  for (std::size_t m = r.size(); m-- > 0;) acc = acc * x + r[m].to_double();
  return acc;
}

Rational PolynomialFamily::evaluate_exact(int n, const Rational& x) const {
  if (n < 0 || n > order_) throw InputError("evaluate: degree out of range");
  const auto& r = rows_[static_cast<std::size_t>(n)];
  Rational acc;
  for (std::size_t m = r.size(); m-- > 0;) acc = acc * x + r[m];
  return acc;
}

StructureTable::StructureTable(const PolynomialFamily& family, int order)
    : order_(order) {
  if (order < 0 || order > family.order())
    throw InputError("structure table order exceeds family truncation");
  entries_.resize(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 1));
  for (int j = 0; j <= order; ++j)
    for (int k = j; j + k <= order; ++k) {
      entries_[static_cast<std::size_t>(j) * static_cast<std::size_t>(order + 1) +
               static_cast<std::size_t>(k)] = family.structure_constants(j, k);
    }
}

std::span<const Rational> StructureTable::at(int j, int k) const {
  if (j > k) std::swap(j, k);
  if (j < 0 || j + k > order_)
    throw InputError("structure table lookup out of range");
  return entries_[static_cast<std::size_t>(j) * static_cast<std::size_t>(order_ + 1) +
                  static_cast<std::size_t>(k)];
}

}  // namespace momenta
