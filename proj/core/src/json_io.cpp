#include "momenta/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace momenta {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed JSON");
  return doc;
}

const ordered_json& expect_member(const ordered_json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw InputError(std::string("document is missing \"") + key + "\"");
  return doc.at(key);
}

int expect_int(const ordered_json& v, const char* what) {
  if (!v.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return v.get<int>();
}

// 17 significant digits: enough to round-trip any double, and stable
// across runs.
std::string format_double(double v) {
  if (!std::isfinite(v)) throw InputError("cannot serialize non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_value(const ordered_json& v, std::string& out) {
  switch (v.type()) {
    case ordered_json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case ordered_json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& el : v) {
        if (!first) out += ',';
        first = false;
        dump_value(el, out);
      }
      out += ']';
      break;
    }
    case ordered_json::value_t::number_float:
      out += format_double(v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

std::string dump_document(const ordered_json& doc) {
  std::string out;
  dump_value(doc, out);
  out += '\n';
  return out;
}

Rational scalar_to_rational(const ordered_json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  throw InputError("expected an exact scalar (\"p/q\" string or integer)");
}

// Exact when every entry is a string or an integer.
bool array_is_exact(const ordered_json& arr) {
  for (const auto& v : arr) {
    if (v.is_string() || v.is_number_integer()) continue;
    if (v.is_number_float()) return false;
    throw InputError("scalar array entries must be strings or numbers");
  }
  return true;
}

std::vector<Rational> exact_array(const ordered_json& arr) {
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(scalar_to_rational(v));
  return out;
}

std::vector<double> double_array(const ordered_json& arr) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_number()) {
      out.push_back(v.get<double>());
    } else if (v.is_string()) {
      out.push_back(Rational::parse(v.get<std::string>()).to_double());
    } else {
      throw InputError("scalar array entries must be strings or numbers");
    }
  }
  return out;
}

ordered_json rational_array(std::span<const Rational> values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

ordered_json number_array(std::span<const double> values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

}  // namespace

Series series_from_json_array(const std::string& text, int order) {
  ordered_json doc = parse_text(text);
  if (!doc.is_array()) throw InputError("expected a JSON array of scalars");
  std::vector<Rational> coeffs = exact_array(doc);
  return Series::from_coeffs(coeffs, order);
}

PolynomialFamily family_from_json(const std::string& text) {
  ordered_json doc = parse_text(text);
  const FamilyKind kind =
      family_kind_from_name(expect_member(doc, "kind").get<std::string>());
  const int order = expect_int(expect_member(doc, "order"), "order");
  switch (kind) {
    case FamilyKind::monomial:
      return PolynomialFamily::monomial(order);
    case FamilyKind::newton:
      return PolynomialFamily::newton(order);
    case FamilyKind::sheffer: {
      const auto& gamma = expect_member(doc, "gamma");
      const auto& alpha = expect_member(doc, "alpha");
      if (!gamma.is_array() || !alpha.is_array())
        throw InputError("sheffer gamma/alpha must be arrays of exact scalars");
      ShefferSpec spec(Series::from_coeffs(exact_array(gamma), order),
                       Series::from_coeffs(exact_array(alpha), order));
      return PolynomialFamily::sheffer(spec, order);
    }
  }
  throw InputError("unknown family kind");
}

std::string family_to_json(const PolynomialFamily& family, bool include_rows) {
  ordered_json doc;
  doc["kind"] = family_kind_name(family.kind());
  doc["order"] = family.order();
  if (family.kind() == FamilyKind::sheffer) {
    const auto& spec = *family.sheffer_spec();
    doc["gamma"] = rational_array(spec.gamma.coeffs());
    doc["alpha"] = rational_array(spec.alpha.coeffs());
  }
  if (include_rows) {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= family.order(); ++n) rows.push_back(rational_array(family.row(n)));
    doc["rows"] = rows;
  }
  return dump_document(doc);
}

ParsedSequence sequence_from_json(const std::string& text) {
  ordered_json doc = parse_text(text);
  const auto& coeffs = expect_member(doc, "coeffs");
  if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array");
  ParsedSequence parsed;
  parsed.exact = array_is_exact(coeffs);
  if (parsed.exact)
    parsed.exact_seq = ExactSequence(exact_array(coeffs));
  else
    parsed.real_seq = RealSequence(double_array(coeffs));
  return parsed;
}

std::string sequence_to_json(const ExactSequence& f) {
  ordered_json doc;
  doc["coeffs"] = rational_array(f.coeffs());
  return dump_document(doc);
}

std::string sequence_to_json(const RealSequence& f) {
  ordered_json doc;
  doc["coeffs"] = number_array(f.coeffs());
  return dump_document(doc);
}

MomentFunctional functional_from_json(const std::string& text) {
  ordered_json doc = parse_text(text);
  const FamilyKind kind =
      family_kind_from_name(expect_member(doc, "family").get<std::string>());
  const auto& values = expect_member(doc, "values");
  if (!values.is_array()) throw InputError("\"values\" must be an array");
  if (array_is_exact(values)) return MomentFunctional::exact(exact_array(values), kind);
  return MomentFunctional::numeric(double_array(values), kind);
}

std::string functional_to_json(const MomentFunctional& tau) {
  ordered_json doc;
  doc["family"] = family_kind_name(tau.family_kind());
  doc["values"] = tau.is_exact() ? rational_array(tau.exact_values())
                                 : number_array(tau.values());
  return dump_document(doc);
}

DiscreteMeasure measure_from_json(const std::string& text) {
  ordered_json doc = parse_text(text);
  const auto& atoms = expect_member(doc, "atoms");
  const auto& weights = expect_member(doc, "weights");
  if (!atoms.is_array() || !weights.is_array())
    throw InputError("\"atoms\" and \"weights\" must be arrays");
  return DiscreteMeasure(double_array(atoms), double_array(weights));
}

std::string measure_to_json(const DiscreteMeasure& mu) {
  ordered_json doc;
  doc["atoms"] = number_array(mu.atoms());
  doc["weights"] = number_array(mu.weights());
  return dump_document(doc);
}

std::string verdict_to_json(const PositivityResult& result) {
  ordered_json doc;
  doc["verdict"] = verdict_name(result.verdict);
  if (result.exact_witness)
    doc["witness"] = rational_array(*result.exact_witness);
  else if (result.witness)
    doc["witness"] = number_array(*result.witness);
  if (result.lambda_min) doc["lambda_min"] = *result.lambda_min;
  return dump_document(doc);
}

std::string verdict_to_json(const ExpConvexityResult& result) {
  ordered_json doc;
  doc["verdict"] = verdict_name(result.verdict);
  if (result.witness) doc["witness"] = number_array(*result.witness);
  doc["lambda_min"] = result.lambda_min;
  return dump_document(doc);
}

std::string samples_to_json(const std::vector<TransformSample>& samples) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : samples) {
    ordered_json doc;
    doc["lambda"] = ordered_json::array({s.lambda.real(), s.lambda.imag()});
    doc["value"] = ordered_json::array({s.value.real(), s.value.imag()});
    doc["terms_used"] = s.terms_used;
    doc["tail_bound"] = s.tail_bound;
    if (s.radius_warning) doc["radius_warning"] = true;
    arr.push_back(doc);
  }
  return dump_document(arr);
}

std::string growth_to_json(const GrowthFit& fit) {
  ordered_json doc;
  doc["C"] = fit.c;
  doc["argmax"] = fit.argmax;
  doc["flagged"] = fit.unbounded_trend;
  return dump_document(doc);
}

std::string diag_energy_to_json(const DiagEnergyReport& report) {
  ordered_json doc;
  doc["energies"] = number_array(report.energies);
  doc["normalized"] = number_array(report.normalized);
  doc["C"] = report.c;
  doc["flagged"] = report.unbounded_trend;
  return dump_document(doc);
}

std::string carleman_to_json(const CarlemanReport& report) {
  ordered_json doc;
  doc["k"] = report.shift;
  doc["partial_sums"] = number_array(report.partial_sums);
  return dump_document(doc);
}

}  // namespace momenta
