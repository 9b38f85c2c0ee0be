#ifndef MOMENTA_JSON_IO_HPP
#define MOMENTA_JSON_IO_HPP

#include <string>
#include <vector>

#include "momenta/functional.hpp"
#include "momenta/spectral.hpp"
#include "momenta/transforms.hpp"

namespace momenta {

// JSON document conventions, shared by the CLI and any embedding:
//   family     {"kind": "monomial"|"newton"|"sheffer", "order": N,
//               "gamma": [scalar...], "alpha": [scalar...]}   (sheffer only)
//              serialized families also carry "rows": [[scalar...]...]
//   sequence   {"coeffs": [scalar...]}
//   functional {"family": kind, "values": [scalar...]}
//   measure    {"atoms": [number...], "weights": [number...]}
//   verdict    {"verdict": "...", "witness": [...]?, "lambda_min": number?}
//   sample     {"lambda": [re, im], "value": [re, im],
//               "terms_used": n, "tail_bound": t}
// Scalars are JSON strings "p/q" (or "p") for exact rationals, or JSON
// numbers. A value array is exact when every entry is a string or an
// integer; any fractional number makes the whole array floating.
// Serialized numbers carry 17 significant digits, so documents are
// byte-stable across runs.

// Either an exact or a floating sequence, as parsed.
struct ParsedSequence {
  bool exact = false;
  ExactSequence exact_seq;
  RealSequence real_seq;
};

PolynomialFamily family_from_json(const std::string& text);
std::string family_to_json(const PolynomialFamily& family, bool include_rows = true);

ParsedSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const ExactSequence& f);
std::string sequence_to_json(const RealSequence& f);

MomentFunctional functional_from_json(const std::string& text);
std::string functional_to_json(const MomentFunctional& tau);

DiscreteMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const DiscreteMeasure& mu);

std::string verdict_to_json(const PositivityResult& result);
std::string verdict_to_json(const ExpConvexityResult& result);

std::string samples_to_json(const std::vector<TransformSample>& samples);

std::string growth_to_json(const GrowthFit& fit);
std::string diag_energy_to_json(const DiagEnergyReport& report);
std::string carleman_to_json(const CarlemanReport& report);

// Exact rational series from a JSON array of scalars (strings or
// integers), padded with zeros to the requested order.
Series series_from_json_array(const std::string& text, int order);

}  // namespace momenta

#endif  // MOMENTA_JSON_IO_HPP
