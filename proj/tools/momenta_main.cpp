// momenta: batch CLI over polynomial-family moment algebra. JSON in,
// JSON out; exit 0 on success, 2 on input validation errors, 3 on
// computation errors.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "momenta/json_io.hpp"

namespace {

using momenta::ComputeError;
using momenta::InputError;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

// Inputs are inline JSON when they look like it, file paths otherwise.
std::string load_document(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << text;
}

momenta::PolynomialFamily resolve_family(const std::string& family_file,
                                         const std::string& kind, int order,
                                         const momenta::MomentFunctional* tau) {
  if (!family_file.empty()) return momenta::family_from_json(load_document(family_file));
  std::string name = kind;
  if (name.empty() && tau != nullptr)
    name = momenta::family_kind_name(tau->family_kind());
  if (name.empty())
    throw InputError("no family given: pass --family-file or --kind");
  const momenta::FamilyKind k = momenta::family_kind_from_name(name);
  switch (k) {
    case momenta::FamilyKind::monomial:
      return momenta::PolynomialFamily::monomial(order);
    case momenta::FamilyKind::newton:
      return momenta::PolynomialFamily::newton(order);
    case momenta::FamilyKind::sheffer:
      throw InputError("a sheffer family needs --family-file with gamma/alpha");
  }
  throw InputError("unknown family kind");
}

std::vector<momenta::Complex> parse_grid(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array())
    throw InputError("--grid must be a JSON array of numbers or [re, im] pairs");
  std::vector<momenta::Complex> grid;
  for (const auto& v : doc) {
    if (v.is_number()) {
      grid.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      grid.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw InputError("--grid entries must be numbers or [re, im] pairs");
    }
  }
  if (grid.empty()) throw InputError("--grid must not be empty");
  return grid;
}

int default_gram_size(std::size_t tau_length) {
  if (tau_length == 0) throw InputError("functional has no values");
  return static_cast<int>((tau_length - 1) / 2);
}

struct SequenceArg {
  momenta::ParsedSequence parsed;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment problems over polynomial families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout")
      ->capture_default_str();

  // family
  auto* cmd_family = app.add_subcommand("family", "build a polynomial family table")->fallthrough();
  std::string fam_kind;
  int fam_order = momenta::PolynomialFamily::kDefaultOrder;
  std::string fam_gamma, fam_alpha;
  cmd_family->add_option("--kind", fam_kind, "monomial | newton | sheffer")->required();
  cmd_family->add_option("--order", fam_order, "truncation order");
  cmd_family->add_option("--gamma", fam_gamma, "sheffer gamma coefficients (JSON array)");
  cmd_family->add_option("--alpha", fam_alpha, "sheffer alpha coefficients (JSON array)");

  // conv
  auto* cmd_conv = app.add_subcommand("conv", "convolve two sequences over a family")->fallthrough();
  std::string conv_f, conv_g, conv_family_file, conv_kind;
  int conv_order = momenta::PolynomialFamily::kDefaultOrder;
  cmd_conv->add_option("--f", conv_f, "first sequence (JSON or path)")->required();
  cmd_conv->add_option("--g", conv_g, "second sequence (JSON or path)")->required();
  cmd_conv->add_option("--family-file", conv_family_file, "family document (JSON or path)");
  cmd_conv->add_option("--kind", conv_kind, "built-in family kind");
  cmd_conv->add_option("--order", conv_order, "built-in family order");

  // check
  auto* cmd_check = app.add_subcommand("check", "positivity verdict for a functional")->fallthrough();
  std::string check_in, check_family_file, check_kind;
  int check_n = -1;
  double check_tol = 1e-10;
  cmd_check->add_option("--in", check_in, "functional document (JSON or path)")->required();
  cmd_check->add_option("--family-file", check_family_file, "family document");
  cmd_check->add_option("--kind", check_kind, "built-in family kind");
  cmd_check->add_option("--order", check_n, "gram size N (default: (len-1)/2)");
  cmd_check->add_option("--tol", check_tol, "relative eigenvalue tolerance");

  // reconstruct
  auto* cmd_rec = app.add_subcommand("reconstruct", "discrete measure from moments")->fallthrough();
  std::string rec_in, rec_family_file, rec_kind;
  int rec_n = -1;
  cmd_rec->add_option("--in", rec_in, "functional document (JSON or path)")->required();
  cmd_rec->add_option("--family-file", rec_family_file, "family document");
  cmd_rec->add_option("--kind", rec_kind, "built-in family kind");
  cmd_rec->add_option("--order", rec_n, "truncation N (default: (len-1)/2)");

  // forward
  auto* cmd_fwd = app.add_subcommand("forward", "generalized moments of a measure")->fallthrough();
  std::string fwd_in, fwd_family_file, fwd_kind;
  int fwd_m = -1;
  cmd_fwd->add_option("--in", fwd_in, "measure document (JSON or path)")->required();
  cmd_fwd->add_option("--family-file", fwd_family_file, "family document");
  cmd_fwd->add_option("--kind", fwd_kind, "built-in family kind");
  cmd_fwd->add_option("--order", fwd_m, "highest moment index M")->required();

  // transform
  auto* cmd_tr = app.add_subcommand("transform", "series and measure transforms")->fallthrough();
  std::string tr_kind, tr_in, tr_grid, tr_annotate = "monomial";
  int tr_terms = momenta::kDefaultTransformTerms;
  double tr_tol = 1e-10;
  cmd_tr->add_option("--kind", tr_kind, "s | laplace | bogoliubov | expconv | taylor")
      ->required();
  cmd_tr->add_option("--in", tr_in, "source document (JSON or path)")->required();
  cmd_tr->add_option("--grid", tr_grid, "lambda grid (JSON array)");
  cmd_tr->add_option("--terms", tr_terms, "series term cap");
  cmd_tr->add_option("--tol", tr_tol, "expconv eigenvalue tolerance");
  cmd_tr->add_option("--family", tr_annotate, "annotation for taylor output");

  // growth
  auto* cmd_growth = app.add_subcommand("growth", "factorial-growth constant fit")->fallthrough();
  std::string growth_in;
  cmd_growth->add_option("--in", growth_in, "functional document (JSON or path)")->required();

  // carleman
  auto* cmd_carleman = app.add_subcommand("carleman", "carleman-type partial sums")->fallthrough();
  std::string carleman_in;
  int carleman_k = 0;
  int carleman_terms = 10;
  cmd_carleman->add_option("--in", carleman_in, "functional document (JSON or path)")
      ->required();
  cmd_carleman->add_option("--k", carleman_k, "index shift k");
  cmd_carleman->add_option("--terms", carleman_terms, "number of partial sums");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cmd_family) {
      momenta::PolynomialFamily family = [&] {
        const momenta::FamilyKind k = momenta::family_kind_from_name(fam_kind);
        switch (k) {
          case momenta::FamilyKind::monomial:
            return momenta::PolynomialFamily::monomial(fam_order);
          case momenta::FamilyKind::newton:
            return momenta::PolynomialFamily::newton(fam_order);
          case momenta::FamilyKind::sheffer: {
            if (fam_gamma.empty() || fam_alpha.empty())
              throw InputError("sheffer families need --gamma and --alpha");
            momenta::ShefferSpec spec(
                momenta::series_from_json_array(fam_gamma, fam_order),
                momenta::series_from_json_array(fam_alpha, fam_order));
            return momenta::PolynomialFamily::sheffer(spec, fam_order);
          }
        }
        throw InputError("unknown family kind");
      }();
      emit(momenta::family_to_json(family), out_path);
    } else if (*cmd_conv) {
      momenta::PolynomialFamily family =
          resolve_family(conv_family_file, conv_kind, conv_order, nullptr);
      momenta::ParsedSequence f = momenta::sequence_from_json(load_document(conv_f));
      momenta::ParsedSequence g = momenta::sequence_from_json(load_document(conv_g));
      if (f.exact && g.exact) {
        emit(momenta::sequence_to_json(conv_general(f.exact_seq, g.exact_seq, family)),
             out_path);
      } else {
        momenta::RealSequence fr = f.exact ? momenta::to_real(f.exact_seq) : f.real_seq;
        momenta::RealSequence gr = g.exact ? momenta::to_real(g.exact_seq) : g.real_seq;
        emit(momenta::sequence_to_json(conv_general(fr, gr, family)), out_path);
      }
    } else if (*cmd_check) {
      momenta::MomentFunctional tau =
          momenta::functional_from_json(load_document(check_in));
      const int n = check_n >= 0 ? check_n : default_gram_size(tau.size());
      momenta::PolynomialFamily family =
          resolve_family(check_family_file, check_kind, std::max(2 * n, 1), &tau);
      emit(momenta::verdict_to_json(momenta::is_positive(tau, family, n, check_tol)),
           out_path);
    } else if (*cmd_rec) {
      momenta::MomentFunctional tau = momenta::functional_from_json(load_document(rec_in));
      const int n = rec_n >= 0 ? rec_n : default_gram_size(tau.size());
      momenta::PolynomialFamily family =
          resolve_family(rec_family_file, rec_kind, std::max(2 * n, 1), &tau);
      emit(momenta::measure_to_json(momenta::reconstruct_measure(tau, family, n)), out_path);
    } else if (*cmd_fwd) {
      momenta::DiscreteMeasure mu = momenta::measure_from_json(load_document(fwd_in));
      momenta::PolynomialFamily family =
          resolve_family(fwd_family_file, fwd_kind, std::max(fwd_m, 1), nullptr);
      emit(momenta::functional_to_json(momenta::forward_moments(mu, family, fwd_m)),
           out_path);
    } else if (*cmd_tr) {
      const std::string doc = load_document(tr_in);
      if (tr_kind == "taylor") {
        auto parsed = nlohmann::json::parse(doc, nullptr, false);
        if (parsed.is_discarded()) throw InputError("malformed JSON");
        const momenta::FamilyKind annotate = momenta::family_kind_from_name(tr_annotate);
        if (parsed.is_object() && parsed.contains("series")) {
          momenta::Series series =
              momenta::series_from_json_array(parsed.at("series").dump(), tr_terms);
          emit(momenta::functional_to_json(momenta::taylor_functional(series, annotate)),
               out_path);
        } else if (parsed.is_object() && parsed.contains("derivatives")) {
          std::vector<double> d = parsed.at("derivatives").get<std::vector<double>>();
          emit(momenta::functional_to_json(momenta::taylor_functional(
                   std::span<const double>(d), annotate)),
               out_path);
        } else {
          throw InputError("taylor input needs \"series\" or \"derivatives\"");
        }
      } else if (tr_kind == "expconv") {
        if (tr_grid.empty()) throw InputError("expconv needs --grid");
        momenta::DiscreteMeasure mu = momenta::measure_from_json(doc);
        std::vector<momenta::Complex> grid = parse_grid(tr_grid);
        std::vector<double> real_grid;
        for (const auto& z : grid) {
          if (z.imag() != 0.0) throw InputError("expconv grid must be real");
          real_grid.push_back(z.real());
        }
        auto result = momenta::exp_convexity_check(
            real_grid,
            [&](double s) { return momenta::laplace(mu, {s, 0.0}).real(); }, tr_tol);
        emit(momenta::verdict_to_json(result), out_path);
      } else if (tr_kind == "s" || tr_kind == "laplace" || tr_kind == "bogoliubov") {
        if (tr_grid.empty()) throw InputError("this transform needs --grid");
        std::vector<momenta::Complex> grid = parse_grid(tr_grid);
        std::vector<momenta::TransformSample> samples;
        auto parsed = nlohmann::json::parse(doc, nullptr, false);
        if (parsed.is_discarded()) throw InputError("malformed JSON");
        const bool is_measure = parsed.is_object() && parsed.contains("atoms");
        if (tr_kind == "s") {
          momenta::MomentFunctional xi = momenta::functional_from_json(doc);
          for (const auto& z : grid) samples.push_back(momenta::s_transform(xi, z, tr_terms));
        } else if (tr_kind == "laplace") {
          momenta::DiscreteMeasure mu = momenta::measure_from_json(doc);
          for (const auto& z : grid) {
            momenta::TransformSample s;
            s.lambda = z;
            s.value = momenta::laplace(mu, z);
            s.terms_used = static_cast<int>(mu.size());
            s.tail_bound = 0.0;
            samples.push_back(s);
          }
        } else if (is_measure) {
          momenta::DiscreteMeasure mu = momenta::measure_from_json(doc);
          for (const auto& z : grid) samples.push_back(momenta::bogoliubov(mu, z));
        } else {
          momenta::MomentFunctional tau = momenta::functional_from_json(doc);
          for (const auto& z : grid) samples.push_back(momenta::bogoliubov(tau, z, tr_terms));
        }
        for (const auto& s : samples)
          if (s.radius_warning)
            std::cerr << "warning: |lambda| = " << std::abs(s.lambda)
                      << " is at or beyond the empirical convergence radius\n";
        emit(momenta::samples_to_json(samples), out_path);
      } else {
        throw InputError("unknown transform kind: " + tr_kind);
      }
    } else if (*cmd_growth) {
      momenta::MomentFunctional tau =
          momenta::functional_from_json(load_document(growth_in));
      emit(momenta::growth_to_json(momenta::growth_constant(tau)), out_path);
    } else if (*cmd_carleman) {
      momenta::MomentFunctional tau =
          momenta::functional_from_json(load_document(carleman_in));
      emit(momenta::carleman_to_json(
               momenta::carleman_report(tau, carleman_k, carleman_terms)),
           out_path);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ComputeError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}
