// Command-line front end: exact restricted-shift forms, norms, window
// application, singular value probes, extremal witnesses, the mean lower
// bound demo, and the claims audit.
//
// Exit codes: 0 success, 1 engine/oracle mismatch in `audit`, 2 usage errors.

#include "haarshift/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace hs = haarshift;

namespace {

hs::DyadicInterval parse_interval_or_throw(const std::string& text) {
  const auto parsed = hs::parse_interval(text);
  if (!parsed) throw CLI::ValidationError("interval must be 'scale:index', got " + text);
  return *parsed;
}

std::string render(const hs::Sqrt2Scalar& x, int decimals) {
  if (decimals < 0) return x.str();
  std::ostringstream os;
  os << std::setprecision(decimals) << std::fixed << x.to_double();
  return os.str();
}

int run_constant(const std::string& i_text, const std::string& k_text, bool as_json,
                 int decimals) {
  const auto i = parse_interval_or_throw(i_text);
  const auto k = parse_interval_or_throw(k_text);
  const auto form = hs::restricted_indicator_shift(i, k);
  const auto rep = hs::bound_constant(i, k);
  if (as_json) {
    hs::Json j;
    j["I"] = hs::format_interval(i);
    j["K"] = hs::format_interval(k);
    j["case"] = hs::case_name(rep.case_class);
    j["form"] = hs::form_to_json(form);
    j["exact_constant"] = hs::format_rational(rep.exact_constant);
    j["paper_bound"] =
        rep.paper_bound ? hs::Json(hs::format_rational(*rep.paper_bound)) : hs::Json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "case: " << hs::case_name(rep.case_class) << "\n";
  std::cout << "constant (coefficient of 1_K): " << render(form.constant, decimals) << "\n";
  std::cout << "haar (coefficient of h_K):     " << render(form.haar, decimals) << "\n";
  for (const auto& [l, c] : form.inner)
    std::cout << "inner " << hs::format_interval(l) << ": " << render(c, decimals) << "\n";
  std::cout << "norm2: " << render(form.norm2(), decimals) << "\n";
  std::cout << "exact_constant (norm2/|I|): " << hs::format_rational(rep.exact_constant)
            << "\n";
  std::cout << "paper_bound: "
            << (rep.paper_bound ? hs::format_rational(*rep.paper_bound) : std::string("-"))
            << "\n";
  return 0;
}

int run_norm(const std::string& i_text, const std::string& k_text,
             const std::string& file, int decimals) {
  const auto i = parse_interval_or_throw(i_text);
  const auto k = parse_interval_or_throw(k_text);
  hs::DyadicFunction f = hs::function_from_json(hs::load_json_file(file));
  if (f.root() != i) {
    if (!hs::contains(i, f.root()))
      throw CLI::ValidationError("--i must contain the root of --f");
    const int depth =
        static_cast<int>(i.scale - f.root().scale) + f.depth();
    f = hs::embed(f, i, depth);
  }
  const auto form = hs::restricted_shift(f, k);
  const auto n2 = form.norm2();
  std::cout << "norm2: " << render(n2, decimals) << "\n";
  if (hs::classify(i, k) == hs::CaseClass::Interior) {
    const auto closed = hs::interior_norm2(f, k);
    std::cout << "interior_formula: " << render(closed, decimals) << "\n";
    std::cout << "cross_check: " << (closed == n2 ? "equal" : "MISMATCH") << "\n";
    if (closed != n2) return 1;
  }
  return 0;
}

int run_apply(const std::string& file, const std::string& window_text,
              const std::string& out_file) {
  const auto window = parse_interval_or_throw(window_text);
  const hs::DyadicFunction f = hs::function_from_json(hs::load_json_file(file));
  const hs::LeafVector result = hs::shift_full(f, window);
  hs::save_json_file(out_file, hs::function_to_json(hs::analyze(result)));
  std::cout << "wrote " << out_file << " (depth " << result.depth << ")\n";
  return 0;
}

int run_svd(const std::string& i_text, const std::string& k_text, int depth,
            bool zero_mean) {
  const auto i = parse_interval_or_throw(i_text);
  const auto k = parse_interval_or_throw(k_text);
  const auto constraint = zero_mean ? hs::oracle::DomainConstraint::zero_mean
                                    : hs::oracle::DomainConstraint::none;
  const auto rep = hs::oracle::smallest_singular(i, k, depth, constraint);
  std::cout << "I,K,depth,constraint,sigma_min,sigma_max,rank_numeric\n";
  std::printf("%s,%s,%d,%s,%.12g,%.12g,%d\n", hs::format_interval(i).c_str(),
              hs::format_interval(k).c_str(), depth, zero_mean ? "zero-mean" : "none",
              rep.sigma_min, rep.sigma_max, rep.rank_numeric);
  return 0;
}

int run_extremal(const std::string& i_text, const std::string& k_text,
                 const std::string& out_file) {
  const auto i = parse_interval_or_throw(i_text);
  const auto k = parse_interval_or_throw(k_text);
  const auto f = hs::extremal_interior(i, k);
  hs::save_json_file(out_file, hs::function_to_json(f));
  const auto residual = hs::restricted_shift(f, k).norm2();
  std::cout << "wrote " << out_file << "\n";
  std::cout << "norm2(f): " << hs::norm2(f).str() << "\n";
  std::cout << "norm2(1_K Ш f): " << residual.str() << "\n";
  if (!residual.is_zero()) {
    const auto w = hs::interior_annihilator(i, k);
    std::cout << "catalogued witness is not annihilated for this pair; "
                 "exact annihilator has mean "
              << w.mean().str() << " and norm2 " << hs::norm2(w).str() << "\n";
  }
  return 0;
}

int run_pw(const std::string& i_text, const std::string& coeff_file, int depth) {
  const auto i = parse_interval_or_throw(i_text);
  const auto poly = hs::trig_from_json(hs::load_json_file(coeff_file), i);
  const auto built = hs::pw_build(poly, depth);
  const double mean = built.f.mean();
  const double n2 = built.f.norm2();
  const double size = hs::to_double(hs::interval_size(i));
  const double lhs = mean * mean * size;
  const double rhs = (1.0 - built.eta) * (1.0 - built.eta) * n2;
  std::printf("eta: %.12g\n", built.eta);
  std::printf("mean: %.12g  norm2: %.12g\n", mean, n2);
  std::printf("mean_bound: |I|<f>^2 = %.12g >= (1-eta)^2 ||f||^2 = %.12g : %s\n", lhs,
              rhs, lhs >= rhs * (1 - 1e-9) ? "holds" : "VIOLATED");
  return lhs >= rhs * (1 - 1e-9) ? 0 : 1;
}

int run_audit(const std::string& scales, const std::string& out_file, int depth) {
  hs::UniverseSpec universe;
  if (!scales.empty()) {
    const auto dots = scales.find("..");
    if (dots == std::string::npos)
      throw CLI::ValidationError("--scales must look like 'a..b'");
    universe.scale_min = std::stoll(scales.substr(0, dots));
    universe.scale_max = std::stoll(scales.substr(dots + 2));
    if (universe.scale_min > universe.scale_max)
      throw CLI::ValidationError("--scales must be ordered");
  }
  const auto claims = hs::audit_claims(universe, depth);
  const hs::Json report = hs::claims_to_json(claims);
  if (!out_file.empty()) {
    hs::save_json_file(out_file, report);
    std::cout << "wrote " << out_file << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  for (const auto& c : claims)
    std::cout << c.claim << ": " << c.status << " (" << c.pairs_checked << " checks)\n";

  // Exit status reflects engine-vs-oracle agreement only; claim discrepancies
  // are findings, not failures.
  std::vector<hs::DyadicInterval> gate_intervals;
  for (std::int64_t s = -2; s <= 2; ++s)
    for (std::int64_t idx = 0; idx < (std::int64_t{1} << (3 - s)); ++idx) {
      gate_intervals.push_back({s, idx});
      gate_intervals.push_back({s, -idx - 1});
    }
  const auto agreement = hs::engine_oracle_agreement(gate_intervals, 2, 24);
  std::printf("engine/oracle agreement: max deviation %.3g (bound %.3g) over %zu checks: %s\n",
              agreement.max_deviation, agreement.bound, agreement.checks,
              agreement.ok ? "ok" : "MISMATCH");
  return agreement.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dyadic Hilbert transform (Haar shift) toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int decimals = -1;
  app.add_option("--decimal", decimals, "render scalars as decimals with N digits");

  std::string i_text, k_text, file, out_file, window, scales;
  int depth = 4;
  bool as_json = false, zero_mean = false;

  auto* constant = app.add_subcommand("constant", "exact 1_K Ш 1_I form and constants");
  constant->add_option("--i", i_text, "interval I as scale:index")->required();
  constant->add_option("--k", k_text, "interval K as scale:index")->required();
  constant->add_flag("--json", as_json, "emit JSON");

  auto* norm = app.add_subcommand("norm", "exact ‖ 1_K Ш f ‖²");
  norm->add_option("--i", i_text)->required();
  norm->add_option("--k", k_text)->required();
  norm->add_option("--f", file, "exact-mode function file")->required();

  auto* apply = app.add_subcommand("apply", "leaf-level 1_W Ш f");
  apply->add_option("--f", file)->required();
  apply->add_option("--window", window)->required();
  apply->add_option("--out", out_file)->required();

  auto* svd = app.add_subcommand("svd", "singular values of the restricted operator");
  svd->add_option("--i", i_text)->required();
  svd->add_option("--k", k_text)->required();
  svd->add_option("--depth", depth);
  svd->add_flag("--zero-mean", zero_mean, "restrict the domain to zero-mean functions");

  auto* extremal = app.add_subcommand("extremal", "catalogued interior extremal function");
  extremal->add_option("--i", i_text)->required();
  extremal->add_option("--k", k_text)->required();
  extremal->add_option("--out", out_file)->required();

  auto* pw = app.add_subcommand("pw", "mean lower bound demo for smooth functions");
  pw->add_option("--i", i_text)->required();
  pw->add_option("--coeffs", file, "JSON coefficient file")->required();
  pw->add_option("--depth", depth);

  auto* audit = app.add_subcommand("audit", "sweep the claims catalogue");
  audit->add_option("--scales", scales, "universe scales as 'a..b' (default -6..6)");
  audit->add_option("--out", out_file, "write the JSON report here");
  audit->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (constant->parsed()) return run_constant(i_text, k_text, as_json, decimals);
    if (norm->parsed()) return run_norm(i_text, k_text, file, decimals);
    if (apply->parsed()) return run_apply(file, window, out_file);
    if (svd->parsed()) return run_svd(i_text, k_text, depth, zero_mean);
    if (extremal->parsed()) return run_extremal(i_text, k_text, out_file);
    if (pw->parsed()) return run_pw(i_text, file, depth);
    if (audit->parsed()) return run_audit(scales, out_file, depth);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
