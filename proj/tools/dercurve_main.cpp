// dercurve: exact computations on homogenized monomial curves.
//
// Subcommands:
//   analyze  <generators...>    full pipeline, JSON report on stdout
//   family   arslan|backelin    closed-form validators with --sweep support
//   poincare                    series transform 1 + (h1+h2) P_K
//
// Exit codes: 0 success, 1 input/validation error, 2 non-Cohen-Macaulay input.

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dercurve/families.hpp"
#include "dercurve/report.hpp"

namespace {

using namespace dercurve;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotCm = 2;

std::optional<std::int64_t> env_bound() {
  const char* raw = std::getenv("DERCURVE_BOUND");
  if (!raw) return std::nullopt;
  try {
    std::int64_t value = std::stoll(raw);
    if (value < 1)
      throw Error(errc::param_out_of_range, "DERCURVE_BOUND must be positive");
    return value;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error,
                std::string("DERCURVE_BOUND is not an integer: ") + raw);
  }
}

// Bounds for one instance: the env value, when set, replaces every default.
SearchBounds bounds_for(const PlaneSemigroup& plane) {
  if (auto b = env_bound()) return SearchBounds{*b, *b, *b};
  return default_bounds(plane);
}

std::optional<SearchBounds> env_bounds_flat() {
  if (auto b = env_bound()) return SearchBounds{*b, *b, *b};
  return std::nullopt;
}

int exit_code_for(const Error& e) {
  return e.code() == errc::not_cohen_macaulay ? kExitNotCm : kExitInput;
}

int run_analyze(const std::vector<std::int64_t>& gens, const PoincareInput& pk,
                bool human) {
  NumericalSemigroup s(gens);
  PlaneSemigroup plane(std::move(s));
  Analysis a = analyze(gens, bounds_for(plane));
  if (human)
    std::cout << analysis_to_text(a);
  else
    std::cout << analysis_to_json(a, pk.empty() ? nullptr : &pk) << "\n";
  return kExitOk;
}

FamilyRun run_one_family(const std::string& kind, std::int64_t h,
                         std::int64_t n, std::int64_t r) {
  const std::optional<SearchBounds> bounds = env_bounds_flat();
  FamilyRun run;
  std::vector<std::int64_t> gens;
  if (kind == "arslan") {
    ArslanInstance a = arslan(h);
    run.validation = bounds ? validate_family(a, *bounds) : validate_family(a);
    gens = a.generators();
  } else {
    BackelinInstance b = backelin(n, r);
    run.validation = bounds ? validate_family(b, *bounds) : validate_family(b);
    gens = b.generators();
  }
  try {
    NumericalSemigroup s(gens);
    PlaneSemigroup plane(std::move(s));
    run.analysis = analyze(gens, bounds ? *bounds : default_bounds(plane));
  } catch (const NotCohenMacaulayError&) {
    // reported through the cm row; the report field stays null
  }
  return run;
}

int family_exit(const std::vector<FamilyRun>& runs) {
  bool cm_failure = false;
  bool row_failure = false;
  for (const FamilyRun& run : runs)
    for (const CheckRow& row : run.validation.rows) {
      if (row.informational || row.pass) continue;
      row_failure = true;
      if (row.name == "cm_default_bound") cm_failure = true;
    }
  if (cm_failure) return kExitNotCm;
  return row_failure ? kExitInput : kExitOk;
}

int run_family(const std::string& kind, std::int64_t h, std::int64_t n,
               std::int64_t r, std::optional<std::int64_t> sweep_to,
               std::int64_t max_s, bool human) {
  std::vector<FamilyRun> runs;
  if (!sweep_to) {
    runs.push_back(run_one_family(kind, h, n, r));
    if (human)
      std::cout << family_to_text(runs.front());
    else
      std::cout << family_to_json(runs.front()) << "\n";
    return family_exit(runs);
  }

  // Sweep fans out one task per instance; results are emitted in parameter
  // order regardless of completion order.
  std::vector<std::future<FamilyRun>> futures;
  if (kind == "arslan") {
    if (*sweep_to < h)
      throw Error(errc::param_out_of_range, "--sweep must be >= --h");
    for (std::int64_t hh = h; hh <= *sweep_to; ++hh)
      futures.push_back(std::async(std::launch::async, run_one_family, kind,
                                   hh, n, r));
  } else {
    if (*sweep_to < r)
      throw Error(errc::param_out_of_range, "--sweep must be >= --r");
    for (std::int64_t rr = r; rr <= *sweep_to; ++rr) {
      if (backelin(n, rr).s > max_s) continue;  // desk-scale cap, see --max-s
      futures.push_back(std::async(std::launch::async, run_one_family, kind,
                                   h, n, rr));
    }
  }
  runs.reserve(futures.size());
  for (auto& f : futures) runs.push_back(f.get());
  if (human)
    for (const FamilyRun& run : runs) std::cout << family_to_text(run);
  else
    std::cout << sweep_to_json(runs) << "\n";
  return family_exit(runs);
}

int run_poincare(std::int64_t h1, std::int64_t h2, const std::string& coeffs,
                 const std::string& rational, bool human) {
  PoincareInput pk;
  std::optional<std::vector<std::int64_t>> truncated;
  std::optional<RationalSeries> transformed;
  if (!coeffs.empty()) {
    pk.coeffs = parse_coeff_list(coeffs);
    truncated = der_series(h1, h2, TruncatedSeries(*pk.coeffs)).coeffs();
  } else {
    pk.rational = parse_rational_wire(rational);
    RationalSeries in{Polynomial(pk.rational->first),
                      Polynomial(pk.rational->second)};
    transformed = der_series_rational(h1, h2, in);
  }
  if (human) {
    if (truncated) std::cout << render_coeff_list(*truncated) << "\n";
    if (transformed) std::cout << render_rational_wire(*transformed) << "\n";
  } else {
    std::cout << poincare_to_json(h1, h2, pk, truncated, transformed) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact derivation-module and Poincare-series computations for "
               "homogenized monomial curves"};
  app.require_subcommand(1);

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "full pipeline for a numerical semigroup");
  std::vector<std::int64_t> gens;
  std::string pk_coeffs, pk_rational;
  bool human_analyze = false;
  cmd_analyze->add_option("generators", gens, "semigroup generators")
      ->required()
      ->expected(-1);
  cmd_analyze->add_option("--pk-coeffs", pk_coeffs,
                          "residue-field series, ascending coefficients");
  cmd_analyze->add_option("--pk-rational", pk_rational,
                          "residue-field series as 'num;den'");
  cmd_analyze->add_flag("--human", human_analyze, "table view instead of JSON");

  auto* cmd_family =
      app.add_subcommand("family", "closed-form family validators");
  // long-only help so the one-letter family parameters stay available
  cmd_family->set_help_flag("--help", "print help");
  std::string kind;
  std::int64_t h = 0, n = 0, r = 0, max_s = 200;
  std::optional<std::int64_t> sweep_to;
  bool human_family = false;
  cmd_family->add_option("kind", kind, "arslan or backelin")
      ->required()
      ->check(CLI::IsMember({"arslan", "backelin"}));
  cmd_family->add_option("--h", h, "family parameter h (arslan)");
  cmd_family->add_option("--n", n, "family parameter n (backelin)");
  cmd_family->add_option("--r", r, "family parameter r (backelin)");
  cmd_family->add_option("--sweep", sweep_to,
                         "iterate h (arslan) or r (backelin) up to this value");
  cmd_family->add_option("--max-s", max_s,
                         "skip swept backelin instances with s above this");
  cmd_family->add_flag("--human", human_family, "table view instead of JSON");

  auto* cmd_poincare =
      app.add_subcommand("poincare", "series transform 1 + (h1+h2) P_K");
  std::int64_t h1 = 0, h2 = 0;
  std::string coeffs, rational;
  bool human_poincare = false;
  cmd_poincare->add_option("--h1", h1, "type of the first projection")
      ->required();
  cmd_poincare->add_option("--h2", h2, "type of the second projection")
      ->required();
  auto* opt_coeffs = cmd_poincare->add_option(
      "--coeffs", coeffs, "P_K as ascending coefficient list");
  auto* opt_rational = cmd_poincare->add_option(
      "--rational", rational, "P_K as 'num;den' coefficient lists");
  opt_coeffs->excludes(opt_rational);
  cmd_poincare->add_flag("--human", human_poincare,
                         "wire format only instead of JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_analyze->parsed()) {
      PoincareInput pk;
      if (!pk_coeffs.empty()) pk.coeffs = parse_coeff_list(pk_coeffs);
      if (!pk_rational.empty()) pk.rational = parse_rational_wire(pk_rational);
      return run_analyze(gens, pk, human_analyze);
    }
    if (cmd_family->parsed()) {
      if (kind == "arslan" && !cmd_family->count("--h"))
        throw Error(errc::param_out_of_range, "arslan requires --h");
      if (kind == "backelin" &&
          (!cmd_family->count("--n") || !cmd_family->count("--r")))
        throw Error(errc::param_out_of_range, "backelin requires --n and --r");
      return run_family(kind, h, n, r, sweep_to, max_s, human_family);
    }
    if (cmd_poincare->parsed()) {
      if (coeffs.empty() == rational.empty())
        throw Error(errc::parse_error,
                    "provide exactly one of --coeffs or --rational");
      return run_poincare(h1, h2, coeffs, rational, human_poincare);
    }
  } catch (const Error& e) {
    std::cout << error_to_json(e) << "\n";
    return exit_code_for(e);
  }
  return kExitInput;
}
