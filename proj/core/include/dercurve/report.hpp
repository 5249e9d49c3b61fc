#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dercurve/dermod.hpp"
#include "dercurve/families.hpp"
#include "dercurve/poincare.hpp"

namespace dercurve {

/// Optional user-supplied residue-field series, as parsed from the wire
/// formats (comma-separated ascending coefficients; "num;den" for rationals).
struct PoincareInput {
  std::optional<std::vector<std::int64_t>> coeffs;
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
      rational;

  bool empty() const { return !coeffs && !rational; }
};

/// Everything the full pipeline computes for one generator list.
struct Analysis {
  NumericalSemigroup semigroup;
  PlaneSemigroup plane;
  CmVerdict cm;
  DerivationModule module;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  bool homogeneous = false;
  bool annihilation = false;
};

/// numsgp -> plane -> cm_check -> dermod -> annihilation. Throws the
/// underlying domain errors, including NotCohenMacaulayError.
Analysis analyze(std::vector<std::int64_t> generators);
Analysis analyze(std::vector<std::int64_t> generators, const SearchBounds& bounds);

/// Deterministic JSON report (sorted keys, sorted sets). `pk` may be null.
std::string analysis_to_json(const Analysis& a, const PoincareInput* pk,
                             int indent = 2);

/// One validated family instance; the analysis is absent when the instance
/// failed its CM check.
struct FamilyRun {
  FamilyValidation validation;
  std::optional<Analysis> analysis;
};

/// Family validation report embedding the instance analysis.
std::string family_to_json(const FamilyRun& run, int indent = 2);

/// Sweep report: one family entry per instance, sorted by parameters.
std::string sweep_to_json(const std::vector<FamilyRun>& runs, int indent = 2);

/// Series transform report for the poincare subcommand.
std::string poincare_to_json(std::int64_t h1, std::int64_t h2,
                             const PoincareInput& pk,
                             const std::optional<std::vector<std::int64_t>>& truncated,
                             const std::optional<RationalSeries>& rational,
                             int indent = 2);

/// Structured error object: {"error": {"code": ..., "message": ...}}.
std::string error_to_json(const Error& e, int indent = 2);

/// Plain-text table views for the --human flag.
std::string analysis_to_text(const Analysis& a);
std::string family_to_text(const FamilyRun& run);

/// Wire helpers shared by the CLI and the reports.
std::string render_coeff_list(const std::vector<std::int64_t>& coeffs);
std::string render_rational_wire(const RationalSeries& r);
std::vector<std::int64_t> parse_coeff_list(const std::string& text);
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> parse_rational_wire(
    const std::string& text);

}  // namespace dercurve
