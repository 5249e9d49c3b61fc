#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dercurve/dermod.hpp"
#include "dercurve/numsgp.hpp"

namespace dercurve {

/// The four-generated family <h(h+1), h(h+1)+1, (h+1)^2, (h+1)^2+1>, h >= 2.
struct ArslanInstance {
  std::int64_t h = 0;
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0;

  std::vector<std::int64_t> generators() const { return {a1, a2, a3, a4}; }
  NumericalSemigroup semigroup() const {
    return NumericalSemigroup(generators());
  }
};

/// Throws Error(param_out_of_range) for h < 2.
ArslanInstance arslan(std::int64_t h);

/// The four-generated family <s, s+3, s+3n+1, s+3n+2> with s = r(3n+2)+3,
/// for n >= 2 and r >= 3n+2.
struct BackelinInstance {
  std::int64_t n = 0, r = 0, s = 0;
  std::int64_t m1 = 0, m2 = 0, m3 = 0, m4 = 0;

  std::vector<std::int64_t> generators() const { return {m1, m2, m3, m4}; }
  NumericalSemigroup semigroup() const {
    return NumericalSemigroup(generators());
  }
};

/// Throws Error(param_out_of_range) unless n >= 2 and r >= 3n+2.
BackelinInstance backelin(std::int64_t n, std::int64_t r);

/// Closed-form pseudo-Frobenius set, 2h-1 elements, sorted:
/// (h-i)a3 + (i-1)a4 - a1 for 1 <= i <= h-1 and
/// (h-j)a2 + j a4 - a1 for 0 <= j <= h-1.
std::vector<std::int64_t> arslan_pf_formula(const ArslanInstance& a);

/// Closed-form Apery set of a1, h(h+1) elements, sorted.
std::vector<std::int64_t> arslan_apery_formula(const ArslanInstance& a);

/// The 2h+2 derivation generators of the first family theorem, with the
/// degenerate d1 generator v^{1+h a4} carrying d/du (the general theorem's
/// direction; the family statement prints d/dv for it, a known slip that the
/// reports surface).
std::vector<DerGenerator> arslan_der_formula(const ArslanInstance& a);

/// Closed-form pseudo-Frobenius set F1 u F2 u F3 u F4, 3n+2 elements, sorted.
std::vector<std::int64_t> backelin_pf_formula(const BackelinInstance& b);

/// The 3n+5 derivation generators of the second family theorem.
std::vector<DerGenerator> backelin_der_formula(const BackelinInstance& b);

struct BinomialFlags {
  bool in_ideal = false;     // equal weighted degrees: x^A - x^B vanishes
  bool homogeneous = false;  // equal total degrees
};

/// Weighted- and total-degree comparison of the two exponent vectors.
/// Throws Error(dimension_mismatch) unless both match the weight count.
BinomialFlags binomial_flags(const std::vector<std::int64_t>& weights,
                             const std::vector<std::int64_t>& exp_a,
                             const std::vector<std::int64_t>& exp_b);

/// True iff the binomial x^A - x^B lies in the defining ideal, i.e. both
/// monomials have the same weighted degree.
bool binomial_in_ideal(const std::vector<std::int64_t>& weights,
                       const std::vector<std::int64_t>& exp_a,
                       const std::vector<std::int64_t>& exp_b);

/// One line of a validation ledger. Informational rows report numbers that
/// are expected to disagree (e.g. mu versus the minimal ideal count) and
/// never fail a run.
struct CheckRow {
  std::string name;
  bool pass = false;
  bool informational = false;
  std::string detail;
};

struct FamilyValidation {
  std::string family;  // "arslan" | "backelin"
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<CheckRow> rows;

  bool all_pass() const;  // informational rows excluded
};

/// Cross-checks every closed-form accessor against the generic engines and
/// the homogeneity/CM/annihilation statements. Failures are recorded as
/// rows, never thrown. Passing bounds overrides the per-instance defaults.
FamilyValidation validate_family(const ArslanInstance& a);
FamilyValidation validate_family(const ArslanInstance& a,
                                 const SearchBounds& bounds);
FamilyValidation validate_family(const BackelinInstance& b);
FamilyValidation validate_family(const BackelinInstance& b,
                                 const SearchBounds& bounds);

}  // namespace dercurve
