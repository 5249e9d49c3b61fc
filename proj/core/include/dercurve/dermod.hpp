#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dercurve/plane.hpp"

namespace dercurve {

enum class DerKind {
  euler_u,         // u d/du
  euler_v,         // v d/dv
  d1,              // v^beta u^alpha d/du, alpha-1 in PF(Gamma2)
  d1_degenerate,   // v^{1+c' n_e} d/du, Gamma2 = N
  d2,              // v^delta u^gamma d/dv, delta-1 in PF(Gamma1)
  d2_degenerate,   // u^{1+e' n_e} d/dv, Gamma1 = N
};

enum class Partial { u, v };

const char* der_kind_name(DerKind kind);
const char* partial_name(Partial partial);

/// One generator of the derivation module: v^{v_exp} u^{u_exp} times a
/// coordinate partial, plus the data that produced it.
struct DerGenerator {
  DerKind kind = DerKind::euler_u;
  std::int64_t v_exp = 0;
  std::int64_t u_exp = 0;
  Partial partial = Partial::u;
  /// Pseudo-Frobenius element answered (alpha-1 for d1, delta-1 for d2).
  std::optional<std::int64_t> pf = std::nullopt;
  /// Scan witness: beta (d1), gamma (d2), c' or e' (degenerate kinds).
  std::optional<std::int64_t> witness = std::nullopt;

  friend bool operator==(const DerGenerator&, const DerGenerator&) = default;
};

/// Search limits for the witness scans and the Cohen-Macaulay check. The
/// statements guarantee existence but no a priori bound, so the scans fail
/// loudly instead of running unbounded.
struct SearchBounds {
  std::int64_t cm_degree = 0;
  std::int64_t scan_limit = 0;       // largest beta/gamma candidate tried
  std::int64_t wrap_iterations = 0;  // largest c'/e' tried
};

/// cm_degree = default CM bound; scan_limit = conductor(Gamma1) +
/// conductor(Gamma2) + 4 n_e; wrap_iterations = 4 n_e.
SearchBounds default_bounds(const PlaneSemigroup& p);

class SearchExhaustedError : public Error {
public:
  explicit SearchExhaustedError(std::int64_t bound);
  std::int64_t bound() const { return bound_; }

private:
  std::int64_t bound_;
};

class NotCohenMacaulayError : public Error {
public:
  NotCohenMacaulayError(PlanePoint counterexample, std::int64_t bound);
  PlanePoint counterexample() const { return counterexample_; }
  std::int64_t bound() const { return bound_; }

private:
  PlanePoint counterexample_;
  std::int64_t bound_;
};

/// D1 of the generator theorem. For Gamma2 != N, one generator
/// v^beta u^alpha d/du per alpha-1 in PF(Gamma2), where beta is the least
/// positive integer with (beta, alpha-1) in (Gamma1 x PF(Gamma2)) cap L and
/// (beta, alpha-1) + (n, n_e - n) in the semigroup for every
/// n in {0, n_1, ..., n_{e-1}}. For Gamma2 = N, the single v^{1+c' n_e} d/du
/// with c' the least natural number passing the same shifts.
/// `search_bound` caps beta (respectively c'); exceeding it throws
/// SearchExhaustedError, which signals non-CM input or a bound too small.
std::vector<DerGenerator> compute_d1(const PlaneSemigroup& p,
                                     std::int64_t search_bound);

/// D2, symmetric to compute_d1: v^delta u^gamma d/dv per delta-1 in
/// PF(Gamma1) with gamma least such that (delta-1, gamma) lies in
/// (PF(Gamma1) x Gamma2) cap L and the shifts by (n, n_e - n) land in the
/// semigroup for every n in {n_1, ..., n_e}; u^{1+e' n_e} d/dv when
/// Gamma1 = N (shifts over {n_1, ..., n_{e-1}}).
std::vector<DerGenerator> compute_d2(const PlaneSemigroup& p,
                                     std::int64_t search_bound);

struct DerivationModule {
  std::vector<DerGenerator> generators;   // D1, u d/du, D2, v d/dv
  std::int64_t mu = 0;                    // |D1| + |D2| + 2
  std::vector<PlanePoint> ideal;          // I_Der monomials, duplicates kept
  std::vector<PlanePoint> minimal_ideal;  // non-redundant subset, order-stable
};

/// Full assembly: CM check at the given bounds, both scans, the ideal image
/// and its brute-forced minimal generating set. Throws NotCohenMacaulayError
/// when the CM check finds a box point outside the semigroup.
DerivationModule derivation_module(const PlaneSemigroup& p,
                                   const SearchBounds& bounds);
DerivationModule derivation_module(const PlaneSemigroup& p);

/// Monomial ideal isomorphic to the span of the given generators:
/// u d/du -> (0, n_e), v d/dv -> (n_e, 0), d1 (beta, alpha) ->
/// (beta, alpha-1+n_e), d1 degenerate -> (1+c' n_e, n_e-1), d2
/// (delta, gamma) -> (delta-1+n_e, gamma), d2 degenerate -> (n_e-1, 1+e' n_e).
/// Points are emitted corner-first per partial: (0, n_e), D1 images,
/// (n_e, 0), D2 images; duplicates are kept.
std::vector<PlanePoint> to_ideal(const std::vector<DerGenerator>& generators,
                                 const PlaneSemigroup& p);

/// Checks that every non-corner ideal point, multiplied by any mixed
/// generator (n_i, n_e - n_i) with 0 < i < e, dies in R/(u^{n_e}, v^{n_e}):
/// the product must lie in ((n_e, 0) + semigroup) or ((0, n_e) + semigroup).
/// Throws Error(point_outside_semigroup) if an input point is not a member.
bool annihilation_check(const std::vector<PlanePoint>& ideal_points,
                        const PlaneSemigroup& p);

/// Deduplicates, then drops every point divisible by another: g is kept iff
/// g - g' is not in the semigroup for any other kept candidate g'. Order of
/// first occurrences is preserved.
std::vector<PlanePoint> minimal_generators(std::vector<PlanePoint> points,
                                           const PlaneSemigroup& p);

}  // namespace dercurve
