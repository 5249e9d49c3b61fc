#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dercurve/numsgp.hpp"

namespace dercurve {

/// Lattice point of the homogenized semigroup. `a` is the v-exponent
/// (t-weight) and `b` the u-exponent (s-weight). Negative entries occur
/// transiently in derivation condition points and are handled by every
/// membership predicate.
struct PlanePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend PlanePoint operator+(PlanePoint p, PlanePoint q) {
    return {p.a + q.a, p.b + q.b};
  }
  friend PlanePoint operator-(PlanePoint p, PlanePoint q) {
    return {p.a - q.a, p.b - q.b};
  }
};

/// Outcome of the degree-bounded Cohen-Macaulay equality check. An empty
/// counterexample means the semigroup agrees with (Gamma1 x Gamma2) cap L
/// for every degree up to `bound`; the bound always travels with the
/// verdict since the check is a semi-decision.
struct CmVerdict {
  std::int64_t bound = 0;
  std::optional<PlanePoint> counterexample;

  bool equal_up_to_bound() const { return !counterexample.has_value(); }
};

/// Homogenization of a numerical semigroup in N^2, generated by the pairs
/// (n_i, n_e - n_i) for i = 0..e with n_0 = 0. Every generator has
/// coordinate sum n_e, so a point of degree k is reachable iff its first
/// coordinate is a sum of exactly k summands from {0, n_1, ..., n_e};
/// membership runs on a per-degree table cached inside the instance.
///
/// The cache is grown without synchronization: use one instance per thread.
/// Cross-instance parallelism is unrestricted.
class PlaneSemigroup {
public:
  /// Requires at least two minimal generators.
  explicit PlaneSemigroup(NumericalSemigroup gamma1);

  /// Homogenizes an arbitrary strictly increasing positive sequence with
  /// gcd 1. The sequence need not minimally generate; both projections are
  /// reduced to minimal generating sets. Intended for degenerate shapes
  /// (e.g. a first projection equal to N) that the checked constructor
  /// rejects.
  static PlaneSemigroup from_sequence(std::vector<std::int64_t> sequence);

  const NumericalSemigroup& gamma1() const { return gamma1_; }
  const NumericalSemigroup& gamma2() const { return gamma2_; }

  /// n_e: the common coordinate sum of all generator points.
  std::int64_t top() const { return top_; }

  /// The e+1 points (n_i, n_e - n_i), i = 0..e (first (0, n_e), last (n_e, 0)).
  const std::vector<PlanePoint>& generator_points() const { return points_; }

  /// Generators of Gamma2 as constructed, before minimalization.
  const std::vector<std::int64_t>& gamma2_raw_generators() const {
    return gamma2_raw_;
  }

  /// a + b in n_e Z (signed-safe).
  bool in_lattice(PlanePoint p) const;

  /// Exact membership in the homogenized semigroup.
  bool contains(PlanePoint p) const;

  /// a in Gamma1, b in Gamma2 and the lattice condition.
  bool box_member(PlanePoint p) const;

  /// ceil((F(Gamma1) + F(Gamma2)) / n_e) + 2, with F(N) = -1.
  std::int64_t default_cm_bound() const;

  /// Compares the semigroup against (Gamma1 x Gamma2) cap L degree by
  /// degree; returns the first box point missing from the semigroup, if any.
  CmVerdict cm_check(std::int64_t degree_bound) const;
  CmVerdict cm_check() const { return cm_check(default_cm_bound()); }

private:
  PlaneSemigroup(NumericalSemigroup gamma1, std::vector<std::int64_t> sequence);

  void ensure_degree(std::int64_t k) const;

  NumericalSemigroup gamma1_;
  NumericalSemigroup gamma2_;
  std::vector<std::int64_t> gamma2_raw_;
  std::int64_t top_;
  std::vector<PlanePoint> points_;
  std::vector<std::int64_t> summands_;             // {0, n_1, ..., n_e}
  mutable std::vector<std::vector<char>> graded_;  // graded_[k][a]: k-term sums
};

}  // namespace dercurve
