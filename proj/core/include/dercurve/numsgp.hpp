#pragma once

#include <cstdint>
#include <vector>

#include "dercurve/errors.hpp"

namespace dercurve {

/// All coefficient sums over the factorizations of one semigroup element.
struct LengthSet {
  std::int64_t element = 0;
  std::vector<std::int64_t> lengths;  // sorted ascending, nonempty for element != 0
};

/// Numerical semigroup <n1,...,ne>: the set of N-combinations of a minimal
/// generating set with gcd 1. Instances are immutable after construction and
/// cache the Apery set of the multiplicity, the gap set and the
/// pseudo-Frobenius set; every query is pure.
///
/// The semigroup N itself is <1>; by convention its Frobenius number is -1,
/// its pseudo-Frobenius set is {-1} and its type is 1.
class NumericalSemigroup {
public:
  /// Validates the generator list and precomputes the cached data.
  /// Throws Error(invalid_generators | duplicate_generator | gcd_not_one |
  /// not_minimal).
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::size_t embedding_dimension() const { return gens_.size(); }
  std::int64_t multiplicity() const { return gens_.front(); }
  std::int64_t max_generator() const { return gens_.back(); }

  std::int64_t frobenius() const { return frobenius_; }
  std::int64_t conductor() const { return frobenius_ + 1; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }

  const std::vector<std::int64_t>& pseudo_frobenius() const { return pf_; }
  std::int64_t type() const { return static_cast<std::int64_t>(pf_.size()); }
  bool is_natural_numbers() const { return frobenius_ == -1; }

  /// O(1): x is a member iff x >= 0 and x is at least the least member in
  /// its residue class mod the multiplicity.
  bool contains(std::int64_t x) const;

  /// Least member of each residue class mod m, indexed by residue 0..m-1.
  /// Throws Error(not_member) unless m is a positive member.
  std::vector<std::int64_t> apery(std::int64_t m) const;

  /// Throws Error(not_member) unless s is a nonzero member.
  LengthSet length_set(std::int64_t s) const;

  /// True iff every nonzero element of the Apery set of the multiplicity
  /// has a singleton length set.
  bool is_homogeneous() const;

private:
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> apery_min_;  // least member per residue mod gens_[0]
  std::int64_t frobenius_ = -1;
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> pf_;
};

/// Unique minimal generating set of the monoid generated by `gens`
/// (duplicates and redundant entries dropped; entries must be positive).
std::vector<std::int64_t> minimalize_generators(std::vector<std::int64_t> gens);

}  // namespace dercurve
