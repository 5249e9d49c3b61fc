#include "dercurve/plane.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dercurve {

namespace {

std::vector<std::int64_t> raw_gamma2(const std::vector<std::int64_t>& seq) {
  std::vector<std::int64_t> raw;
  const std::int64_t top = seq.back();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) raw.push_back(top - seq[i]);
  raw.push_back(top);
  return raw;
}

NumericalSemigroup ensure_curve(NumericalSemigroup g) {
  if (g.embedding_dimension() < 2)
    throw Error(errc::param_out_of_range,
                "homogenization needs at least two minimal generators");
  return g;
}

// Cells the graded table would hold through degree k; bails out before an
// absurd input exhausts memory.
constexpr std::int64_t kCellCap = 1'500'000'000;

}  // namespace

PlaneSemigroup::PlaneSemigroup(NumericalSemigroup gamma1)
    : PlaneSemigroup(ensure_curve(std::move(gamma1)), {}) {}

PlaneSemigroup::PlaneSemigroup(NumericalSemigroup gamma1,
                               std::vector<std::int64_t> sequence)
    : gamma1_(std::move(gamma1)),
      gamma2_(minimalize_generators(
          raw_gamma2(sequence.empty() ? gamma1_.generators() : sequence))),
      gamma2_raw_(
          raw_gamma2(sequence.empty() ? gamma1_.generators() : sequence)),
      top_(sequence.empty() ? gamma1_.max_generator() : sequence.back()) {
  const std::vector<std::int64_t>& seq =
      sequence.empty() ? gamma1_.generators() : sequence;
  summands_.push_back(0);
  points_.push_back({0, top_});
  for (std::int64_t n : seq) {
    summands_.push_back(n);
    points_.push_back({n, top_ - n});
  }
  graded_.push_back({1});  // degree 0: only the origin
}

PlaneSemigroup PlaneSemigroup::from_sequence(std::vector<std::int64_t> sequence) {
  if (sequence.empty())
    throw Error(errc::invalid_generators, "sequence must be nonempty");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 1)
      throw Error(errc::invalid_generators, "sequence entries must be positive");
    if (i > 0 && sequence[i] <= sequence[i - 1])
      throw Error(errc::invalid_generators,
                  "sequence must be strictly increasing");
  }
  std::int64_t g = 0;
  for (std::int64_t x : sequence) g = std::gcd(g, x);
  if (g != 1) throw Error(errc::gcd_not_one, "sequence gcd must be 1");
  NumericalSemigroup gamma1(minimalize_generators(sequence));
  return PlaneSemigroup(std::move(gamma1), std::move(sequence));
}

bool PlaneSemigroup::in_lattice(PlanePoint p) const {
  std::int64_t m = (p.a + p.b) % top_;
  return m == 0;
}

void PlaneSemigroup::ensure_degree(std::int64_t k) const {
  if (k * (k + 1) / 2 * top_ > kCellCap)
    throw Error(errc::param_out_of_range,
                "membership table through degree " + std::to_string(k) +
                    " exceeds the memory cap");
  while (static_cast<std::int64_t>(graded_.size()) <= k) {
    const std::int64_t j = static_cast<std::int64_t>(graded_.size());
    const std::vector<char>& prev = graded_.back();
    std::vector<char> row(static_cast<std::size_t>(j * top_) + 1, 0);
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(row.size()); ++a) {
      for (std::int64_t g : summands_) {
        const std::int64_t rest = a - g;
        if (rest < 0) break;  // summands ascend after the leading 0
        if (rest < static_cast<std::int64_t>(prev.size()) &&
            prev[static_cast<std::size_t>(rest)]) {
          row[static_cast<std::size_t>(a)] = 1;
          break;
        }
      }
    }
    graded_.push_back(std::move(row));
  }
}

bool PlaneSemigroup::contains(PlanePoint p) const {
  if (p.a < 0 || p.b < 0) return false;
  const std::int64_t total = p.a + p.b;
  if (total % top_ != 0) return false;
  const std::int64_t k = total / top_;
  ensure_degree(k);
  return graded_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p.a)] != 0;
}

bool PlaneSemigroup::box_member(PlanePoint p) const {
  return gamma1_.contains(p.a) && gamma2_.contains(p.b) && in_lattice(p);
}

std::int64_t PlaneSemigroup::default_cm_bound() const {
  const std::int64_t f = gamma1_.frobenius() + gamma2_.frobenius();
  const std::int64_t ceil_part = f <= 0 ? 0 : (f + top_ - 1) / top_;
  return ceil_part + 2;
}

CmVerdict PlaneSemigroup::cm_check(std::int64_t degree_bound) const {
  if (degree_bound < 1)
    throw Error(errc::param_out_of_range, "degree bound must be positive");
  for (std::int64_t k = 1; k <= degree_bound; ++k) {
    const std::int64_t total = k * top_;
    for (std::int64_t a = 0; a <= total; ++a) {
      PlanePoint p{a, total - a};
      if (box_member(p) && !contains(p)) return CmVerdict{degree_bound, p};
    }
  }
  return CmVerdict{degree_bound, std::nullopt};
}

}  // namespace dercurve
