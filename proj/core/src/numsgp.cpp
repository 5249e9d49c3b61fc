#include "dercurve/numsgp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace dercurve {

namespace {

// True iff target is an N-combination of gens (all positive).
bool representable(std::int64_t target, const std::vector<std::int64_t>& gens) {
  if (target == 0) return true;
  std::vector<char> hit(static_cast<std::size_t>(target) + 1, 0);
  hit[0] = 1;
  for (std::int64_t x = 1; x <= target; ++x) {
    for (std::int64_t g : gens) {
      if (g <= x && hit[static_cast<std::size_t>(x - g)]) {
        hit[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return hit[static_cast<std::size_t>(target)] != 0;
}

// Least member of each residue class mod m, for the semigroup generated by
// gens, assuming m is one of the generators. Shortest-path over residues.
std::vector<std::int64_t> apery_of_generator(const std::vector<std::int64_t>& gens,
                                             std::int64_t m) {
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(mm, inf);
  dist[0] = 0;
  using Node = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (std::int64_t g : gens) {
      if (g % m == 0) continue;
      std::size_t nr = static_cast<std::size_t>((static_cast<std::int64_t>(r) + g) % m);
      if (d + g < dist[nr]) {
        dist[nr] = d + g;
        queue.push({dist[nr], nr});
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty())
    throw Error(errc::invalid_generators, "generator list must be nonempty");
  // validation and the Apery cache need O(max generator) memory
  constexpr std::int64_t kGeneratorCap = 10'000'000;
  for (std::int64_t g : gens_) {
    if (g < 1)
      throw Error(errc::invalid_generators,
                  "generators must be positive, got " + std::to_string(g));
    if (g > kGeneratorCap)
      throw Error(errc::invalid_generators,
                  "generator " + std::to_string(g) + " exceeds the supported "
                  "cap of " + std::to_string(kGeneratorCap));
  }
  std::sort(gens_.begin(), gens_.end());
  for (std::size_t i = 1; i < gens_.size(); ++i)
    if (gens_[i] == gens_[i - 1])
      throw Error(errc::duplicate_generator,
                  "duplicate generator " + std::to_string(gens_[i]));

  std::int64_t g = 0;
  for (std::int64_t x : gens_) g = std::gcd(g, x);
  if (g != 1)
    throw Error(errc::gcd_not_one,
                "gcd of generators is " + std::to_string(g) + ", must be 1");

  if (gens_.size() > 1) {
    std::vector<std::int64_t> others;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      others.clear();
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (j != i) others.push_back(gens_[j]);
      if (representable(gens_[i], others))
        throw Error(errc::not_minimal,
                    "generator " + std::to_string(gens_[i]) +
                        " (index " + std::to_string(i) +
                        ") is representable by the others");
    }
  }

  apery_min_ = apery_of_generator(gens_, gens_.front());
  frobenius_ = *std::max_element(apery_min_.begin(), apery_min_.end()) -
               gens_.front();

  for (std::size_t r = 0; r < apery_min_.size(); ++r)
    for (std::int64_t x = static_cast<std::int64_t>(r); x < apery_min_[r];
         x += gens_.front())
      if (x > 0) gaps_.push_back(x);
  std::sort(gaps_.begin(), gaps_.end());

  if (is_natural_numbers()) {
    pf_ = {-1};  // type convention: h = 1 for N
  } else {
    for (std::int64_t x : gaps_) {
      bool pf = true;
      for (std::int64_t gen : gens_)
        if (!contains(x + gen)) {
          pf = false;
          break;
        }
      if (pf) pf_.push_back(x);
    }
  }
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  return x >= apery_min_[static_cast<std::size_t>(x % gens_.front())];
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t m) const {
  if (m < 1 || !contains(m))
    throw Error(errc::not_member,
                std::to_string(m) + " is not a positive member");
  std::vector<std::int64_t> least(static_cast<std::size_t>(m), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < m; ++x) {
    if (!contains(x)) continue;
    std::size_t r = static_cast<std::size_t>(x % m);
    if (least[r] < 0) {
      least[r] = x;
      ++found;
    }
  }
  return least;
}

LengthSet NumericalSemigroup::length_set(std::int64_t s) const {
  if (s == 0 || !contains(s))
    throw Error(errc::not_member,
                std::to_string(s) + " is not a nonzero member");
  std::set<std::int64_t> lengths;
  // DFS over exponent vectors, largest generator first; the final generator
  // must divide the remainder exactly.
  auto descend = [&](auto&& self, std::size_t idx, std::int64_t remaining,
                     std::int64_t parts) -> void {
    if (idx == 0) {
      if (remaining % gens_[0] == 0) lengths.insert(parts + remaining / gens_[0]);
      return;
    }
    for (std::int64_t k = 0; k * gens_[idx] <= remaining; ++k)
      self(self, idx - 1, remaining - k * gens_[idx], parts + k);
  };
  descend(descend, gens_.size() - 1, s, 0);
  return LengthSet{s, {lengths.begin(), lengths.end()}};
}

bool NumericalSemigroup::is_homogeneous() const {
  for (std::int64_t a : apery_min_) {
    if (a == 0) continue;
    if (length_set(a).lengths.size() != 1) return false;
  }
  return true;
}

std::vector<std::int64_t> minimalize_generators(std::vector<std::int64_t> gens) {
  for (std::int64_t g : gens)
    if (g < 1)
      throw Error(errc::invalid_generators,
                  "generators must be positive, got " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::int64_t> kept;
  for (std::int64_t g : gens)
    if (kept.empty() || !representable(g, kept)) kept.push_back(g);
  return kept;
}

}  // namespace dercurve
