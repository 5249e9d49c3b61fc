#include "dercurve/dermod.hpp"

#include <algorithm>
#include <string>

namespace dercurve {

const char* der_kind_name(DerKind kind) {
  switch (kind) {
    case DerKind::euler_u: return "euler_u";
    case DerKind::euler_v: return "euler_v";
    case DerKind::d1: return "d1";
    case DerKind::d1_degenerate: return "d1_degenerate";
    case DerKind::d2: return "d2";
    case DerKind::d2_degenerate: return "d2_degenerate";
  }
  return "?";
}

const char* partial_name(Partial partial) {
  return partial == Partial::u ? "du" : "dv";
}

SearchExhaustedError::SearchExhaustedError(std::int64_t bound)
    : Error(errc::search_exhausted,
            "no witness below bound " + std::to_string(bound) +
                "; input may not be Cohen-Macaulay or the bound is too small"),
      bound_(bound) {}

NotCohenMacaulayError::NotCohenMacaulayError(PlanePoint counterexample,
                                             std::int64_t bound)
    : Error(errc::not_cohen_macaulay,
            "box point (" + std::to_string(counterexample.a) + ", " +
                std::to_string(counterexample.b) +
                ") is outside the semigroup (degree bound " +
                std::to_string(bound) + ")"),
      counterexample_(counterexample),
      bound_(bound) {}

SearchBounds default_bounds(const PlaneSemigroup& p) {
  return SearchBounds{
      p.default_cm_bound(),
      p.gamma1().conductor() + p.gamma2().conductor() + 4 * p.top(),
      4 * p.top(),
  };
}

namespace {

// Least positive integer congruent to -f mod n.
std::int64_t first_candidate(std::int64_t f, std::int64_t n) {
  std::int64_t r = (-f) % n;
  if (r < 0) r += n;
  return r == 0 ? n : r;
}

}  // namespace

std::vector<DerGenerator> compute_d1(const PlaneSemigroup& p,
                                     std::int64_t search_bound) {
  const std::int64_t ne = p.top();
  const auto& points = p.generator_points();
  const std::size_t e = points.size() - 1;
  std::vector<DerGenerator> out;

  if (!p.gamma2().is_natural_numbers()) {
    for (std::int64_t f : p.gamma2().pseudo_frobenius()) {
      bool found = false;
      for (std::int64_t beta = first_candidate(f, ne); beta <= search_bound;
           beta += ne) {
        if (!p.gamma1().contains(beta)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < e && ok; ++i)  // n in {0, n_1, ..., n_{e-1}}
          ok = p.contains(PlanePoint{beta, f} + points[i]);
        if (ok) {
          out.push_back({DerKind::d1, beta, f + 1, Partial::u, f, beta});
          found = true;
          break;
        }
      }
      if (!found) throw SearchExhaustedError(search_bound);
    }
  } else {
    bool found = false;
    for (std::int64_t c = 0; c <= search_bound; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < e && ok; ++i)
        ok = p.contains(PlanePoint{1 + c * ne, -1} + points[i]);
      if (ok) {
        out.push_back({DerKind::d1_degenerate, 1 + c * ne, 0, Partial::u,
                       std::nullopt, c});
        found = true;
        break;
      }
    }
    if (!found) throw SearchExhaustedError(search_bound);
  }
  return out;
}

std::vector<DerGenerator> compute_d2(const PlaneSemigroup& p,
                                     std::int64_t search_bound) {
  const std::int64_t ne = p.top();
  const auto& points = p.generator_points();
  const std::size_t e = points.size() - 1;
  std::vector<DerGenerator> out;

  if (!p.gamma1().is_natural_numbers()) {
    for (std::int64_t f : p.gamma1().pseudo_frobenius()) {
      bool found = false;
      for (std::int64_t gamma = first_candidate(f, ne); gamma <= search_bound;
           gamma += ne) {
        if (!p.gamma2().contains(gamma)) continue;
        bool ok = true;
        for (std::size_t i = 1; i <= e && ok; ++i)  // n in {n_1, ..., n_e}
          ok = p.contains(PlanePoint{f, gamma} + points[i]);
        if (ok) {
          out.push_back({DerKind::d2, f + 1, gamma, Partial::v, f, gamma});
          found = true;
          break;
        }
      }
      if (!found) throw SearchExhaustedError(search_bound);
    }
  } else {
    bool found = false;
    for (std::int64_t c = 0; c <= search_bound; ++c) {
      bool ok = true;
      for (std::size_t i = 1; i + 1 <= e && ok; ++i)  // n in {n_1, ..., n_{e-1}}
        ok = p.contains(PlanePoint{-1, 1 + c * ne} + points[i]);
      if (ok) {
        out.push_back({DerKind::d2_degenerate, 0, 1 + c * ne, Partial::v,
                       std::nullopt, c});
        found = true;
        break;
      }
    }
    if (!found) throw SearchExhaustedError(search_bound);
  }
  return out;
}

std::vector<PlanePoint> to_ideal(const std::vector<DerGenerator>& generators,
                                 const PlaneSemigroup& p) {
  const std::int64_t ne = p.top();
  // Ideal table order: u^{n_e}, shifted D1 monomials, v^{n_e}, shifted D2.
  std::vector<PlanePoint> u_corner, d1_images, v_corner, d2_images;
  for (const DerGenerator& g : generators) {
    switch (g.kind) {
      case DerKind::euler_u:
        u_corner.push_back({0, ne});
        break;
      case DerKind::euler_v:
        v_corner.push_back({ne, 0});
        break;
      case DerKind::d1:
        d1_images.push_back({g.v_exp, g.u_exp - 1 + ne});
        break;
      case DerKind::d1_degenerate:
        d1_images.push_back({g.v_exp, ne - 1});
        break;
      case DerKind::d2:
        d2_images.push_back({g.v_exp - 1 + ne, g.u_exp});
        break;
      case DerKind::d2_degenerate:
        d2_images.push_back({ne - 1, g.u_exp});
        break;
    }
  }
  std::vector<PlanePoint> ideal;
  for (auto* part : {&u_corner, &d1_images, &v_corner, &d2_images})
    ideal.insert(ideal.end(), part->begin(), part->end());
  return ideal;
}

bool annihilation_check(const std::vector<PlanePoint>& ideal_points,
                        const PlaneSemigroup& p) {
  const std::int64_t ne = p.top();
  const PlanePoint u_corner{0, ne};
  const PlanePoint v_corner{ne, 0};
  for (const PlanePoint& g : ideal_points)
    if (!p.contains(g))
      throw Error(errc::point_outside_semigroup,
                  "ideal point (" + std::to_string(g.a) + ", " +
                      std::to_string(g.b) + ") is not in the semigroup");

  const auto& points = p.generator_points();
  for (const PlanePoint& g : ideal_points) {
    if (g == u_corner || g == v_corner) continue;
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {  // mixed generators
      const PlanePoint q = g + points[i];
      if (!p.contains(q - v_corner) && !p.contains(q - u_corner)) return false;
    }
  }
  return true;
}

std::vector<PlanePoint> minimal_generators(std::vector<PlanePoint> points,
                                           const PlaneSemigroup& p) {
  std::vector<PlanePoint> distinct;
  for (const PlanePoint& q : points)
    if (std::find(distinct.begin(), distinct.end(), q) == distinct.end())
      distinct.push_back(q);

  std::vector<PlanePoint> kept;
  for (const PlanePoint& g : distinct) {
    bool redundant = false;
    for (const PlanePoint& other : distinct) {
      if (other == g) continue;
      if (p.contains(g - other)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

DerivationModule derivation_module(const PlaneSemigroup& p,
                                   const SearchBounds& bounds) {
  CmVerdict verdict = p.cm_check(bounds.cm_degree);
  if (!verdict.equal_up_to_bound())
    throw NotCohenMacaulayError(*verdict.counterexample, verdict.bound);

  const std::int64_t d1_bound = p.gamma2().is_natural_numbers()
                                    ? bounds.wrap_iterations
                                    : bounds.scan_limit;
  const std::int64_t d2_bound = p.gamma1().is_natural_numbers()
                                    ? bounds.wrap_iterations
                                    : bounds.scan_limit;
  DerivationModule m;
  std::vector<DerGenerator> d1 = compute_d1(p, d1_bound);
  std::vector<DerGenerator> d2 = compute_d2(p, d2_bound);
  m.generators = std::move(d1);
  m.generators.push_back({DerKind::euler_u, 0, 1, Partial::u});
  m.generators.insert(m.generators.end(), d2.begin(), d2.end());
  m.generators.push_back({DerKind::euler_v, 1, 0, Partial::v});
  m.mu = static_cast<std::int64_t>(m.generators.size());
  m.ideal = to_ideal(m.generators, p);
  m.minimal_ideal = minimal_generators(m.ideal, p);
  return m;
}

DerivationModule derivation_module(const PlaneSemigroup& p) {
  return derivation_module(p, default_bounds(p));
}

}  // namespace dercurve
