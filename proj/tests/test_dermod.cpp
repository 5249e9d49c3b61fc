#include <doctest.h>

#include <functional>

#include "dercurve/dermod.hpp"
#include "dercurve/families.hpp"

using namespace dercurve;
using i64 = std::int64_t;
using vi = std::vector<i64>;

namespace {

PlaneSemigroup plane_of(const vi& gens) {
  return PlaneSemigroup(NumericalSemigroup(gens));
}

// All scan conditions of the generator theorem for one candidate.
bool d1_conditions(const PlaneSemigroup& p, i64 pf, i64 beta) {
  if (!p.gamma1().contains(beta)) return false;
  const auto& pts = p.generator_points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (!p.contains(PlanePoint{beta, pf} + pts[i])) return false;
  return true;
}

bool d2_conditions(const PlaneSemigroup& p, i64 pf, i64 gamma) {
  if (!p.gamma2().contains(gamma)) return false;
  const auto& pts = p.generator_points();
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!p.contains(PlanePoint{pf, gamma} + pts[i])) return false;
  return true;
}

}  // namespace

TEST_SUITE("dermod") {

TEST_CASE("d1 degenerates when the second projection is N") {
  PlaneSemigroup arslan2 = plane_of({6, 7, 9, 10});
  auto d1 = compute_d1(arslan2, default_bounds(arslan2).wrap_iterations);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].kind == DerKind::d1_degenerate);
  CHECK(d1[0].v_exp == 21);  // 1 + 2*10
  CHECK(d1[0].u_exp == 0);
  CHECK(d1[0].partial == Partial::u);
  CHECK(d1[0].witness == 2);

  PlaneSemigroup backelin28 = plane_of({67, 70, 74, 75});
  auto b1 = compute_d1(backelin28, default_bounds(backelin28).wrap_iterations);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].v_exp == 676);  // 1 + 9*75
  CHECK(b1[0].witness == 9);
}

TEST_CASE("d1 scan over a proper second projection") {
  PlaneSemigroup p = plane_of({5, 6, 9});
  REQUIRE(p.gamma2().pseudo_frobenius() == vi{5});
  auto d1 = compute_d1(p, default_bounds(p).scan_limit);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].kind == DerKind::d1);
  CHECK(d1[0].v_exp == 22);  // beta
  CHECK(d1[0].u_exp == 6);   // alpha = pf + 1
  CHECK(d1[0].partial == Partial::u);
  CHECK(d1[0].pf == 5);
  CHECK(d1[0].witness == 22);
}

TEST_CASE("d2 scan witnesses") {
  PlaneSemigroup arslan2 = plane_of({6, 7, 9, 10});
  auto d2 = compute_d2(arslan2, default_bounds(arslan2).scan_limit);
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].v_exp == 4);
  CHECK(d2[0].u_exp == 7);
  CHECK(d2[1].v_exp == 9);
  CHECK(d2[1].u_exp == 2);
  CHECK(d2[2].v_exp == 12);
  CHECK(d2[2].u_exp == 9);
  for (const DerGenerator& g : d2) CHECK(g.partial == Partial::v);

  PlaneSemigroup p569 = plane_of({5, 6, 9});
  auto d2b = compute_d2(p569, default_bounds(p569).scan_limit);
  REQUIRE(d2b.size() == 1);
  CHECK(d2b[0].v_exp == 14);  // delta = 13 + 1
  CHECK(d2b[0].u_exp == 14);  // gamma, scanned along 5 mod 9
  CHECK(d2b[0].pf == 13);
}

TEST_CASE("d2 degenerates when the first projection is N") {
  // Synthetic shape: homogenize the non-minimal sequence (1, 5).
  PlaneSemigroup p = PlaneSemigroup::from_sequence({1, 5});
  auto d2 = compute_d2(p, default_bounds(p).wrap_iterations);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].kind == DerKind::d2_degenerate);
  CHECK(d2[0].partial == Partial::v);
  CHECK(d2[0].v_exp == 0);
  CHECK(d2[0].u_exp == 1 + *d2[0].witness * 5);
}

TEST_CASE("witness minimality: smaller candidates of the residue fail") {
  PlaneSemigroup p = plane_of({5, 6, 9});
  for (const DerGenerator& g : compute_d1(p, default_bounds(p).scan_limit))
    for (i64 beta = *g.witness - p.top(); beta > 0; beta -= p.top())
      CHECK_FALSE(d1_conditions(p, *g.pf, beta));
  for (const DerGenerator& g : compute_d2(p, default_bounds(p).scan_limit))
    for (i64 gamma = *g.witness - p.top(); gamma > 0; gamma -= p.top())
      CHECK_FALSE(d2_conditions(p, *g.pf, gamma));

  PlaneSemigroup arslan3 = plane_of({12, 13, 16, 17});
  for (const DerGenerator& g :
       compute_d2(arslan3, default_bounds(arslan3).scan_limit)) {
    CHECK(d2_conditions(arslan3, *g.pf, *g.witness));
    for (i64 gamma = *g.witness - arslan3.top(); gamma > 0;
         gamma -= arslan3.top())
      CHECK_FALSE(d2_conditions(arslan3, *g.pf, gamma));
  }
}

TEST_CASE("scan exhaustion is reported with the bound") {
  PlaneSemigroup p = plane_of({5, 6, 9});
  CHECK_THROWS_AS(compute_d1(p, 10), SearchExhaustedError);  // beta = 22
  try {
    compute_d1(p, 10);
  } catch (const SearchExhaustedError& e) {
    CHECK(e.bound() == 10);
    CHECK(e.code() == errc::search_exhausted);
  }
}

TEST_CASE("derivation_module assembles counts and ideal data") {
  DerivationModule arslan2 = derivation_module(plane_of({6, 7, 9, 10}));
  CHECK(arslan2.mu == 6);
  CHECK(arslan2.generators.size() == 6);
  CHECK(arslan2.minimal_ideal.size() == 5);

  DerivationModule b28 = derivation_module(plane_of({67, 70, 74, 75}));
  CHECK(b28.mu == 11);

  DerivationModule m569 = derivation_module(plane_of({5, 6, 9}));
  CHECK(m569.mu == 4);
  CHECK(m569.minimal_ideal.size() == 3);
}

TEST_CASE("mu counts both scans plus the Euler pair") {
  for (const vi& gens : {vi{6, 7, 9, 10}, vi{5, 6, 9}, vi{12, 13, 16, 17}}) {
    PlaneSemigroup p = plane_of(gens);
    DerivationModule m = derivation_module(p);
    std::size_t d1 = 0, d2 = 0, euler = 0;
    for (const DerGenerator& g : m.generators) {
      if (g.kind == DerKind::d1 || g.kind == DerKind::d1_degenerate) ++d1;
      if (g.kind == DerKind::d2 || g.kind == DerKind::d2_degenerate) ++d2;
      if (g.kind == DerKind::euler_u || g.kind == DerKind::euler_v) ++euler;
    }
    CHECK(euler == 2);
    CHECK(m.mu == static_cast<i64>(d1 + d2 + 2));
  }
}

TEST_CASE("non-cm input is rejected with its counterexample") {
  PlaneSemigroup bad = plane_of({4, 7, 9});
  CHECK_THROWS_AS(derivation_module(bad), NotCohenMacaulayError);
  try {
    derivation_module(bad);
  } catch (const NotCohenMacaulayError& e) {
    CHECK(e.counterexample() == PlanePoint{12, 6});
    CHECK(e.code() == errc::not_cohen_macaulay);
  }
}

TEST_CASE("to_ideal applies the shift table") {
  PlaneSemigroup arslan2 = plane_of({6, 7, 9, 10});
  DerivationModule m = derivation_module(arslan2);
  // The degenerate d1 image coincides with the w_{h-1} image at h = 2.
  CHECK(m.ideal == std::vector<PlanePoint>{{0, 10},
                                           {21, 9},
                                           {10, 0},
                                           {13, 7},
                                           {18, 2},
                                           {21, 9}});

  PlaneSemigroup p569 = plane_of({5, 6, 9});
  DerivationModule m569 = derivation_module(p569);
  CHECK(m569.ideal ==
        std::vector<PlanePoint>{{0, 9}, {22, 14}, {9, 0}, {22, 14}});

  std::vector<DerGenerator> euler_only{{DerKind::euler_u, 0, 1, Partial::u}};
  CHECK(to_ideal(euler_only, arslan2) == std::vector<PlanePoint>{{0, 10}});
}

TEST_CASE("every ideal point is a member") {
  for (const vi& gens : {vi{6, 7, 9, 10}, vi{5, 6, 9}, vi{67, 70, 74, 75}}) {
    PlaneSemigroup p = plane_of(gens);
    for (PlanePoint q : derivation_module(p).ideal) CHECK(p.contains(q));
  }
}

TEST_CASE("condition points land in the semigroup") {
  PlaneSemigroup p = plane_of({6, 7, 9, 10});
  DerivationModule m = derivation_module(p);
  const auto& pts = p.generator_points();
  for (const DerGenerator& g : m.generators) {
    if (g.kind == DerKind::d2) {
      for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(p.contains(PlanePoint{*g.pf, g.u_exp} + pts[i]));
    } else if (g.kind == DerKind::d1_degenerate) {
      for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        CHECK(p.contains(PlanePoint{g.v_exp, -1} + pts[i]));
    }
  }
}

TEST_CASE("annihilation holds on cm instances") {
  for (const vi& gens : {vi{6, 7, 9, 10}, vi{5, 6, 9}, vi{67, 70, 74, 75}}) {
    PlaneSemigroup p = plane_of(gens);
    DerivationModule m = derivation_module(p);
    CHECK(annihilation_check(m.ideal, p));
  }
}

TEST_CASE("annihilation rejects foreign points and skips corners") {
  PlaneSemigroup p = plane_of({6, 7, 9, 10});
  CHECK_THROWS_AS(annihilation_check({{3, 7}}, p), Error);
  try {
    annihilation_check({{3, 7}}, p);
  } catch (const Error& e) {
    CHECK(e.code() == errc::point_outside_semigroup);
  }
  // corners alone are vacuously annihilated
  CHECK(annihilation_check({{0, 10}, {10, 0}}, p));
}

TEST_CASE("minimal_generators drops divisible and duplicate points") {
  PlaneSemigroup p = plane_of({6, 7, 9, 10});
  DerivationModule m = derivation_module(p);
  CHECK(minimal_generators(m.ideal, p) ==
        std::vector<PlanePoint>{{0, 10}, {21, 9}, {10, 0}, {13, 7}, {18, 2}});
  CHECK(minimal_generators({{0, 10}}, p) == std::vector<PlanePoint>{{0, 10}});
  CHECK(minimal_generators({{0, 10}, {0, 20}}, p) ==
        std::vector<PlanePoint>{{0, 10}});
}

}  // TEST_SUITE
