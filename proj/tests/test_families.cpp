#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "dercurve/families.hpp"
#include "oracles.hpp"

using namespace dercurve;
using i64 = std::int64_t;
using vi = std::vector<i64>;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::parse_error;
}

std::map<i64, DerGenerator> by_pf(const std::vector<DerGenerator>& gens) {
  std::map<i64, DerGenerator> out;
  for (const DerGenerator& g : gens)
    if (g.pf) out[*g.pf] = g;
  return out;
}

const CheckRow* row_named(const FamilyValidation& v, const std::string& name) {
  for (const CheckRow& row : v.rows)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("arslan instances") {
  ArslanInstance a2 = arslan(2);
  CHECK(a2.generators() == vi{6, 7, 9, 10});
  CHECK(arslan(3).generators() == vi{12, 13, 16, 17});
  CHECK(code_of([] { arslan(1); }) == errc::param_out_of_range);
}

TEST_CASE("backelin instances") {
  BackelinInstance b = backelin(2, 8);
  CHECK(b.s == 67);
  CHECK(b.generators() == vi{67, 70, 74, 75});
  CHECK(backelin(3, 11).generators() == vi{124, 127, 134, 135});
  CHECK(code_of([] { backelin(2, 7); }) == errc::param_out_of_range);
  CHECK(code_of([] { backelin(1, 9); }) == errc::param_out_of_range);
}

TEST_CASE("arslan pf formula") {
  CHECK(arslan_pf_formula(arslan(2)) == vi{3, 8, 11});
  CHECK(arslan_pf_formula(arslan(3)) == vi{20, 21, 27, 31, 35});
  for (i64 h = 2; h <= 8; ++h) {
    ArslanInstance a = arslan(h);
    vi formula = arslan_pf_formula(a);
    CHECK(static_cast<i64>(formula.size()) == 2 * h - 1);
    NumericalSemigroup s = a.semigroup();
    CHECK(formula == s.pseudo_frobenius());
    CHECK(formula.back() == s.frobenius());
  }
}

TEST_CASE("arslan apery formula") {
  CHECK(arslan_apery_formula(arslan(2)) == vi{0, 7, 9, 10, 14, 17});
  for (i64 h = 2; h <= 8; ++h) {
    ArslanInstance a = arslan(h);
    vi formula = arslan_apery_formula(a);
    CHECK(static_cast<i64>(formula.size()) == a.a1);
    CHECK(formula.front() == 0);
    vi engine = a.semigroup().apery(a.a1);
    std::sort(engine.begin(), engine.end());
    CHECK(formula == engine);
    vi brute = oracle::apery_by_scan(a.generators(), a.a1);
    std::sort(brute.begin(), brute.end());
    CHECK(formula == brute);
  }
}

TEST_CASE("arslan derivation formula matches the scan") {
  for (i64 h = 2; h <= 5; ++h) {
    ArslanInstance a = arslan(h);
    std::vector<DerGenerator> formula = arslan_der_formula(a);
    CHECK(static_cast<i64>(formula.size()) == 2 * h + 2);

    PlaneSemigroup plane{a.semigroup()};
    DerivationModule engine = derivation_module(plane);
    auto fmap = by_pf(formula);
    auto emap = by_pf(engine.generators);
    REQUIRE(fmap.size() == emap.size());
    for (const auto& [pf, gen] : fmap) {
      REQUIRE(emap.count(pf) == 1);
      CHECK(emap[pf] == gen);
      CHECK(gen.v_exp == pf + 1);  // every first component is a PF value + 1
    }
    // degenerate d1: c' = h on both sides
    bool saw = false;
    for (const DerGenerator& g : engine.generators)
      if (g.kind == DerKind::d1_degenerate) {
        CHECK(g.witness == h);
        CHECK(g.v_exp == 1 + h * a.a4);
        saw = true;
      }
    CHECK(saw);
  }
}

TEST_CASE("arslan derivation exponents at h = 2") {
  std::vector<DerGenerator> formula = arslan_der_formula(arslan(2));
  auto fmap = by_pf(formula);
  REQUIRE(fmap.size() == 3);
  CHECK(fmap[3].v_exp == 4);
  CHECK(fmap[3].u_exp == 7);
  CHECK(fmap[8].v_exp == 9);
  CHECK(fmap[8].u_exp == 2);
  CHECK(fmap[11].v_exp == 12);
  CHECK(fmap[11].u_exp == 9);
}

TEST_CASE("backelin pf formula") {
  BackelinInstance b = backelin(2, 8);
  vi formula = backelin_pf_formula(b);
  CHECK(formula == vi{213, 221, 601, 602, 604, 605, 607, 608});
  for (auto [n, r] : {std::pair<i64, i64>{2, 8}, {2, 9}, {2, 10}, {3, 11},
                      {3, 12}}) {
    BackelinInstance inst = backelin(n, r);
    vi pf = backelin_pf_formula(inst);
    CHECK(static_cast<i64>(pf.size()) == 3 * n + 2);
    NumericalSemigroup s = inst.semigroup();
    CHECK(pf == s.pseudo_frobenius());
    CHECK(pf.back() == s.frobenius());
  }
}

TEST_CASE("backelin derivation formula matches the scan") {
  for (auto [n, r] : {std::pair<i64, i64>{2, 8}, {2, 9}, {3, 12}}) {
    BackelinInstance b = backelin(n, r);
    std::vector<DerGenerator> formula = backelin_der_formula(b);
    CHECK(static_cast<i64>(formula.size()) == 3 * n + 5);

    PlaneSemigroup plane{b.semigroup()};
    DerivationModule engine = derivation_module(plane);
    auto fmap = by_pf(formula);
    auto emap = by_pf(engine.generators);
    REQUIRE(fmap.size() == emap.size());
    for (const auto& [pf, gen] : fmap) {
      REQUIRE(emap.count(pf) == 1);
      CHECK(emap[pf] == gen);
    }
    for (const DerGenerator& g : engine.generators)
      if (g.kind == DerKind::d1_degenerate) CHECK(g.witness == r + 1);
  }
}

TEST_CASE("backelin derivation details at n = 2, r = 8") {
  std::vector<DerGenerator> formula = backelin_der_formula(backelin(2, 8));
  REQUIRE(formula.size() == 11);
  CHECK(formula.front().kind == DerKind::d1_degenerate);
  CHECK(formula.front().v_exp == 676);  // 1 + 9*75
  auto fmap = by_pf(formula);
  CHECK(fmap[213].u_exp == 12);  // 6n^2 - 5n - 2
  CHECK(fmap[608].u_exp == 67);  // gamma = s
  CHECK(fmap[607].u_exp == 68);  // gamma = s + 1
}

TEST_CASE("binomial membership flags") {
  CHECK(binomial_in_ideal({6, 7, 9, 10}, {1, 0, 0, 1}, {0, 1, 1, 0}));
  CHECK(binomial_in_ideal({67, 70, 74, 75}, {0, 1, 3, 0}, {1, 0, 0, 3}));
  CHECK_FALSE(binomial_in_ideal({6, 7, 9, 10}, {1, 0, 0, 0}, {0, 1, 0, 0}));
  CHECK(code_of([] {
          binomial_in_ideal({6, 7}, {1, 0, 0}, {0, 1, 0});
        }) == errc::dimension_mismatch);

  BinomialFlags w = binomial_flags({6, 7, 9, 10}, {1, 0, 0, 1}, {0, 1, 1, 0});
  CHECK(w.in_ideal);
  CHECK(w.homogeneous);
  // q_1 at h = 2: x3 x4 - x1^2 x2, weights equal but degrees 2 vs 3
  BinomialFlags q = binomial_flags({6, 7, 9, 10}, {0, 0, 1, 1}, {2, 1, 0, 0});
  CHECK(q.in_ideal);
  CHECK_FALSE(q.homogeneous);
}

TEST_CASE("validate_family passes on the reference instances") {
  FamilyValidation a = validate_family(arslan(2));
  CHECK(a.all_pass());
  FamilyValidation b = validate_family(backelin(2, 8));
  CHECK(b.all_pass());
}

TEST_CASE("mu and beta0 are reported as two distinct numbers") {
  FamilyValidation v = validate_family(arslan(2));
  const CheckRow* row = row_named(v, "mu_vs_beta0");
  REQUIRE(row != nullptr);
  CHECK(row->informational);
  CHECK(row->detail == "mu = 6, beta0 = 5");
  const CheckRow* count = row_named(v, "ideal_minimal_count");
  REQUIRE(count != nullptr);
  CHECK(count->pass);  // beta0 = 1 + h1 + h2 = 5 even though mu = 6
}

TEST_CASE("binomial homogeneity pattern is surfaced, not asserted") {
  FamilyValidation a = validate_family(arslan(2));
  const CheckRow* hom = row_named(a, "defining_binomials_homogeneous");
  REQUIRE(hom != nullptr);
  CHECK(hom->informational);
  CHECK(hom->detail == "w:yes g1:yes g2:yes q1:no q2:no");

  FamilyValidation b = validate_family(backelin(2, 8));
  const CheckRow* bh = row_named(b, "defining_binomials_homogeneous");
  REQUIRE(bh != nullptr);
  CHECK(bh->detail ==
        "f1:yes f2_1:yes f2_2:yes f3_0:no f3_1:no f4_0:no f4_1:no f5:no "
        "f6:yes f7:yes");
}

TEST_CASE("validate_family honors explicit bounds") {
  // A starved scan shows up as a failed witness row, not an exception.
  SearchBounds tight{1, 1, 1};
  FamilyValidation v = validate_family(arslan(2), tight);
  CHECK_FALSE(v.all_pass());
}

}  // TEST_SUITE
