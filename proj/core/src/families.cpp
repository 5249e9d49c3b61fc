#include "dercurve/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace dercurve {

ArslanInstance arslan(std::int64_t h) {
  if (h < 2)
    throw Error(errc::param_out_of_range, "arslan family requires h >= 2");
  ArslanInstance a;
  a.h = h;
  a.a1 = h * (h + 1);
  a.a2 = h * (h + 1) + 1;
  a.a3 = (h + 1) * (h + 1);
  a.a4 = (h + 1) * (h + 1) + 1;
  return a;
}

BackelinInstance backelin(std::int64_t n, std::int64_t r) {
  if (n < 2)
    throw Error(errc::param_out_of_range, "backelin family requires n >= 2");
  if (r < 3 * n + 2)
    throw Error(errc::param_out_of_range,
                "backelin family requires r >= 3n+2 = " +
                    std::to_string(3 * n + 2));
  BackelinInstance b;
  b.n = n;
  b.r = r;
  b.s = r * (3 * n + 2) + 3;
  b.m1 = b.s;
  b.m2 = b.s + 3;
  b.m3 = b.s + 3 * n + 1;
  b.m4 = b.s + 3 * n + 2;
  return b;
}

std::vector<std::int64_t> arslan_pf_formula(const ArslanInstance& a) {
  std::set<std::int64_t> pf;
  for (std::int64_t i = 1; i <= a.h - 1; ++i)
    pf.insert((a.h - i) * a.a3 + (i - 1) * a.a4 - a.a1);
  for (std::int64_t j = 0; j <= a.h - 1; ++j)
    pf.insert((a.h - j) * a.a2 + j * a.a4 - a.a1);
  return {pf.begin(), pf.end()};
}

std::vector<std::int64_t> arslan_apery_formula(const ArslanInstance& a) {
  std::set<std::int64_t> ap;
  for (std::int64_t i = 0; i <= a.h; ++i) ap.insert(i * a.a2);
  for (std::int64_t j = 1; j <= a.h - 1; ++j) ap.insert(j * a.a3);
  for (std::int64_t l = 1; l <= a.h - 1; ++l) ap.insert(l * a.a4);
  for (std::int64_t g = 1; g <= a.h; ++g)
    for (std::int64_t v = 1; g + v <= a.h; ++v)
      ap.insert(g * a.a2 + v * a.a4);
  for (std::int64_t al = 1; al <= a.h - 1; ++al)
    for (std::int64_t be = 1; al + be <= a.h - 1; ++be)
      ap.insert(al * a.a3 + be * a.a4);
  return {ap.begin(), ap.end()};
}

std::vector<DerGenerator> arslan_der_formula(const ArslanInstance& a) {
  const std::int64_t h = a.h;
  std::vector<DerGenerator> out;
  // Degenerate d1 generator; direction d/du per the general theorem.
  out.push_back({DerKind::d1_degenerate, 1 + h * a.a4, 0, Partial::u,
                 std::nullopt, h});
  out.push_back({DerKind::euler_u, 0, 1, Partial::u});
  for (std::int64_t i = 1; i <= h - 1; ++i) {
    const std::int64_t t = (h - i) * a.a3 + (i - 1) * a.a4 - a.a1;
    out.push_back({DerKind::d2, t + 1, h * (h + 1) + h - i, Partial::v, t,
                   h * (h + 1) + h - i});
  }
  for (std::int64_t j = 0; j <= h - 2; ++j) {
    const std::int64_t y = (h - j) * a.a2 + j * a.a4 - a.a1;
    const std::int64_t gamma = (h + 1) * (h - j - 1) - 1;
    out.push_back({DerKind::d2, y + 1, gamma, Partial::v, y, gamma});
  }
  const std::int64_t w = a.a2 + (h - 1) * a.a4 - a.a1;
  out.push_back({DerKind::d2, w + 1, (h + 1) * (h + 1), Partial::v, w,
                 (h + 1) * (h + 1)});
  out.push_back({DerKind::euler_v, 1, 0, Partial::v});
  return out;
}

std::vector<std::int64_t> backelin_pf_formula(const BackelinInstance& b) {
  std::set<std::int64_t> pf;
  for (std::int64_t l = 2; l <= b.n; ++l)
    pf.insert((b.n - l) * b.m1 + (3 * l - 2) * b.m3 - b.m4);
  for (std::int64_t m = 1; m <= b.n; ++m)
    pf.insert((b.r - (b.n + m) + 3) * b.m1 + (b.n + m - 1) * b.m2 - b.m4);
  for (std::int64_t m = 1; m <= b.n; ++m)
    pf.insert((b.r - m + 2) * b.m1 + (m - 1) * b.m2 + b.m3 - b.m4);
  pf.insert((b.r - b.n + 1) * b.m1 + b.n * b.m2 + b.m3 - b.m4);
  pf.insert((b.n - 2) * b.m1 + b.n * b.m2 + 2 * b.m3 - b.m4);
  pf.insert((b.r - 2 * b.n + 2) * b.m1 + 2 * b.n * b.m2 - b.m4);
  return {pf.begin(), pf.end()};
}

std::vector<DerGenerator> backelin_der_formula(const BackelinInstance& b) {
  const std::int64_t n = b.n, r = b.r, s = b.s;
  std::vector<DerGenerator> out;
  out.push_back({DerKind::d1_degenerate, 1 + (r + 1) * b.m4, 0, Partial::u,
                 std::nullopt, r + 1});
  out.push_back({DerKind::euler_u, 0, 1, Partial::u});
  for (std::int64_t l = 2; l <= n; ++l) {
    const std::int64_t p = (n - l) * b.m1 + (3 * l - 2) * b.m3 - b.m4;
    const std::int64_t gamma = 3 * n * n + 2 * n - 3 * l * n + l - 2;
    out.push_back({DerKind::d2, p + 1, gamma, Partial::v, p, gamma});
  }
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t q = (r - (n + m) + 3) * b.m1 + (n + m - 1) * b.m2 - b.m4;
    const std::int64_t gamma = s + 3 * n + 1 - 3 * (m - 1);
    out.push_back({DerKind::d2, q + 1, gamma, Partial::v, q, gamma});
  }
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t z = (r - m + 2) * b.m1 + (m - 1) * b.m2 + b.m3 - b.m4;
    const std::int64_t gamma = s + 3 * n - 3 * (m - 1);
    out.push_back({DerKind::d2, z + 1, gamma, Partial::v, z, gamma});
  }
  const std::int64_t big_p = (r - n + 1) * b.m1 + n * b.m2 + b.m3 - b.m4;
  out.push_back({DerKind::d2, big_p + 1, s, Partial::v, big_p, s});
  const std::int64_t big_q = (n - 2) * b.m1 + n * b.m2 + 2 * b.m3 - b.m4;
  const std::int64_t gamma_q = 6 * n * n - 5 * n - 2;
  out.push_back({DerKind::d2, big_q + 1, gamma_q, Partial::v, big_q, gamma_q});
  const std::int64_t big_r = (r - 2 * n + 2) * b.m1 + 2 * n * b.m2 - b.m4;
  out.push_back({DerKind::d2, big_r + 1, s + 1, Partial::v, big_r, s + 1});
  out.push_back({DerKind::euler_v, 1, 0, Partial::v});
  return out;
}

BinomialFlags binomial_flags(const std::vector<std::int64_t>& weights,
                             const std::vector<std::int64_t>& exp_a,
                             const std::vector<std::int64_t>& exp_b) {
  if (exp_a.size() != weights.size() || exp_b.size() != weights.size())
    throw Error(errc::dimension_mismatch,
                "exponent vectors must match the weight count");
  std::int64_t wa = 0, wb = 0, da = 0, db = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    wa += exp_a[i] * weights[i];
    wb += exp_b[i] * weights[i];
    da += exp_a[i];
    db += exp_b[i];
  }
  return BinomialFlags{wa == wb, da == db};
}

bool binomial_in_ideal(const std::vector<std::int64_t>& weights,
                       const std::vector<std::int64_t>& exp_a,
                       const std::vector<std::int64_t>& exp_b) {
  return binomial_flags(weights, exp_a, exp_b).in_ideal;
}

bool FamilyValidation::all_pass() const {
  for (const CheckRow& row : rows)
    if (!row.informational && !row.pass) return false;
  return true;
}

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// Per-pf map of the searched data; degenerate generators keyed separately.
struct WitnessTable {
  std::map<std::int64_t, DerGenerator> by_pf;
  std::optional<DerGenerator> d1_degenerate;
};

WitnessTable table_of(const std::vector<DerGenerator>& gens) {
  WitnessTable t;
  for (const DerGenerator& g : gens) {
    if (g.kind == DerKind::d1_degenerate) t.d1_degenerate = g;
    if ((g.kind == DerKind::d1 || g.kind == DerKind::d2) && g.pf)
      t.by_pf[*g.pf] = g;
  }
  return t;
}

bool same_generator(const DerGenerator& a, const DerGenerator& b) {
  return a.kind == b.kind && a.v_exp == b.v_exp && a.u_exp == b.u_exp &&
         a.partial == b.partial && a.witness == b.witness;
}

struct NamedBinomial {
  std::string name;
  std::vector<std::int64_t> exp_a;
  std::vector<std::int64_t> exp_b;
};

std::vector<NamedBinomial> arslan_binomials(std::int64_t h) {
  std::vector<NamedBinomial> out;
  out.push_back({"w", {1, 0, 0, 1}, {0, 1, 1, 0}});
  for (std::int64_t i = 1; i <= h; ++i)
    out.push_back({"g" + std::to_string(i),
                   {h - i, 0, i + 1, 0},
                   {0, h - i + 1, 0, i}});
  for (std::int64_t j = 1; j <= h; ++j)
    out.push_back({"q" + std::to_string(j),
                   {0, 0, j, h - j},
                   {j + 1, h - j, 0, 0}});
  return out;
}

std::vector<NamedBinomial> backelin_binomials(std::int64_t n, std::int64_t r) {
  std::vector<NamedBinomial> out;
  out.push_back({"f1", {0, 1, 3, 0}, {1, 0, 0, 3}});
  for (std::int64_t i = 1; i <= n; ++i)
    out.push_back({"f2_" + std::to_string(i),
                   {n - i, 0, 3 * i - 1, 0},
                   {0, n - i + 1, 0, 3 * i - 2}});
  for (std::int64_t j = 0; j <= n - 1; ++j)
    out.push_back({"f3_" + std::to_string(j),
                   {r - n + 3 + j, n - 1 - j, 0, 0},
                   {0, 0, 2 + 3 * j, r - 1 - 3 * j}});
  for (std::int64_t j = 0; j <= n - 1; ++j)
    out.push_back({"f4_" + std::to_string(j),
                   {r - 2 * n + 3 + j, 2 * n - j, 0, 0},
                   {0, 0, 3 * j + 1, r + 1 - 3 * j}});
  out.push_back({"f5", {r - n + 2, n, 1, 0}, {0, 0, 0, r + 2}});
  out.push_back({"f6", {0, n + 1, 1, 0}, {n, 0, 0, 2}});
  out.push_back({"f7", {0, 2 * n + 1, 0, 0}, {2 * n - 1, 0, 1, 1}});
  return out;
}

// The whole engine-versus-formula ledger; shared by both families.
FamilyValidation validate_generic(
    std::string family, std::vector<std::pair<std::string, std::int64_t>> params,
    const NumericalSemigroup& s, const std::vector<std::int64_t>& pf_formula,
    const std::vector<std::int64_t>* apery_formula,
    const std::vector<DerGenerator>& der_formula, std::int64_t expected_pf_size,
    std::int64_t expected_mu, const std::vector<NamedBinomial>& binomials,
    const SearchBounds* bounds_override) {
  FamilyValidation v;
  v.family = std::move(family);
  v.params = std::move(params);
  auto row = [&v](std::string name, bool pass, std::string detail,
                  bool informational = false) {
    v.rows.push_back({std::move(name), pass, informational, std::move(detail)});
  };

  row("pf_formula", pf_formula == s.pseudo_frobenius(),
      "formula {" + join(pf_formula) + "} vs engine {" +
          join(s.pseudo_frobenius()) + "}");
  row("pf_count",
      static_cast<std::int64_t>(pf_formula.size()) == expected_pf_size,
      "size " + std::to_string(pf_formula.size()) + ", expected " +
          std::to_string(expected_pf_size));
  if (apery_formula) {
    std::vector<std::int64_t> engine = s.apery(s.multiplicity());
    std::sort(engine.begin(), engine.end());
    row("apery_formula", *apery_formula == engine,
        std::to_string(apery_formula->size()) + " elements");
  }
  row("frobenius_max_pf",
      !pf_formula.empty() && pf_formula.back() == s.frobenius(),
      "max " + std::to_string(pf_formula.back()) + " vs frobenius " +
          std::to_string(s.frobenius()));
  row("homogeneous", s.is_homogeneous(), "");

  PlaneSemigroup plane{s};
  const SearchBounds bounds =
      bounds_override ? *bounds_override : default_bounds(plane);
  CmVerdict cm = plane.cm_check(bounds.cm_degree);
  row("cm_default_bound", cm.equal_up_to_bound(),
      "degree bound " + std::to_string(cm.bound));
  if (!cm.equal_up_to_bound()) return v;  // engines below require CM input

  DerivationModule module;
  try {
    module = derivation_module(plane, bounds);
  } catch (const SearchExhaustedError& e) {
    row("derivation_witnesses", false, e.what());
    return v;
  }
  {
    WitnessTable engine = table_of(module.generators);
    WitnessTable formula = table_of(der_formula);
    bool match = engine.by_pf.size() == formula.by_pf.size() &&
                 engine.d1_degenerate.has_value() ==
                     formula.d1_degenerate.has_value();
    if (match && engine.d1_degenerate)
      match = same_generator(*engine.d1_degenerate, *formula.d1_degenerate);
    if (match)
      for (const auto& [pf, gen] : formula.by_pf) {
        auto it = engine.by_pf.find(pf);
        if (it == engine.by_pf.end() || !same_generator(it->second, gen)) {
          match = false;
          break;
        }
      }
    std::string detail;
    if (engine.d1_degenerate)
      detail = "c' = " + std::to_string(*engine.d1_degenerate->witness);
    row("derivation_witnesses", match, detail);
  }
  row("mu", module.mu == expected_mu,
      "mu " + std::to_string(module.mu) + ", expected " +
          std::to_string(expected_mu));
  row("annihilation", annihilation_check(module.ideal, plane), "");

  const std::int64_t h1 = plane.gamma1().type();
  const std::int64_t h2 = plane.gamma2().type();
  const std::int64_t beta0 = static_cast<std::int64_t>(module.minimal_ideal.size());
  row("ideal_minimal_count", beta0 == 1 + h1 + h2,
      std::to_string(beta0) + " vs 1+h1+h2 = " + std::to_string(1 + h1 + h2));
  row("mu_vs_beta0", true,
      "mu = " + std::to_string(module.mu) +
          ", beta0 = " + std::to_string(beta0),
      /*informational=*/true);

  bool all_in = true;
  std::string homogeneous_detail;
  for (const NamedBinomial& b : binomials) {
    BinomialFlags flags = binomial_flags(s.generators(), b.exp_a, b.exp_b);
    all_in = all_in && flags.in_ideal;
    homogeneous_detail += (homogeneous_detail.empty() ? "" : " ") + b.name +
                          (flags.homogeneous ? ":yes" : ":no");
  }
  row("defining_binomials_in_ideal", all_in,
      std::to_string(binomials.size()) + " binomials");
  row("defining_binomials_homogeneous", true, homogeneous_detail,
      /*informational=*/true);
  return v;
}

}  // namespace

FamilyValidation validate_family(const ArslanInstance& a,
                                 const SearchBounds& bounds) {
  NumericalSemigroup s = a.semigroup();
  std::vector<std::int64_t> pf = arslan_pf_formula(a);
  std::vector<std::int64_t> ap = arslan_apery_formula(a);
  return validate_generic("arslan", {{"h", a.h}}, s, pf, &ap,
                          arslan_der_formula(a), 2 * a.h - 1, 2 * a.h + 2,
                          arslan_binomials(a.h), &bounds);
}

FamilyValidation validate_family(const ArslanInstance& a) {
  NumericalSemigroup s = a.semigroup();
  std::vector<std::int64_t> pf = arslan_pf_formula(a);
  std::vector<std::int64_t> ap = arslan_apery_formula(a);
  return validate_generic("arslan", {{"h", a.h}}, s, pf, &ap,
                          arslan_der_formula(a), 2 * a.h - 1, 2 * a.h + 2,
                          arslan_binomials(a.h), nullptr);
}

FamilyValidation validate_family(const BackelinInstance& b,
                                 const SearchBounds& bounds) {
  NumericalSemigroup s = b.semigroup();
  std::vector<std::int64_t> pf = backelin_pf_formula(b);
  return validate_generic("backelin", {{"n", b.n}, {"r", b.r}}, s, pf, nullptr,
                          backelin_der_formula(b), 3 * b.n + 2, 3 * b.n + 5,
                          backelin_binomials(b.n, b.r), &bounds);
}

FamilyValidation validate_family(const BackelinInstance& b) {
  NumericalSemigroup s = b.semigroup();
  std::vector<std::int64_t> pf = backelin_pf_formula(b);
  return validate_generic("backelin", {{"n", b.n}, {"r", b.r}}, s, pf, nullptr,
                          backelin_der_formula(b), 3 * b.n + 2, 3 * b.n + 5,
                          backelin_binomials(b.n, b.r), nullptr);
}

}  // namespace dercurve
