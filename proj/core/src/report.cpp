#include "dercurve/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace dercurve {

using nlohmann::json;

Analysis analyze(std::vector<std::int64_t> generators,
                 const SearchBounds& bounds) {
  NumericalSemigroup s(std::move(generators));
  PlaneSemigroup plane(s);
  DerivationModule module = derivation_module(plane, bounds);
  CmVerdict cm = plane.cm_check(bounds.cm_degree);
  const bool annihilation = annihilation_check(module.ideal, plane);
  const bool homogeneous = s.is_homogeneous();
  const std::int64_t h1 = plane.gamma1().type();
  const std::int64_t h2 = plane.gamma2().type();
  return Analysis{std::move(s),   std::move(plane), cm, std::move(module),
                  h1,             h2,               homogeneous,
                  annihilation};
}

Analysis analyze(std::vector<std::int64_t> generators) {
  NumericalSemigroup s(generators);
  PlaneSemigroup plane(std::move(s));
  return analyze(std::move(generators), default_bounds(plane));
}

namespace {

json point_json(PlanePoint p) { return json::array({p.a, p.b}); }

json generator_json(const DerGenerator& g) {
  json j;
  j["kind"] = der_kind_name(g.kind);
  j["v_exp"] = g.v_exp;
  j["u_exp"] = g.u_exp;
  j["partial"] = partial_name(g.partial);
  j["pf"] = g.pf ? json(*g.pf) : json(nullptr);
  j["witness"] = g.witness ? json(*g.witness) : json(nullptr);
  return j;
}

json cm_json(const CmVerdict& cm) {
  json j;
  j["bound"] = cm.bound;
  if (cm.equal_up_to_bound()) {
    j["status"] = "equal_up_to";
  } else {
    j["status"] = "counterexample";
    j["point"] = point_json(*cm.counterexample);
  }
  return j;
}

std::string relation_string(std::int64_t h1, std::int64_t h2) {
  return "1+" + std::to_string(h1 + h2) + "·P_K";
}

json semigroup_json(const NumericalSemigroup& s) {
  json j;
  j["generators"] = s.generators();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  j["gap_count"] = s.gaps().size();
  j["apery"] = s.apery(s.multiplicity());
  j["pf"] = s.pseudo_frobenius();
  j["type"] = s.type();
  return j;
}

json pk_json(const PoincareInput& pk) {
  if (pk.empty()) return json(nullptr);
  json j;
  if (pk.coeffs) j["coeffs"] = *pk.coeffs;
  if (pk.rational) {
    j["rational"] = {{"numerator", pk.rational->first},
                     {"denominator", pk.rational->second}};
  }
  return j;
}

json analysis_json(const Analysis& a, const PoincareInput* pk) {
  json root;
  root["input"]["generators"] = a.semigroup.generators();
  root["input"]["pk"] = pk ? pk_json(*pk) : json(nullptr);

  json sem = semigroup_json(a.semigroup);
  sem["homogeneous"] = a.homogeneous;
  root["semigroup"] = std::move(sem);

  json plane;
  plane["n_e"] = a.plane.top();
  json g2 = semigroup_json(a.plane.gamma2());
  g2["raw_generators"] = a.plane.gamma2_raw_generators();
  g2["is_natural_numbers"] = a.plane.gamma2().is_natural_numbers();
  plane["gamma2"] = std::move(g2);
  plane["cm"] = cm_json(a.cm);
  root["plane"] = std::move(plane);

  json der;
  der["generators"] = json::array();
  for (const DerGenerator& g : a.module.generators)
    der["generators"].push_back(generator_json(g));
  der["mu"] = a.module.mu;
  der["ideal"] = json::array();
  for (PlanePoint p : a.module.ideal) der["ideal"].push_back(point_json(p));
  der["minimal_ideal"] = json::array();
  for (PlanePoint p : a.module.minimal_ideal)
    der["minimal_ideal"].push_back(point_json(p));
  der["minimal_ideal_count"] = a.module.minimal_ideal.size();
  der["annihilation"] = a.annihilation;
  root["derivations"] = std::move(der);

  json poincare;
  poincare["h1"] = a.h1;
  poincare["h2"] = a.h2;
  poincare["relation"] = relation_string(a.h1, a.h2);
  if (pk && pk->coeffs) {
    TruncatedSeries transformed =
        der_series(a.h1, a.h2, TruncatedSeries(*pk->coeffs));
    poincare["der_series"] = transformed.coeffs();
    poincare["der_series_wire"] = render_coeff_list(transformed.coeffs());
  }
  if (pk && pk->rational) {
    RationalSeries in(Polynomial(pk->rational->first),
                      Polynomial(pk->rational->second));
    RationalSeries out = der_series_rational(a.h1, a.h2, in);
    poincare["der_series_rational"] = {
        {"numerator", out.numerator().coeffs()},
        {"denominator", out.denominator().coeffs()},
        {"wire", render_rational_wire(out)}};
  }
  root["poincare"] = std::move(poincare);

  json notes;
  const std::int64_t beta0 =
      static_cast<std::int64_t>(a.module.minimal_ideal.size());
  if (a.module.mu != beta0)
    notes["mu_vs_beta0"] = {{"mu", a.module.mu}, {"beta0", beta0}};
  for (const DerGenerator& g : a.module.generators)
    if (g.kind == DerKind::d1_degenerate) {
      notes["d1_partial_convention"] =
          "the degenerate d1 generator carries d/du, following the general "
          "statement; the first family theorem prints d/dv for it";
      break;
    }
  root["notes"] = std::move(notes);
  return root;
}

json family_json(const FamilyRun& run) {
  const FamilyValidation& v = run.validation;
  json root;
  root["family"] = v.family;
  json params;
  for (const auto& [name, value] : v.params) params[name] = value;
  root["params"] = std::move(params);
  root["pass"] = v.all_pass();
  root["checks"] = json::array();
  for (const CheckRow& row : v.rows)
    root["checks"].push_back({{"name", row.name},
                              {"pass", row.pass},
                              {"informational", row.informational},
                              {"detail", row.detail}});
  root["report"] =
      run.analysis ? analysis_json(*run.analysis, nullptr) : json(nullptr);
  return root;
}

}  // namespace

std::string analysis_to_json(const Analysis& a, const PoincareInput* pk,
                             int indent) {
  return analysis_json(a, pk).dump(indent);
}

std::string family_to_json(const FamilyRun& run, int indent) {
  return family_json(run).dump(indent);
}

std::string sweep_to_json(const std::vector<FamilyRun>& runs, int indent) {
  json root;
  root["sweep"] = json::array();
  bool pass = true;
  for (const FamilyRun& run : runs) {
    root["sweep"].push_back(family_json(run));
    pass = pass && run.validation.all_pass();
  }
  root["pass"] = pass;
  return root.dump(indent);
}

std::string poincare_to_json(std::int64_t h1, std::int64_t h2,
                             const PoincareInput& pk,
                             const std::optional<std::vector<std::int64_t>>& truncated,
                             const std::optional<RationalSeries>& rational,
                             int indent) {
  json root;
  root["input"]["h1"] = h1;
  root["input"]["h2"] = h2;
  root["input"]["pk"] = pk_json(pk);
  root["relation"] = relation_string(h1, h2);
  if (truncated) {
    root["der_series"] = *truncated;
    root["der_series_wire"] = render_coeff_list(*truncated);
  }
  if (rational) {
    root["der_series_rational"] = {
        {"numerator", rational->numerator().coeffs()},
        {"denominator", rational->denominator().coeffs()},
        {"wire", render_rational_wire(*rational)}};
  }
  return root.dump(indent);
}

std::string error_to_json(const Error& e, int indent) {
  json root;
  root["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
  return root.dump(indent);
}

std::string render_coeff_list(const std::vector<std::int64_t>& coeffs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    os << (i ? "," : "") << coeffs[i];
  return os.str();
}

std::string render_rational_wire(const RationalSeries& r) {
  return render_coeff_list(r.numerator().coeffs()) + ";" +
         render_coeff_list(r.denominator().coeffs());
}

std::vector<std::int64_t> parse_coeff_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  if (text.empty()) throw Error(errc::parse_error, "empty coefficient list");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::int64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw Error(errc::parse_error,
                  "bad integer in coefficient list: '" +
                      text.substr(pos, comma - pos) + "'");
    out.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
parse_rational_wire(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw Error(errc::parse_error,
                "rational wire format is 'num_coeffs;den_coeffs'");
  return {parse_coeff_list(text.substr(0, semi)),
          parse_coeff_list(text.substr(semi + 1))};
}

namespace {

std::string join_i64(const std::vector<std::int64_t>& xs) {
  return render_coeff_list(xs);
}

}  // namespace

std::string analysis_to_text(const Analysis& a) {
  std::ostringstream os;
  const std::string apery_label =
      "apery(" + std::to_string(a.semigroup.multiplicity()) + ")";
  os << "generators        " << join_i64(a.semigroup.generators()) << "\n"
     << "frobenius         " << a.semigroup.frobenius() << "\n"
     << "gaps              " << a.semigroup.gaps().size() << "\n"
     << std::left << std::setw(18) << apery_label
     << join_i64(a.semigroup.apery(a.semigroup.multiplicity())) << "\n"
     << "pf                " << join_i64(a.semigroup.pseudo_frobenius()) << "\n"
     << "type              " << a.semigroup.type() << "\n"
     << "homogeneous       " << (a.homogeneous ? "yes" : "no") << "\n"
     << "gamma2            " << join_i64(a.plane.gamma2().generators()) << "\n"
     << "cm                "
     << (a.cm.equal_up_to_bound() ? "equal up to degree " : "counterexample at ")
     << (a.cm.equal_up_to_bound()
             ? std::to_string(a.cm.bound)
             : "(" + std::to_string(a.cm.counterexample->a) + "," +
                   std::to_string(a.cm.counterexample->b) + ")")
     << "\n"
     << "derivations       mu = " << a.module.mu << "\n";
  for (const DerGenerator& g : a.module.generators) {
    os << "  " << der_kind_name(g.kind) << " v^" << g.v_exp << " u^" << g.u_exp
       << " " << partial_name(g.partial);
    if (g.witness) os << "  (witness " << *g.witness << ")";
    os << "\n";
  }
  os << "minimal ideal     " << a.module.minimal_ideal.size() << " of "
     << a.module.ideal.size() << " listed\n"
     << "annihilation      " << (a.annihilation ? "yes" : "no") << "\n"
     << "poincare          P_Der = " << relation_string(a.h1, a.h2)
     << "  (h1 = " << a.h1 << ", h2 = " << a.h2 << ")\n";
  return os.str();
}

std::string family_to_text(const FamilyRun& run) {
  const FamilyValidation& v = run.validation;
  std::ostringstream os;
  os << v.family;
  for (const auto& [name, value] : v.params)
    os << " " << name << "=" << value;
  os << "  ->  " << (v.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const CheckRow& row : v.rows) {
    os << "  " << (row.informational ? "info" : (row.pass ? "ok  " : "FAIL"))
       << "  " << row.name;
    if (!row.detail.empty()) os << "  (" << row.detail << ")";
    os << "\n";
  }
  if (run.analysis) os << analysis_to_text(*run.analysis);
  return os.str();
}

}  // namespace dercurve
