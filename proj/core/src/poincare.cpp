#include "dercurve/poincare.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dercurve {

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(errc::invalid_series, "series needs at least one coefficient");
  for (std::int64_t c : coeffs_)
    if (c < 0)
      throw Error(errc::invalid_series,
                  "Betti coefficients must be nonnegative, got " +
                      std::to_string(c));
}

TruncatedSeries times_one_plus_z(const TruncatedSeries& s) {
  const auto& c = s.coeffs();
  std::vector<std::int64_t> out(c.size() + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] += c[i];
    out[i + 1] += c[i];
  }
  return TruncatedSeries(std::move(out));
}

namespace {

void require_field_series(const TruncatedSeries& pk) {
  if (pk.coeffs().front() != 1)
    throw Error(errc::bad_residue_field,
                "residue-field series must start with beta_0 = 1, got " +
                    std::to_string(pk.coeffs().front()));
}

void require_positive(std::int64_t h, const char* name) {
  if (h < 1)
    throw Error(errc::param_out_of_range,
                std::string(name) + " must be positive");
}

}  // namespace

TruncatedSeries der_series(std::int64_t h1, std::int64_t h2,
                           const TruncatedSeries& pk) {
  require_positive(h1, "h1");
  require_positive(h2, "h2");
  require_field_series(pk);
  std::vector<std::int64_t> out = pk.coeffs();
  for (std::int64_t& c : out) c *= h1 + h2;
  out[0] += 1;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries d_branch_series(std::int64_t h, bool projection_is_natural,
                                const TruncatedSeries& pk) {
  require_positive(h, "h");
  require_field_series(pk);
  const std::int64_t factor = projection_is_natural ? 1 : h;
  std::vector<std::int64_t> out = pk.coeffs();
  for (std::int64_t& c : out) c *= factor;
  out[0] += 1;
  return TruncatedSeries(std::move(out));
}

std::int64_t betti_of_der(std::int64_t i, std::int64_t betti_k,
                          std::int64_t h1, std::int64_t h2) {
  if (i == 0) return 1 + h1 + h2;
  return (h1 + h2) * betti_k;
}

Polynomial::Polynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(std::int64_t c) {
  return Polynomial(std::vector<std::int64_t>{c});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::degree() const {
  return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::int64_t Polynomial::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::int64_t Polynomial::content() const {
  std::int64_t g = 0;
  for (std::int64_t c : coeffs_) g = std::gcd(g, c);
  return g;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<std::int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<std::int64_t>(i)) +
             rhs.coeff(static_cast<std::int64_t>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + rhs.scaled(-1);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(std::int64_t c) const {
  std::vector<std::int64_t> out = coeffs_;
  for (std::int64_t& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero())
    throw Error(errc::invalid_series, "division by the zero polynomial");
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> quot(
      rem.size() >= divisor.coeffs_.size()
          ? rem.size() - divisor.coeffs_.size() + 1
          : 0,
      0);
  const std::int64_t lead = divisor.coeffs_.back();
  for (std::int64_t i = static_cast<std::int64_t>(rem.size()) -
                        static_cast<std::int64_t>(divisor.coeffs_.size());
       i >= 0; --i) {
    const std::int64_t top = rem[static_cast<std::size_t>(i) +
                                 divisor.coeffs_.size() - 1];
    if (top % lead != 0)
      throw Error(errc::invalid_series, "polynomial division is not exact");
    const std::int64_t q = top / lead;
    quot[static_cast<std::size_t>(i)] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[static_cast<std::size_t>(i) + j] -= q * divisor.coeffs_[j];
  }
  for (std::int64_t c : rem)
    if (c != 0)
      throw Error(errc::invalid_series, "polynomial division is not exact");
  return Polynomial(std::move(quot));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  auto positive_leading = [](Polynomial p) {
    if (!p.is_zero() && p.coeffs_.back() < 0) p = p.scaled(-1);
    return p;
  };
  auto primitive = [&](Polynomial p) {
    const std::int64_t c = p.content();
    if (c > 1) p = Polynomial(p.divide_exact(Polynomial::constant(c)));
    return positive_leading(std::move(p));
  };
  if (a.is_zero()) return positive_leading(std::move(b));
  if (b.is_zero()) return positive_leading(std::move(a));
  const std::int64_t content_gcd = std::gcd(a.content(), b.content());
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  while (!b.is_zero()) {
    // One leading-term cancellation per round, re-primitivized to keep
    // coefficients small; degrees strictly shrink so the loop terminates.
    const std::int64_t shift = a.degree() - b.degree();
    if (shift < 0) {
      std::swap(a, b);
      continue;
    }
    std::vector<std::int64_t> mono(static_cast<std::size_t>(shift) + 1, 0);
    mono.back() = a.coeffs_.back();
    Polynomial r = a.scaled(b.coeffs_.back()) - b * Polynomial(std::move(mono));
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return positive_leading(a.scaled(content_gcd));
}

RationalSeries::RationalSeries(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw Error(errc::invalid_series, "denominator must be nonzero");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  num_ = num_.divide_exact(g);
  den_ = den_.divide_exact(g);
  if (den_.coeff(0) == 0)
    throw Error(errc::invalid_series,
                "denominator constant term is 0; not expandable as a series");
  if (den_.coeff(0) < 0) {
    num_ = num_.scaled(-1);
    den_ = den_.scaled(-1);
  }
  if (den_.coeff(0) != 1)
    throw Error(errc::invalid_series,
                "denominator constant term must reduce to 1, got " +
                    std::to_string(den_.coeff(0)));
}

std::vector<std::int64_t> RationalSeries::expand(std::size_t order) const {
  std::vector<std::int64_t> out(order + 1, 0);
  for (std::size_t k = 0; k <= order; ++k) {
    std::int64_t c = num_.coeff(static_cast<std::int64_t>(k));
    const std::int64_t dmax =
        std::min<std::int64_t>(static_cast<std::int64_t>(k), den_.degree());
    for (std::int64_t j = 1; j <= dmax; ++j)
      c -= den_.coeff(j) * out[k - static_cast<std::size_t>(j)];
    out[k] = c;
  }
  return out;
}

RationalSeries der_series_rational(std::int64_t h1, std::int64_t h2,
                                   const RationalSeries& pk) {
  require_positive(h1, "h1");
  require_positive(h2, "h2");
  Polynomial num = pk.denominator() + pk.numerator().scaled(h1 + h2);
  return RationalSeries(std::move(num), pk.denominator());
}

}  // namespace dercurve
