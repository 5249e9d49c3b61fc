#pragma once

#include <cstdint>
#include <vector>

#include "dercurve/errors.hpp"

namespace dercurve {

/// Poincare series known through a finite order: coefficient i is the i-th
/// total Betti number. Coefficients must be nonnegative.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.size() - 1; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<std::int64_t> coeffs_;
};

/// Multiplication by (1+z), the series transfer along the large surjection
/// onto R/(u^{n_e}, v^{n_e}). Returns the full convolution, one coefficient
/// longer than the input.
TruncatedSeries times_one_plus_z(const TruncatedSeries& s);

/// 1 + (h1+h2) P_K: constant term 1+h1+h2, coefficient i >= 1 equal to
/// (h1+h2) beta_i(K). Requires pk to start with beta_0 = 1
/// (Error(bad_residue_field) otherwise) and h1, h2 >= 1.
TruncatedSeries der_series(std::int64_t h1, std::int64_t h2,
                           const TruncatedSeries& pk);

/// Series of a single branch ideal: 1 + h P_K when the opposite projection
/// differs from N, and 1 + P_K otherwise (h is forced to 1).
TruncatedSeries d_branch_series(std::int64_t h, bool projection_is_natural,
                                const TruncatedSeries& pk);

/// Betti number of the derivation module from the Betti number of K:
/// 1 + (h1+h2) at homological degree 0, (h1+h2) betti_k beyond.
std::int64_t betti_of_der(std::int64_t i, std::int64_t betti_k,
                          std::int64_t h1, std::int64_t h2);

/// Dense integer polynomial, ascending coefficients.
class Polynomial {
public:
  Polynomial() = default;  // zero
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial constant(std::int64_t c);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const;  // -1 for the zero polynomial
  std::int64_t coeff(std::int64_t i) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t content() const;  // gcd of coefficients, 0 for zero

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(std::int64_t c) const;

  /// Exact division; throws Error(invalid_series) if not divisible.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Primitive-remainder-sequence gcd, content included, positive leading
  /// coefficient.
  static Polynomial gcd(Polynomial a, Polynomial b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Rational generating function p(z)/q(z) with integer coefficients,
/// gcd-reduced, denominator constant term normalized to 1 so the fraction
/// expands as an integer power series. Construction throws
/// Error(invalid_series) when the reduced denominator cannot be normalized.
class RationalSeries {
public:
  RationalSeries(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Power-series coefficients 0..order.
  std::vector<std::int64_t> expand(std::size_t order) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
  Polynomial num_;
  Polynomial den_;
};

/// (q + (h1+h2) p) / q in reduced form, for pk = p/q.
RationalSeries der_series_rational(std::int64_t h1, std::int64_t h2,
                                   const RationalSeries& pk);

}  // namespace dercurve
