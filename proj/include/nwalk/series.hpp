#pragma once

// Truncated power series over exact rationals, and the closed-form
// generating functions of Dyck and Motzkin N-walk classes.
//
// A Series is known modulo t^precision(). Laurent intermediates (negative
// exponents) are allowed; the public generating functions below always
// return series of valuation >= 0 known up to and including t^N.

#include <cstdint>
#include <vector>

#include "nwalk/exact.hpp"
#include "nwalk/rational.hpp"

namespace nwalk {

class Series {
 public:
  /// The zero series known modulo t^precision.
  explicit Series(std::int64_t precision = 0);
  /// sum_k coeffs[k] t^(offset+k), known modulo t^precision. Coefficients at
  /// or beyond `precision` are dropped.
  Series(std::vector<Rational> coeffs, std::int64_t precision, std::int64_t offset = 0);

  static Series constant(const Rational& c, std::int64_t precision);
  static Series monomial(const Rational& c, std::int64_t exponent, std::int64_t precision);

  std::int64_t precision() const { return offset_ + static_cast<std::int64_t>(c_.size()); }
  /// Lowest exponent with a nonzero coefficient; precision() when none is known.
  std::int64_t valuation() const;
  /// Zero below the stored range; throws ValidationError at or above precision().
  Rational coefficient(std::int64_t k) const;
  /// Coefficients of t^0..t^n. Throws ValidationError when negative exponents
  /// carry nonzero coefficients or n >= precision().
  std::vector<Rational> coefficients(std::int64_t n) const;

  Series truncated(std::int64_t precision) const;
  /// Multiplication by t^k (k may be negative).
  Series shifted(std::int64_t k) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Valuation of the quotient is val(a) - val(b); relative precision is the
  /// smaller of the operands'. Throws ValidationError when b is zero to its precision.
  friend Series operator/(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, const Series& a);
  friend Series operator+(const Rational& c, const Series& a);
  friend Series operator-(const Rational& c, const Series& a);

 private:
  std::int64_t offset_ = 0;
  std::vector<Rational> c_;
};

/// Square root with positive constant term. Requires valuation 0 and a
/// constant term that is the square of a rational; precision is preserved.
Series sqrt(const Series& a);

/// Generating functions truncated after t^N (default order 64). Dyck
/// weights need up > 0, down + both > 0 and up + both > 0; violations throw
/// ValidationError.
constexpr int kDefaultOrder = 64;

/// Unconstrained N-walks: 1 / (1 - t * total weight).
Series gf_walks(const WeightedStepSet& set, int order = kDefaultOrder);
/// D+(1,1;t) from the product formula with the roots Y(t) and X(1,t).
Series gf_dyck_meander(const DyckWeights& weights, int order = kDefaultOrder);
/// D+(0,1;t) = X/(1-X^2) * (1-XY) / ((p_-1 + p_-1,1) t).
Series gf_dyck_excursion(const DyckWeights& weights, int order = kDefaultOrder);
/// -(1 - 4t - sqrt(1-8t^2)) / (4t(1-3t)).
Series gf_dyck_meander_unweighted(int order = kDefaultOrder);
/// (1 - 8t^2 - (1-12t^2) sqrt(1-8t^2)) / (8t^2 (1-9t^2)).
Series gf_dyck_excursion_unweighted(int order = kDefaultOrder);
/// (1 - 6t^2) / (sqrt(1-8t^2) (1-9t^2)).
Series gf_dyck_bridge_unweighted(int order = kDefaultOrder);
/// (10t - 1 + sqrt((1+2t)(1-6t))) / (8t(1-7t)).
Series gf_motzkin_meander_unweighted(int order = kDefaultOrder);

/// Weighted Dyck N-excursion counts of lengths 0, 2, ..., 2m, for large m.
/// Uses the excursion closed form rewritten in u = t^2 with the Catalan
/// expansions of X and Y and integer-scaled weights, so the cost is one
/// product and one exact division of integer series of length m+1.
std::vector<Rational> dyck_excursion_even_counts(const DyckWeights& weights, int m);

}  // namespace nwalk
