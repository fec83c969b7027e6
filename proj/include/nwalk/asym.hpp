#pragma once

// Floating-point evaluation of the asymptotic formulas for unweighted Dyck
// and Motzkin N-walk classes and for the Dyck N-excursion probability.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "nwalk/exact.hpp"

namespace nwalk {

enum class AsymRegime {
  exact,            // the formula is the exact count
  two_term,         // main term plus first correction
  constant,         // probability case (i)
  inverse_sqrt,     // probability case (ii)
  inverse_n32,      // probability case (iii)
  vanishing,        // probability case (iv); only the decay base is known
};

std::string_view to_string(AsymRegime regime);
AsymRegime parse_asym_regime(std::string_view name);

struct AsymEstimate {
  double main_term = 0;
  double correction_term = 0;
  AsymRegime regime = AsymRegime::two_term;
  std::string validity_note;

  double value() const { return main_term + correction_term; }
  bool operator==(const AsymEstimate&) const = default;
};

/// Two-term estimate of the number of unweighted N-walks of length n in the
/// given class. Throws ValidationError for Family::general or n < 1.
AsymEstimate asym_count(Family family, Kind kind, std::int64_t n);

/// Dyck N-excursion probability for walks of length 2n, with probabilities
/// p1 of {1}, pm1 of {-1} and 1 - p1 - pm1 of {-1,1}. The two weights are
/// interchangeable and are stored sorted so that p1 <= pm1.
class ExcursionProbability {
 public:
  /// Throws ValidationError unless p1, pm1 > 0 and p1 + pm1 <= 1.
  ExcursionProbability(double p1, double pm1);

  AsymRegime regime() const { return regime_; }
  double p1() const { return p1_; }
  double pm1() const { return pm1_; }
  /// 4 pm1 (1 - pm1): base of the exponential error term (cases i, iv).
  double decay_base() const { return 4 * pm1_ * (1 - pm1_); }
  /// Estimate at half-length n >= 1 (real n is accepted for interpolated lengths).
  AsymEstimate at(double half_length) const;

 private:
  double p1_;
  double pm1_;
  AsymRegime regime_;
};

ExcursionProbability dyck_excursion_probability_regime(double p1, double pm1);

/// Root of 1024 g^4 - 8019 g^2 + 2916 = 0 near 0.6183.
double motzkin_gamma();
/// Both positive roots of the quartic, ascending.
std::array<double, 2> motzkin_gamma_candidates();
double motzkin_gamma_residual(double g);

/// 1 - sqrt(3/pi) (6/7)^n / sqrt(n), n >= 1.
double motzkin_bridge_proportion(std::int64_t n);

}  // namespace nwalk
