#include "nwalk/asym.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

constexpr std::array<std::pair<AsymRegime, std::string_view>, 6> kRegimeNames{{
    {AsymRegime::exact, "exact"},
    {AsymRegime::two_term, "two-term"},
    {AsymRegime::constant, "constant"},
    {AsymRegime::inverse_sqrt, "inverse-sqrt"},
    {AsymRegime::inverse_n32, "inverse-n3/2"},
    {AsymRegime::vanishing, "vanishing"},
}};

constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(AsymRegime regime) {
  for (const auto& [r, name] : kRegimeNames) {
    if (r == regime) return name;
  }
  return "?";
}

AsymRegime parse_asym_regime(std::string_view name) {
  for (const auto& [r, n] : kRegimeNames) {
    if (n == name) return r;
  }
  throw ValidationError("unknown regime '" + std::string(name) + "'");
}

AsymEstimate asym_count(Family family, Kind kind, std::int64_t n) {
  if (n < 1) throw ValidationError("asymptotic estimates need n >= 1");
  const double nd = static_cast<double>(n);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double n32 = std::pow(nd, 1.5);
  AsymEstimate e;
  if (family == Family::dyck) {
    const double parity = (1 + sign) / 2;
    const double three = std::pow(3.0, nd), root8 = std::pow(8.0, nd / 2);
    switch (kind) {
      case Kind::walk:
        e = {three, 0, AsymRegime::exact, ""};
        break;
      case Kind::bridge:
        e = {parity * three, -parity * 2 * std::sqrt(2.0) / std::sqrt(kPi) * root8 / std::sqrt(nd),
             AsymRegime::two_term, "even n only; zero for odd n"};
        break;
      case Kind::meander:
        e = {three / 2, (3 * std::sqrt(2.0) * (1 + sign) + 4 * (1 - sign)) / std::sqrt(kPi) * root8 / n32,
             AsymRegime::two_term, ""};
        break;
      case Kind::excursion:
        e = {parity * three / 4, parity * 4 * std::sqrt(2.0) * root8 / std::sqrt(kPi * nd * nd * nd),
             AsymRegime::two_term, "even n only; zero for odd n"};
        break;
    }
    return e;
  }
  if (family == Family::motzkin) {
    const double seven = std::pow(7.0, nd), six = std::pow(6.0, nd);
    switch (kind) {
      case Kind::walk:
        e = {seven, 0, AsymRegime::exact, ""};
        break;
      case Kind::bridge:
        e = {seven, -std::sqrt(3 / kPi) * six / std::sqrt(nd), AsymRegime::two_term, ""};
        break;
      case Kind::meander:
        e = {0.75 * seven, 3 * std::sqrt(3.0) / (2 * std::sqrt(kPi)) * six / n32, AsymRegime::two_term, ""};
        break;
      case Kind::excursion:
        e = {9.0 / 16 * seven, -motzkin_gamma() * six / std::sqrt(kPi * nd * nd * nd), AsymRegime::two_term, ""};
        break;
    }
    return e;
  }
  throw ValidationError("no asymptotic formula for the general family");
}

ExcursionProbability::ExcursionProbability(double p1, double pm1) {
  if (!(p1 > 0) || !(pm1 > 0) || p1 + pm1 > 1) {
    throw ValidationError("probabilities need p1, p-1 > 0 and p1 + p-1 <= 1");
  }
  p1_ = std::min(p1, pm1);
  pm1_ = std::max(p1, pm1);
  if (pm1_ < 0.5) {
    regime_ = AsymRegime::constant;
  } else if (pm1_ == 0.5) {
    regime_ = p1_ == 0.5 ? AsymRegime::inverse_n32 : AsymRegime::inverse_sqrt;
  } else {
    regime_ = AsymRegime::vanishing;
  }
}

AsymEstimate ExcursionProbability::at(double half_length) const {
  if (!(half_length >= 1)) throw ValidationError("asymptotic estimates need n >= 1");
  const double n = half_length;
  std::ostringstream note;
  switch (regime_) {
    case AsymRegime::constant:
      note << "error O(" << decay_base() << "^n / n^(3/2))";
      return {(1 - 2 * p1_) * (1 - 2 * pm1_) / ((1 - p1_) * (1 - pm1_)), 0, regime_, note.str()};
    case AsymRegime::inverse_sqrt:
      return {(1 - 2 * p1_) / ((1 - p1_) * std::sqrt(kPi * n)), 0, regime_, "error O(n^(-3/2))"};
    case AsymRegime::inverse_n32:
      return {1 / std::sqrt(kPi * n * n * n), 0, regime_, "error O(n^(-5/2))"};
    default:
      note << "exponentially small: O(" << decay_base() << "^n / n^(3/2)), constant not available";
      return {0, 0, regime_, note.str()};
  }
}

ExcursionProbability dyck_excursion_probability_regime(double p1, double pm1) { return {p1, pm1}; }

std::array<double, 2> motzkin_gamma_candidates() {
  // Quadratic in g^2: 1024 z^2 - 8019 z + 2916 = 0.
  const double disc = std::sqrt(8019.0 * 8019.0 - 4 * 1024.0 * 2916.0);
  return {std::sqrt((8019 - disc) / 2048), std::sqrt((8019 + disc) / 2048)};
}

double motzkin_gamma() {
  double g = motzkin_gamma_candidates()[0];
  // One Newton step on the quartic tightens the residual to rounding level.
  g -= motzkin_gamma_residual(g) / (4096 * g * g * g - 16038 * g);
  return g;
}

double motzkin_gamma_residual(double g) {
  const double g2 = g * g;
  return 1024 * g2 * g2 - 8019 * g2 + 2916;
}

double motzkin_bridge_proportion(std::int64_t n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  const double nd = static_cast<double>(n);
  return 1 - std::sqrt(3 / kPi) * std::pow(6.0 / 7.0, nd) / std::sqrt(nd);
}

}  // namespace nwalk
