#pragma once

// JSON encodings of every CLI output. Rationals are strings ("28/81", "7"),
// step sets use the DSL text, automaton state ids are 1-based.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nwalk/asym.hpp"
#include "nwalk/exact.hpp"
#include "nwalk/montecarlo.hpp"
#include "nwalk/structure.hpp"
#include "nwalk/tunnel.hpp"

namespace nwalk {

using Json = nlohmann::json;

/// Output of `series`.
struct SeriesReport {
  std::string form;
  std::optional<DyckWeights> weights;
  int order = 0;
  std::vector<Rational> coefficients;  // t^0..t^order
  bool operator==(const SeriesReport&) const = default;
};

/// Output of `asym prob`.
struct ProbabilityReport {
  double p1 = 0;
  double pm1 = 0;
  double half_length = 0;
  double decay_base = 0;
  AsymEstimate estimate;
  bool operator==(const ProbabilityReport&) const = default;
};

/// Output of `frobenius`.
struct FrobeniusReport {
  std::vector<Height> generators;
  Height frobenius = 0;
  bool operator==(const FrobeniusReport&) const = default;
};

/// Output of `feasible`.
struct FeasibilityReport {
  CapabilityPath path;
  FeasibilityResult result;
  bool operator==(const FeasibilityReport&) const = default;
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  bool operator==(const SelftestCheck&) const = default;
};

/// Output of `selftest`.
struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
  bool operator==(const SelftestReport&) const = default;
};

void to_json(Json& j, const DyckWeights& w);
void from_json(const Json& j, DyckWeights& w);
void to_json(Json& j, const CountTable& t);
CountTable count_table_from_json(const Json& j);
void to_json(Json& j, const SeriesReport& r);
void from_json(const Json& j, SeriesReport& r);
void to_json(Json& j, const AsymEstimate& e);
void from_json(const Json& j, AsymEstimate& e);
void to_json(Json& j, const ProbabilityReport& r);
void from_json(const Json& j, ProbabilityReport& r);
void to_json(Json& j, const TypeAutomaton& a);
TypeAutomaton automaton_from_json(const Json& j);
void to_json(Json& j, const SemigroupInfo& s);
void from_json(const Json& j, SemigroupInfo& s);
void to_json(Json& j, const FrobeniusReport& r);
void from_json(const Json& j, FrobeniusReport& r);
void to_json(Json& j, const SimResult& r);
void from_json(const Json& j, SimResult& r);
void to_json(Json& j, const FeasibilityReport& r);
void from_json(const Json& j, FeasibilityReport& r);
void to_json(Json& j, const FeasibilityProbability& p);
void from_json(const Json& j, FeasibilityProbability& p);
void to_json(Json& j, const SelftestReport& r);
void from_json(const Json& j, SelftestReport& r);

}  // namespace nwalk

// Types without a default constructor decode through value-returning serializers.
template <>
struct nlohmann::adl_serializer<nwalk::CountTable> {
  static void to_json(nwalk::Json& j, const nwalk::CountTable& t) { nwalk::to_json(j, t); }
  static nwalk::CountTable from_json(const nwalk::Json& j) { return nwalk::count_table_from_json(j); }
};

template <>
struct nlohmann::adl_serializer<nwalk::TypeAutomaton> {
  static void to_json(nwalk::Json& j, const nwalk::TypeAutomaton& a) { nwalk::to_json(j, a); }
  static nwalk::TypeAutomaton from_json(const nwalk::Json& j) { return nwalk::automaton_from_json(j); }
};
