#pragma once

// Exact weighted counts of Dyck and Motzkin N-walks, N-bridges, N-meanders
// and N-excursions by length.
//
// All DPs run over integers: weights are scaled by the lcm `d` of their
// denominators, and the length-n total is divided by d^n at the end.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "nwalk/core.hpp"
#include "nwalk/rational.hpp"

namespace nwalk {

enum class Kind { walk, bridge, meander, excursion };

std::string_view to_string(Kind kind);
/// Throws ValidationError for an unknown name.
Kind parse_kind(std::string_view name);

enum class Family { dyck, motzkin, general };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Weights of {-1}, {1}, {-1,1}. Zero removes the N-step from the set.
struct DyckWeights {
  Rational down{1};
  Rational up{1};
  Rational both{1};
  bool operator==(const DyckWeights&) const = default;
};

/// Weights in motzkin_steps() order. Zero removes the N-step from the set.
struct MotzkinWeights {
  std::array<Rational, 7> w{1, 1, 1, 1, 1, 1, 1};
};

WeightedStepSet to_step_set(const DyckWeights& weights);
WeightedStepSet to_step_set(const MotzkinWeights& weights);
/// Throws ValidationError when `set` holds a non-Dyck (resp. non-Motzkin) N-step.
DyckWeights dyck_weights_from(const WeightedStepSet& set);
MotzkinWeights motzkin_weights_from(const WeightedStepSet& set);

struct CountTable {
  Kind kind;
  WeightedStepSet stepset;
  std::vector<Rational> counts;  // indexed by length 0..N

  std::size_t max_length() const { return counts.size() - 1; }
  bool operator==(const CountTable&) const = default;
};

CountTable count_dyck(Kind kind, const DyckWeights& weights, int max_n);
CountTable count_motzkin(Kind kind, const MotzkinWeights& weights, int max_n);

/// counts[n] / (total weight)^n. Throws ValidationError for n > N.
Rational ratio(const CountTable& table, std::size_t n);

// Compact states. These are the transition functions the DPs use; they are
// exposed so the streaming classifiers and the tests can share them.

/// min+ and max+ of a Dyck N-meander; reach is {minp, minp+2, ..., maxp}.
struct DyckMeanderState {
  Height minp = 0;
  Height maxp = 0;
  bool operator==(const DyckMeanderState&) const = default;
};

enum class DyckStep { down, up, both };

/// nullopt when the N-meander dies.
std::optional<DyckMeanderState> dyck_meander_step(DyckMeanderState state, DyckStep step);

/// Type 1: reach = {minp, minp+2, ..., maxp}. Type 2: reach = [minp, maxp], maxp > minp.
/// `maxp` is always the true maximum; the DP tables index type 2 by maxp-1.
struct MotzkinState {
  int type = 1;
  Height minp = 0;
  Height maxp = 0;
  bool operator==(const MotzkinState&) const = default;
};

/// Unconstrained step. `s` must be a subset of {-1,0,1}.
MotzkinState motzkin_walk_step(const MotzkinState& state, const NStep& s);
/// Meander step (points below 0 are discarded); nullopt when the N-meander dies.
std::optional<MotzkinState> motzkin_meander_step(const MotzkinState& state, const NStep& s);
/// 0 is reachable from an unconstrained state.
bool motzkin_reaches_zero(const MotzkinState& state);

}  // namespace nwalk
