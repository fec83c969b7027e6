#pragma once

// Reach-set shapes (A, B, C), the type automaton of a general N-step set,
// N-bridge counting through that automaton, and Frobenius numbers.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nwalk/core.hpp"
#include "nwalk/exact.hpp"

namespace nwalk {

/// r is reachable iff r - min in A, or max - r in C, or
/// r - min >= max(A), max - r >= max(C) and (r - min - max(A) - 1) mod period in B
/// (max of an empty set is 0). The shape applies to (min, max) when
/// max - min >= max(A) + max(C), and additionally max > min when C is nonempty.
struct ShapeType {
  std::vector<Height> A{0};
  std::vector<Height> B;
  Height period = 1;
  std::vector<Height> C;

  Height max_a() const { return A.empty() ? 0 : A.back(); }
  Height max_c() const { return C.empty() ? 0 : C.back(); }
  bool applies(Height min, Height max) const;
  /// Membership test; assumes applies(min, max).
  bool contains(Height r, Height min, Height max) const;
  /// Explicit reach set for (min, max); throws ValidationError if the shape does not apply.
  ReachState expand(Height min, Height max) const;
  /// True when the shape applies to the set's (min, max) and expands back to it.
  bool describes(const ReachState& reach) const;

  auto operator<=>(const ShapeType&) const = default;
  bool operator==(const ShapeType&) const = default;
};

/// Canonical descriptor of a live reach set: minimises (|A|+|C|, period, |B|),
/// then |A|. A always holds 0; a period-1 shape of span >= 1 also anchors C = {0}.
ShapeType shape_of(const ReachState& reach);

/// Descriptor describing every member of `members`, minimising
/// (period, |A|+|C|, |B|, |A|) so that it extends to larger members of the
/// same class; same anchoring conventions as shape_of. nullopt if none exists.
std::optional<ShapeType> fit_shape(std::span<const ReachState> members);

struct TypeAutomaton {
  WeightedStepSet stepset;
  std::vector<ShapeType> states;               // index = id - 1
  std::vector<std::vector<int>> transitions;   // [state][step] -> state, 0-based
  int initial = 0;
  int cap = 0;                                 // count cap that stabilised

  std::size_t size() const { return states.size(); }
  /// Runs the walk from the initial state, tracking (min, max).
  struct Position {
    int state;
    Height min;
    Height max;
  };
  Position run(std::span<const NStep> walk) const;
  ReachState reach(std::span<const NStep> walk) const;

  bool operator==(const TypeAutomaton&) const = default;
};

struct AutomatonOptions {
  int stabilization_margin = 3;
  int max_cap = 6;
  std::uint64_t state_budget = 200000;  // capped count vectors per attempt
  int validation_walks = 1000;
  int validation_max_length = 40;
  std::uint64_t seed = 0x5eed;
};

/// Builds the automaton by exploring capped N-step count vectors; raises the
/// cap until random replays agree with explicit reach sets. Throws
/// BudgetExceeded when no cap within the budget validates.
TypeAutomaton build_type_automaton(const WeightedStepSet& set, const AutomatonOptions& options = {});

/// N-bridge counts for lengths 0..max_n via a DP over (state, min, max).
CountTable count_bridges_general(const TypeAutomaton& automaton, int max_n);
CountTable count_bridges_general(const WeightedStepSet& set, int max_n);

struct SemigroupInfo {
  Height p = 0;                          // gcd of all h - min(s); 0 if every N-step is a singleton
  std::vector<Height> generators;        // distinct positive normalised heights
  std::optional<Height> frobenius;       // none when there are no generators
  bool operator==(const SemigroupInfo&) const = default;
};

SemigroupInfo semigroup_info(const WeightedStepSet& set);

/// Largest integer not representable by the generators (-1 if all are).
/// Throws ValidationError for an empty list, nonpositive entries or gcd != 1.
Height frobenius(std::span<const Height> gens);

}  // namespace nwalk
