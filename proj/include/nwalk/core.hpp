#pragma once

// N-steps, weighted N-step sets and reachable-point semantics of N-walks.
//
// An N-walk explores every compatible classical walk in parallel. Its
// reachable points after each prefix are obtained by Minkowski sums with the
// N-step heights; the meander variant additionally discards negative points.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nwalk/rational.hpp"

namespace nwalk {

using Height = std::int64_t;

/// A nonempty set of integer step heights, kept sorted and duplicate-free.
class NStep {
 public:
  NStep(std::initializer_list<Height> heights);
  explicit NStep(std::vector<Height> heights);

  std::span<const Height> heights() const { return heights_; }
  Height min() const { return heights_.front(); }
  Height max() const { return heights_.back(); }
  std::size_t size() const { return heights_.size(); }
  bool contains(Height h) const;

  /// "{-1,1}"
  std::string to_string() const;

  auto operator<=>(const NStep&) const = default;
  bool operator==(const NStep&) const = default;

 private:
  std::vector<Height> heights_;
};

using NWalk = std::vector<NStep>;

struct WeightedStep {
  NStep step;
  Rational weight;
};

/// Finite set of distinct N-steps with a positive exact weight each.
class WeightedStepSet {
 public:
  explicit WeightedStepSet(std::vector<WeightedStep> steps);

  /// Every step with weight 1.
  static WeightedStepSet unweighted(std::vector<NStep> steps);

  const std::vector<WeightedStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const NStep& step(std::size_t i) const { return steps_[i].step; }
  const Rational& weight(std::size_t i) const { return steps_[i].weight; }

  std::optional<std::size_t> index_of(const NStep& s) const;
  /// Throws UnknownStepError when `s` is not in the set.
  const Rational& weight_of(const NStep& s) const;

  const Rational& total_weight() const { return total_; }
  bool is_probability() const { return total_ == 1; }

  Height min_height() const;
  Height max_height() const;
  /// True when every N-step is a subset of {-1, 0, 1}.
  bool is_motzkin_subset() const;

  bool operator==(const WeightedStepSet& other) const;

 private:
  std::vector<WeightedStep> steps_;
  Rational total_;
};

/// The three Dyck N-steps {-1}, {1}, {-1,1}, in this order.
std::vector<NStep> dyck_steps();
/// The seven Motzkin N-steps {-1}, {0}, {1}, {-1,0}, {-1,1}, {0,1}, {-1,0,1}, in this order.
std::vector<NStep> motzkin_steps();

/// Reachable points of an N-walk (or of its compatible meanders).
/// A dead state has no points and stays dead.
class ReachState {
 public:
  /// The empty walk: {0}.
  ReachState();
  static ReachState dead_state();
  /// Sorts and deduplicates; an empty list gives the dead state.
  static ReachState from_points(std::vector<Height> points);

  bool dead() const { return points_.empty(); }
  const std::vector<Height>& points() const { return points_; }
  Height min() const { return points_.front(); }
  Height max() const { return points_.back(); }
  bool contains(Height r) const;

  bool operator==(const ReachState&) const = default;

 private:
  std::vector<Height> points_;
};

/// { r + h : r in state, h in s }. Requires a live state.
ReachState step_reach(const ReachState& state, const NStep& s);

/// step_reach restricted to nonnegative points; empty result is the dead state.
ReachState step_reach_meander(const ReachState& state, const NStep& s);

struct Classification {
  bool walk = true;
  bool bridge = false;
  bool meander = false;
  bool excursion = false;

  bool operator==(const Classification&) const = default;
};

/// Replays the N-walk under both semantics; the empty walk is in every class.
Classification classify(std::span<const NStep> walk);

/// Product of the weights. Throws UnknownStepError for a step outside `set`.
Rational walk_weight(std::span<const NStep> walk, const WeightedStepSet& set);

}  // namespace nwalk
