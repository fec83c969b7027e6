#include "nwalk/core.hpp"

#include <algorithm>
#include <cassert>

#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

std::vector<Height> sorted_unique(std::vector<Height> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NStep::NStep(std::initializer_list<Height> heights) : NStep(std::vector<Height>(heights)) {}

NStep::NStep(std::vector<Height> heights) : heights_(sorted_unique(std::move(heights))) {
  if (heights_.empty()) throw ValidationError("an N-step must contain at least one height");
}

bool NStep::contains(Height h) const { return std::binary_search(heights_.begin(), heights_.end(), h); }

std::string NStep::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(heights_[i]);
  }
  return out + "}";
}

WeightedStepSet::WeightedStepSet(std::vector<WeightedStep> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw ValidationError("a step set needs at least one N-step");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].weight <= 0) {
      throw ValidationError("weight of " + steps_[i].step.to_string() + " must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (steps_[j].step == steps_[i].step) {
        throw ValidationError("duplicate N-step " + steps_[i].step.to_string());
      }
    }
    total_ += steps_[i].weight;
  }
}

WeightedStepSet WeightedStepSet::unweighted(std::vector<NStep> steps) {
  std::vector<WeightedStep> ws;
  ws.reserve(steps.size());
  for (auto& s : steps) ws.push_back({std::move(s), Rational(1)});
  return WeightedStepSet(std::move(ws));
}

std::optional<std::size_t> WeightedStepSet::index_of(const NStep& s) const {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].step == s) return i;
  }
  return std::nullopt;
}

const Rational& WeightedStepSet::weight_of(const NStep& s) const {
  const auto i = index_of(s);
  if (!i) throw UnknownStepError("N-step " + s.to_string() + " is not in the step set");
  return steps_[*i].weight;
}

Height WeightedStepSet::min_height() const {
  Height m = steps_.front().step.min();
  for (const auto& ws : steps_) m = std::min(m, ws.step.min());
  return m;
}

Height WeightedStepSet::max_height() const {
  Height m = steps_.front().step.max();
  for (const auto& ws : steps_) m = std::max(m, ws.step.max());
  return m;
}

bool WeightedStepSet::is_motzkin_subset() const {
  return std::all_of(steps_.begin(), steps_.end(),
                     [](const WeightedStep& ws) { return ws.step.min() >= -1 && ws.step.max() <= 1; });
}

bool WeightedStepSet::operator==(const WeightedStepSet& other) const {
  if (steps_.size() != other.steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].step != other.steps_[i].step || steps_[i].weight != other.steps_[i].weight) return false;
  }
  return true;
}

std::vector<NStep> dyck_steps() { return {NStep{-1}, NStep{1}, NStep{-1, 1}}; }

std::vector<NStep> motzkin_steps() {
  return {NStep{-1}, NStep{0}, NStep{1}, NStep{-1, 0}, NStep{-1, 1}, NStep{0, 1}, NStep{-1, 0, 1}};
}

ReachState::ReachState() : points_{0} {}

ReachState ReachState::dead_state() {
  ReachState s;
  s.points_.clear();
  return s;
}

ReachState ReachState::from_points(std::vector<Height> points) {
  ReachState s;
  s.points_ = sorted_unique(std::move(points));
  return s;
}

bool ReachState::contains(Height r) const { return std::binary_search(points_.begin(), points_.end(), r); }

ReachState step_reach(const ReachState& state, const NStep& s) {
  assert(!state.dead());
  std::vector<Height> out;
  out.reserve(state.points().size() * s.size());
  for (Height h : s.heights()) {
    for (Height r : state.points()) out.push_back(r + h);
  }
  return ReachState::from_points(std::move(out));
}

ReachState step_reach_meander(const ReachState& state, const NStep& s) {
  if (state.dead()) return state;
  std::vector<Height> out;
  out.reserve(state.points().size() * s.size());
  for (Height h : s.heights()) {
    for (Height r : state.points()) {
      if (r + h >= 0) out.push_back(r + h);
    }
  }
  return ReachState::from_points(std::move(out));
}

Classification classify(std::span<const NStep> walk) {
  ReachState all;
  ReachState nonneg;
  for (const auto& s : walk) {
    all = step_reach(all, s);
    nonneg = step_reach_meander(nonneg, s);
  }
  Classification c;
  c.bridge = all.contains(0);
  c.meander = !nonneg.dead();
  c.excursion = c.meander && nonneg.contains(0);
  return c;
}

Rational walk_weight(std::span<const NStep> walk, const WeightedStepSet& set) {
  Rational w = 1;
  for (const auto& s : walk) w *= set.weight_of(s);
  return w;
}

}  // namespace nwalk
