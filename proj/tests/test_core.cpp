#include <doctest.h>

#include <algorithm>

#include "nwalk/core.hpp"
#include "nwalk/errors.hpp"
#include "test_util.hpp"

using namespace nwalk;

namespace {

std::vector<Height> pts(const ReachState& s) { return s.points(); }

}  // namespace

TEST_CASE("NStep keeps sorted distinct heights") {
  NStep s{1, -1, 1};
  CHECK(s.heights().size() == 2);
  CHECK(s.min() == -1);
  CHECK(s.max() == 1);
  CHECK(s.to_string() == "{-1,1}");
  CHECK_THROWS_AS(NStep(std::vector<Height>{}), ValidationError);
}

TEST_CASE("weighted step sets validate their weights") {
  CHECK_THROWS_AS(WeightedStepSet({{NStep{1}, Rational(0)}}), ValidationError);
  CHECK_THROWS_AS(WeightedStepSet({{NStep{1}, Rational(1)}, {NStep{1}, Rational(2)}}), ValidationError);
  const WeightedStepSet p({{NStep{-1}, Rational(1, 3)}, {NStep{1}, Rational(1, 3)}, {NStep{-1, 1}, Rational(1, 3)}});
  CHECK(p.is_probability());
  CHECK_FALSE(WeightedStepSet::unweighted(dyck_steps()).is_probability());
}

TEST_CASE("step_reach is a Minkowski sum") {
  CHECK(pts(step_reach(ReachState{}, NStep{-1, 1})) == std::vector<Height>{-1, 1});
  CHECK(pts(step_reach(ReachState::from_points({0, 3}), NStep{0, 1})) == std::vector<Height>{0, 1, 3, 4});

  const NWalk w{NStep{1}, NStep{-1, 1}, NStep{-1, 1}, NStep{-1}};
  const std::vector<std::vector<Height>> expected{{1}, {0, 2}, {-1, 1, 3}, {-2, 0, 2}};
  ReachState r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    r = step_reach(r, w[i]);
    CHECK(r.points() == expected[i]);
  }
}

TEST_CASE("step_reach_meander drops negative points and dies") {
  CHECK(step_reach_meander(ReachState{}, NStep{-1}).dead());
  CHECK(pts(step_reach_meander(ReachState{}, NStep{-1, 1})) == std::vector<Height>{1});
  CHECK(pts(step_reach_meander(ReachState::from_points({0, 2}), NStep{-1})) == std::vector<Height>{1});
  const auto dead = ReachState::dead_state();
  CHECK(step_reach_meander(dead, NStep{1}).dead());
}

TEST_CASE("classify") {
  const NWalk w{NStep{1}, NStep{-1, 1}, NStep{-1, 1}, NStep{-1}};
  CHECK(classify(w) == Classification{true, true, true, true});
  CHECK(classify(NWalk{}) == Classification{true, true, true, true});
  CHECK(classify(NWalk{NStep{-1}}) == Classification{true, false, false, false});
}

TEST_CASE("walk_weight") {
  const WeightedStepSet third({{NStep{-1}, Rational(1, 3)}, {NStep{1}, Rational(1, 3)}, {NStep{-1, 1}, Rational(1, 3)}});
  CHECK(walk_weight(NWalk{}, third) == 1);
  const NWalk w{NStep{1}, NStep{-1, 1}, NStep{-1, 1}, NStep{-1}};
  CHECK(walk_weight(w, third) == Rational(1, 81));
  CHECK(walk_weight(w, WeightedStepSet::unweighted(dyck_steps())) == 1);
  CHECK_THROWS_AS(walk_weight(NWalk{NStep{0}}, third), UnknownStepError);
}

TEST_CASE("Dyck reach sets are arithmetic progressions of step 2 with matching parities") {
  std::mt19937_64 rng(11);
  const auto steps = dyck_steps();
  for (int trial = 0; trial < 400; ++trial) {
    const auto w = testing::random_walk(rng, steps, rng() % 21);
    ReachState all, nonneg;
    for (std::size_t i = 0; i < w.size(); ++i) {
      all = step_reach(all, w[i]);
      nonneg = step_reach_meander(nonneg, w[i]);
      const auto len = static_cast<Height>(i + 1);
      for (const ReachState* r : {&all, &nonneg}) {
        if (r->dead()) continue;
        std::vector<Height> expect;
        for (Height x = r->min(); x <= r->max(); x += 2) expect.push_back(x);
        CHECK(r->points() == expect);
        CHECK((r->min() - len) % 2 == 0);
        CHECK((r->max() - len) % 2 == 0);
      }
    }
  }
}

TEST_CASE("classification and reach-set properties on random walks") {
  std::mt19937_64 rng(12);
  const std::vector<std::vector<NStep>> families{
      dyck_steps(), motzkin_steps(), {NStep{-2, 1}, NStep{0, 3}, NStep{-1}}};
  for (const auto& steps : families) {
    for (int trial = 0; trial < 300; ++trial) {
      auto w = testing::random_walk(rng, steps, rng() % 16);
      const auto c = classify(w);
      if (c.excursion) {
        CHECK(c.meander);
        CHECK(c.bridge);
      }

      ReachState all, nonneg;
      for (const auto& s : w) {
        all = step_reach(all, s);
        nonneg = step_reach_meander(nonneg, s);
        for (Height p : nonneg.points()) CHECK(all.contains(p));
      }

      std::shuffle(w.begin(), w.end(), rng);
      ReachState permuted;
      for (const auto& s : w) permuted = step_reach(permuted, s);
      CHECK(permuted == all);
    }
  }
}
