#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nwalk/errors.hpp"
#include "nwalk/montecarlo.hpp"
#include "nwalk/oracle.hpp"
#include "nwalk/rng.hpp"
#include "test_util.hpp"

using namespace nwalk;

TEST_CASE("threefry2x32-20 known answers") {
  CHECK(threefry2x32({0, 0}, {0, 0}) == Threefry2x32Word{0x6b200159u, 0x99ba4efeu});
  CHECK(threefry2x32({0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
        Threefry2x32Word{0x1cb996fcu, 0xbb002be7u});
  CHECK(threefry2x32({0x13198a2eu, 0x03707344u}, {0x243f6a88u, 0x85a308d3u}) ==
        Threefry2x32Word{0xc4923a9cu, 0x483df7a0u});
}

TEST_CASE("counter stream") {
  CounterStream a({1, 2}, 7), b({1, 2}, 7), c({1, 2}, 8);
  const auto block = threefry2x32({1, 2}, {0, 7});
  CHECK(a.next32() == block[0]);
  CHECK(a.next32() == block[1]);
  CHECK(b.next64() == (std::uint64_t{block[0]} | (std::uint64_t{block[1]} << 32)));
  CHECK(c.next32() != block[0]);
  CounterStream d({3, 4}, 0);
  std::array<int, 6> hist{};
  for (int i = 0; i < 60000; ++i) ++hist[d.below(6)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  CHECK(d.below(1) == 0);
  const std::uint64_t big = (std::uint64_t{1} << 40) + 3;
  for (int i = 0; i < 100; ++i) CHECK(d.below(big) < big);
}

TEST_CASE("streaming classifier agrees with the oracle") {
  std::mt19937_64 rng(31);
  const std::vector<WeightedStepSet> sets{WeightedStepSet::unweighted(dyck_steps()),
                                          WeightedStepSet::unweighted(motzkin_steps()),
                                          WeightedStepSet::unweighted({NStep{-2, 1}, NStep{0, 3}, NStep{-1}})};
  for (const auto& set : sets) {
    StreamingClassifier cls(set);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    for (int i = 0; i < 10000 / static_cast<int>(sets.size()); ++i) {
      cls.reset();
      NWalk w;
      for (auto n = rng() % 13; n > 0; --n) {
        const auto k = pick(rng);
        w.push_back(set.step(k));
        cls.push(k);
      }
      CHECK(cls.result() == oracle::brute_classify(w));
    }
  }
}

TEST_CASE("simulation matches exact ratios") {
  const DyckWeights third{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const auto r = simulate({to_step_set(third), {4}, 100000, 42, 0});
  const auto& exc = r.row(4, Kind::excursion);
  CHECK(std::abs(exc.proportion() - 28.0 / 81) < 4 * exc.standard_error());
  CHECK(r.row(4, Kind::walk).proportion() == 1);

  const DyckWeights skew{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  MotzkinWeights uniform;
  for (auto& x : uniform.w) x = Rational(1, 7);
  const std::vector<std::pair<WeightedStepSet, bool>> cases{{to_step_set(skew), true}, {to_step_set(uniform), false}};
  for (const auto& [set, dyck] : cases) {
    const auto sim = simulate({set, {1, 2, 5, 8}, 20000, 7, 0});
    for (std::int64_t n : {1, 2, 5, 8}) {
      for (Kind kind : {Kind::bridge, Kind::meander, Kind::excursion}) {
        const auto table = dyck ? count_dyck(kind, skew, 8) : count_motzkin(kind, uniform, 8);
        const double exact = ratio(table, static_cast<std::size_t>(n)).get_d();
        const auto& row = sim.row(n, kind);
        INFO("n=", n, " kind=", to_string(kind));
        CHECK(std::abs(row.proportion() - exact) <= 5 * std::max(row.standard_error(), 1e-9));
      }
    }
  }

  const WeightedStepSet general({{NStep{-2, 1}, Rational(1, 2)}, {NStep{0, 3}, Rational(1, 2)}});
  const auto bridges = count_bridges_general(general, 6);
  const auto gsim = simulate({general, {6}, 20000, 9, 0});
  const auto& row = gsim.row(6, Kind::bridge);
  CHECK(std::abs(row.proportion() - ratio(bridges, 6).get_d()) < 5 * row.standard_error());
}

TEST_CASE("simulation is deterministic") {
  const auto set = to_step_set(DyckWeights{Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  const auto one = simulate({set, {10, 50}, 3000, 123, 1});
  CHECK(one == simulate({set, {10, 50}, 3000, 123, 1}));
  CHECK(one == simulate({set, {10, 50}, 3000, 123, 3}));
  CHECK(one == simulate({set, {10, 50}, 3000, 123, 8}));
  CHECK(to_csv(one) == to_csv(simulate({set, {10, 50}, 3000, 123, 4})));
  CHECK_FALSE(one == simulate({set, {10, 50}, 3000, 124, 1}));
}

TEST_CASE("simulation output and validation") {
  const auto set = to_step_set(DyckWeights{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  const auto r = simulate({set, {0, 3}, 10, 5, 1});
  CHECK(r.rows.size() == 8);
  CHECK(r.row(0, Kind::excursion).proportion() == 1);
  const auto csv = to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,kind,proportion,stderr,runs,seed");
  std::getline(in, line);
  CHECK(line == "0,walk,1,0,10,5");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 7);

  CHECK_THROWS_AS(simulate({to_step_set(DyckWeights{}), {3}, 10, 1, 1}), ValidationError);
  CHECK_THROWS_AS(simulate({set, {3}, 0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(simulate({set, {-1}, 10, 1, 1}), ValidationError);
  CHECK_THROWS_AS(r.row(7, Kind::walk), ValidationError);
}
