#include <doctest.h>

#include "nwalk/errors.hpp"
#include "nwalk/series.hpp"
#include "test_util.hpp"

using namespace nwalk;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Series poly(std::initializer_list<long> c, std::int64_t prec) { return Series(ints(c), prec); }

}  // namespace

TEST_CASE("series arithmetic") {
  const auto p = poly({1, 1}, 10) * poly({1, -1}, 10);
  CHECK(p.coefficients(9) == ints({1, 0, -1, 0, 0, 0, 0, 0, 0, 0}));

  const auto geo = Series::constant(1, 12) / poly({1, -3}, 12);
  Rational pow = 1;
  for (int n = 0; n < 12; ++n, pow *= 3) CHECK(geo.coefficient(n) == pow);

  const auto q = poly({0, 0, 2, 1}, 10) / Series::monomial(2, 1, 10);
  CHECK(q.valuation() == 1);
  CHECK(q.coefficient(1) == 1);
  CHECK(q.coefficient(2) == Rational(1, 2));
  CHECK(q.precision() == 9);

  CHECK_THROWS_AS(poly({1}, 5) / Series(5), ValidationError);
  CHECK_THROWS_AS(Series::monomial(1, -1, 5).coefficients(3), ValidationError);
  CHECK_THROWS_AS(poly({1}, 5).coefficient(5), ValidationError);
}

TEST_CASE("series sqrt") {
  const auto s = sqrt(poly({1, 0, -8}, 11));
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(2) == -4);
  CHECK(s.coefficient(4) == -8);
  CHECK((s * s).coefficients(10) == poly({1, 0, -8}, 11).coefficients(10));
  CHECK(sqrt(poly({1}, 4)).coefficients(3) == ints({1, 0, 0, 0}));
  const auto prod = poly({1, 2}, 12) * poly({1, -6}, 12);
  const auto r = sqrt(prod);
  CHECK((r * r).coefficients(11) == prod.coefficients(11));
  CHECK_THROWS_AS(sqrt(poly({2, 1}, 4)), ValidationError);
  CHECK_THROWS_AS(sqrt(poly({-1, 1}, 4)), ValidationError);
  CHECK_THROWS_AS(sqrt(poly({0, 1}, 4)), ValidationError);
  CHECK(sqrt(Series({Rational(4, 9)}, 3)).coefficient(0) == Rational(2, 3));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9), len(1, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{1};
    for (int i = len(rng); i > 0; --i) c.push_back(Rational(coef(rng), 1 + static_cast<int>(rng() % 4)));
    for (auto& x : c) x.canonicalize();
    const Series a(c, 25);
    const auto root = sqrt(a);
    CHECK((root * root).coefficients(24) == a.coefficients(24));
  }
}

TEST_CASE("unweighted closed forms") {
  CHECK(gf_dyck_meander({}, 4).coefficients(4) == ints({1, 2, 6, 16, 48}));
  CHECK(gf_dyck_excursion({}, 8).coefficients(8) == ints({1, 0, 4, 0, 28, 0, 224, 0, 1888}));
  CHECK(gf_dyck_bridge_unweighted(8).coefficients(8) == ints({1, 0, 7, 0, 63, 0, 583, 0, 5407}));
  const auto bridge = gf_dyck_bridge_unweighted(40);
  for (int n = 1; n <= 40; n += 2) CHECK(bridge.coefficient(n) == 0);
  const auto motzkin = gf_motzkin_meander_unweighted(7);
  CHECK(motzkin.coefficients(7) == ints({1, 6, 40, 272, 1872, 12960, 90048, 627072}));
  CHECK(gf_dyck_meander({}).coefficients(kDefaultOrder) == gf_dyck_meander_unweighted().coefficients(kDefaultOrder));
  CHECK(gf_dyck_excursion({}).coefficients(kDefaultOrder) ==
        gf_dyck_excursion_unweighted().coefficients(kDefaultOrder));
  CHECK(gf_walks(WeightedStepSet::unweighted(motzkin_steps()), 5).coefficient(5) == 16807);
}

TEST_CASE("closed forms equal the DP counts") {
  SUBCASE("unweighted") {
    CHECK(gf_dyck_meander({}, 30).coefficients(30) == count_dyck(Kind::meander, {}, 30).counts);
    CHECK(gf_dyck_excursion({}, 30).coefficients(30) == count_dyck(Kind::excursion, {}, 30).counts);
    CHECK(gf_dyck_bridge_unweighted(30).coefficients(30) == count_dyck(Kind::bridge, {}, 30).counts);
    CHECK(gf_motzkin_meander_unweighted(20).coefficients(20) == count_motzkin(Kind::meander, {}, 20).counts);
  }
  SUBCASE("weighted") {
    const DyckWeights third{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    CHECK(gf_dyck_excursion(third, 30).coefficients(30) == count_dyck(Kind::excursion, third, 30).counts);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 4; ++trial) {
      const DyckWeights w{testing::random_weight(rng), testing::random_weight(rng), testing::random_weight(rng)};
      CHECK(gf_dyck_meander(w, 30).coefficients(30) == count_dyck(Kind::meander, w, 30).counts);
      CHECK(gf_dyck_excursion(w, 30).coefficients(30) == count_dyck(Kind::excursion, w, 30).counts);
    }
  }
}

TEST_CASE("excursion closed form is symmetric in p_-1 and p_1") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const DyckWeights w{testing::random_weight(rng), testing::random_weight(rng), testing::random_weight(rng)};
    CHECK(gf_dyck_excursion(w, 24).coefficients(24) == gf_dyck_excursion({w.up, w.down, w.both}, 24).coefficients(24));
  }
}

TEST_CASE("even excursion counts from the u = t^2 form") {
  std::mt19937_64 rng(14);
  std::vector<DyckWeights> cases{{}, {Rational(1, 2), Rational(1, 2), Rational(0)},
                                 {Rational(1, 2), Rational(1, 3), Rational(1, 6)}};
  for (int trial = 0; trial < 4; ++trial) {
    cases.push_back({testing::random_weight(rng), testing::random_weight(rng), testing::random_weight(rng)});
  }
  for (const auto& w : cases) {
    const auto fast = dyck_excursion_even_counts(w, 15);
    const auto dp = count_dyck(Kind::excursion, w, 30).counts;
    for (int k = 0; k <= 15; ++k) CHECK(fast[k] == dp[2 * k]);
  }
  CHECK_THROWS_AS(dyck_excursion_even_counts({1, 0, 1}, 3), ValidationError);
}

TEST_CASE("closed forms reject unusable weights") {
  CHECK_THROWS_AS(gf_dyck_excursion({1, 0, 1}, 4), ValidationError);
  CHECK_THROWS_AS(gf_dyck_meander({0, 1, 0}, 4), ValidationError);
  CHECK_THROWS_AS(gf_dyck_meander({}, -1), ValidationError);
}
