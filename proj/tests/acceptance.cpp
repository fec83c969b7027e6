// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "nwalk/asym.hpp"
#include "nwalk/exact.hpp"
#include "nwalk/montecarlo.hpp"
#include "nwalk/oracle.hpp"
#include "nwalk/series.hpp"
#include "nwalk/structure.hpp"
#include "nwalk/tunnel.hpp"

using namespace nwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kDyckLimitTol = 1e-6;
constexpr double kMotzkinLimitTol = 1e-3;
constexpr double kAsymRelErrAt32 = 0.10;
constexpr double kRegimeOneRelTol = 0.01;
constexpr double kRegimeTwoRelTol = 0.05;
constexpr double kRegimeThreeRelTol = 0.10;
constexpr double kMonteCarloSigmas = 4.0;
constexpr double kGammaTarget = 0.6183;
constexpr double kGammaTol = 1e-4;
constexpr double kGammaResidualTol = 1e-9;

constexpr double kBudgetSeries = 10;    // seconds, criterion 1
constexpr double kBudgetLimits = 60;    // criterion 3
constexpr double kBudgetMonteCarlo = 300;  // criterion 6

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED: " << what << ';';
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) {
    std::ostringstream what;
    what << "runtime " << secs << " s over " << budget_s << " s";
    out.require(secs < budget_s, what.str());
  }
  if (!out.pass) ++failures;
  std::printf("%s  %d  %-32s %6.1fs %s\n", out.pass ? "PASS" : "FAIL", id, title, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

bool same(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

void dyck_series(Outcome& o) {
  const DyckWeights w;
  const WeightedStepSet set = to_step_set(w);
  const auto mea = count_dyck(Kind::meander, w, 30).counts;
  const auto exc = count_dyck(Kind::excursion, w, 30).counts;
  const auto bri = count_dyck(Kind::bridge, w, 30).counts;
  o.require(same(mea, gf_dyck_meander_unweighted(30).coefficients(30)), "meander DP vs series n<=30");
  o.require(same(exc, gf_dyck_excursion_unweighted(30).coefficients(30)), "excursion DP vs series n<=30");
  o.require(same(bri, gf_dyck_bridge_unweighted(30).coefficients(30)), "bridge DP vs series n<=30");
  o.require(same(mea, gf_dyck_meander(w, 30).coefficients(30)), "meander DP vs product formula n<=30");
  o.require(same(exc, gf_dyck_excursion(w, 30).coefficients(30)), "excursion DP vs kernel formula n<=30");
  for (int n = 0; n <= 10; ++n) {
    o.require(oracle::brute_count(set, Kind::meander, n) == mea[n], "oracle meander n=" + std::to_string(n));
    o.require(oracle::brute_count(set, Kind::excursion, n) == exc[n], "oracle excursion n=" + std::to_string(n));
    o.require(oracle::brute_count(set, Kind::bridge, n) == bri[n], "oracle bridge n=" + std::to_string(n));
  }
  const std::vector<Rational> mea_ref{1, 2, 6, 16, 48};
  const std::vector<Rational> exc_ref{1, 4, 28, 224, 1888};
  const std::vector<Rational> bri_ref{1, 7, 63, 583, 5407};
  for (int k = 0; k < 5; ++k) {
    o.require(mea[k] == mea_ref[k], "meander reference value");
    o.require(exc[2 * k] == exc_ref[k] && bri[2 * k] == bri_ref[k], "even-length reference value");
  }
  o.detail << "oracle=DP=series n<=10, DP=series n<=30;";
}

void motzkin_meander(Outcome& o) {
  const auto dp = count_motzkin(Kind::meander, {}, 20).counts;
  o.require(same(dp, gf_motzkin_meander_unweighted(20).coefficients(20)), "meander DP vs series n<=20");
  const auto walks = count_motzkin(Kind::walk, {}, 20).counts;
  Integer p = 1;
  for (int n = 0; n <= 20; ++n, p *= 7) o.require(walks[n] == Rational(p), "7^n walks at n=" + std::to_string(n));
  o.detail << "DP=series n<=20, walks 7^n;";
}

void limit_ratios(Outcome& o) {
  auto check = [&](const char* name, const CountTable& t, int n, double target, double tol) {
    const double r = ratio(t, n).get_d();
    o.detail << ' ' << name << '=' << fmt(r);
    o.require(std::abs(r - target) <= tol, std::string(name) + " off its limit");
  };
  check("dyck-meander@400", count_dyck(Kind::meander, {}, 400), 400, 0.5, kDyckLimitTol);
  check("dyck-excursion@400", count_dyck(Kind::excursion, {}, 400), 400, 0.25, kDyckLimitTol);
  check("motzkin-meander@200", count_motzkin(Kind::meander, {}, 200), 200, 0.75, kMotzkinLimitTol);
  check("motzkin-excursion@200", count_motzkin(Kind::excursion, {}, 200), 200, 9.0 / 16, kMotzkinLimitTol);
  check("motzkin-bridge@200", count_motzkin(Kind::bridge, {}, 200), 200, 1.0, kMotzkinLimitTol);
  o.detail << ';';
}

void asym_convergence(Outcome& o) {
  for (Family family : {Family::dyck, Family::motzkin}) {
    for (Kind kind : {Kind::walk, Kind::bridge, Kind::meander, Kind::excursion}) {
      const auto table = family == Family::dyck ? count_dyck(kind, {}, 32) : count_motzkin(kind, {}, 32);
      double previous = INFINITY;
      std::string name = std::string(to_string(family)) + "-" + std::string(to_string(kind));
      for (int n : {16, 24, 32}) {
        const double exact = table.counts[n].get_d();
        const double err = std::abs(exact - asym_count(family, kind, n).value()) / exact;
        if (kind != Kind::walk) o.require(err < previous, name + " error not decreasing at n=" + std::to_string(n));
        previous = err;
      }
      o.require(previous < kAsymRelErrAt32, name + " error at 32 = " + fmt(previous));
      if (kind != Kind::walk) o.detail << ' ' << name << '=' << fmt(previous);
    }
  }
  o.detail << " (rel. err at n=32);";
}

void regimes(Outcome& o) {
  // Case (i): constant limit 1/4 for (1/3, 1/3, 1/3).
  const DyckWeights third{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const double r1 = ratio(count_dyck(Kind::excursion, third, 400), 400).get_d();
  o.require(std::abs(r1 / 0.25 - 1) <= kRegimeOneRelTol, "regime i");
  o.detail << " i: ratio@400=" << fmt(r1);

  // Case (ii): half-length 2000 (path length 4000), (p1, p-1, p-1,1) = (1/3, 1/2, 1/6).
  const double n = 2000;
  const DyckWeights two{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  const double r2 = dyck_excursion_even_counts(two, 2000).back().get_d() * std::sqrt(kPi * n);
  o.require(std::abs(r2 / 0.5 - 1) <= kRegimeTwoRelTol, "regime ii");
  o.detail << " ii: ratio*sqrt(pi n)=" << fmt(r2);

  // Case (iii): (1/2, 1/2, 0).
  const DyckWeights three{Rational(1, 2), Rational(1, 2), Rational(0)};
  const double r3 = dyck_excursion_even_counts(three, 2000).back().get_d() * std::sqrt(kPi * n * n * n);
  o.require(std::abs(r3 - 1) <= kRegimeThreeRelTol, "regime iii");
  o.detail << " iii: ratio*sqrt(pi n^3)=" << fmt(r3);

  // Exact symmetry p1 <-> p-1 over several weightings.
  bool symmetric = true;
  for (const auto& [a, b, c] : {std::tuple{Rational(1, 3), Rational(1, 2), Rational(1, 6)},
                                std::tuple{Rational(1, 5), Rational(3, 5), Rational(1, 5)},
                                std::tuple{Rational(2, 7), Rational(4, 7), Rational(1, 7)}}) {
    symmetric = symmetric && count_dyck(Kind::excursion, {a, b, c}, 60).counts ==
                                 count_dyck(Kind::excursion, {b, a, c}, 60).counts;
    symmetric = symmetric && dyck_excursion_even_counts({a, b, c}, 200) == dyck_excursion_even_counts({b, a, c}, 200);
    const ExcursionProbability x(a.get_d(), b.get_d()), y(b.get_d(), a.get_d());
    symmetric = symmetric && x.at(500.0) == y.at(500.0);
  }
  o.require(symmetric, "p1 <-> p-1 symmetry");
  o.detail << " symmetry exact;";
}

void monte_carlo(Outcome& o) {
  const WeightedStepSet set({{NStep{-1}, Rational(1, 2)}, {NStep{1}, Rational(1, 3)}, {NStep{-1, 1}, Rational(1, 6)}});
  constexpr std::int64_t half = 10000;
  const auto result = simulate({set, {2 * half}, 100000, 42, 0});
  const auto& row = result.row(2 * half, Kind::excursion);
  const double target = 1 / (2 * std::sqrt(kPi * half));
  const double z = (row.proportion() - target) / row.standard_error();
  o.require(std::abs(z) <= kMonteCarloSigmas, "excursion proportion beyond 4 SE");
  o.detail << " p=" << fmt(row.proportion()) << " target=" << fmt(target) << " z=" << fmt(z);

  // Thread-count independence on a reduced run of the same configuration.
  const auto one = simulate({set, {2 * half}, 4000, 42, 1});
  const auto three = simulate({set, {2 * half}, 4000, 42, 3});
  o.require(one == three, "results differ between 1 and 3 threads");
  o.detail << " threads 1/3 identical;";
}

void general_machinery(Outcome& o) {
  const auto motzkin_set = WeightedStepSet::unweighted(motzkin_steps());
  const auto a = build_type_automaton(motzkin_set);
  o.require(a.size() == 2, "Motzkin automaton size");
  if (a.size() == 2) {
    o.require(a.states[0] == ShapeType{{0}, {1}, 2, {}}, "state 1 shape");
    o.require(a.states[1] == ShapeType{{0}, {0}, 1, {0}}, "state 2 shape");
  }
  o.require(count_bridges_general(a, 20).counts == count_motzkin(Kind::bridge, {}, 20).counts,
            "general bridges vs Motzkin DP");
  const auto dyck_set = WeightedStepSet::unweighted(dyck_steps());
  o.require(count_bridges_general(dyck_set, 20).counts == count_dyck(Kind::bridge, {}, 20).counts,
            "general bridges vs Dyck DP");
  const DyckWeights dw{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  o.require(count_bridges_general(to_step_set(dw), 20).counts == count_dyck(Kind::bridge, dw, 20).counts,
            "weighted general bridges vs Dyck DP");

  const std::vector<Height> three_five{3, 5};
  o.require(frobenius(three_five) == 7, "frobenius({3,5})");
  std::mt19937_64 rng(2024);
  int checked = 0, agreed = 0;
  while (checked < 50) {
    std::vector<Height> gens;
    for (std::size_t k = 2 + rng() % 3; k > 0; --k) gens.push_back(static_cast<Height>(2 + rng() % 40));
    Height g = 0;
    for (Height x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    ++checked;
    const Height top = 2 * 41 * 41;
    std::vector<char> rep(top + 1, 0);
    rep[0] = 1;
    Height largest_gap = -1;
    for (Height n = 1; n <= top; ++n) {
      for (Height x : gens) {
        if (x <= n && rep[n - x]) rep[n] = 1;
      }
      if (!rep[n]) largest_gap = n;
    }
    agreed += frobenius(gens) == largest_gap;
  }
  o.require(agreed == 50, std::to_string(50 - agreed) + " random Frobenius mismatches");
  o.detail << " 2 states as expected, bridges n<=20 match, F(3,5)=" << frobenius(three_five) << ", " << agreed
           << "/50 brute-force;";
}

void gamma_constant(Outcome& o) {
  const double g = motzkin_gamma();
  const double res = std::abs(motzkin_gamma_residual(g));
  o.require(std::abs(g - kGammaTarget) <= kGammaTol, "gamma value");
  o.require(res < kGammaResidualTol, "quartic residual");
  char buf[96];
  std::snprintf(buf, sizeof buf, " gamma=%.10f residual=%.3g;", g, res);
  o.detail << buf;
}

void networking(Outcome& o) {
  const std::vector<NodeCapability> caps{NodeCapability::encap(), NodeCapability::decap(), NodeCapability::both(),
                                         NodeCapability::passive()};
  std::uint64_t paths = 0, feasible = 0, mismatches = 0, bad_witness = 0;
  for (int len = 0; len <= 10; ++len) {
    std::vector<std::size_t> idx(len, 0);
    CapabilityPath path(len, caps[0]);
    while (true) {
      for (int i = 0; i < len; ++i) path[i] = caps[idx[i]];
      const auto got = path_feasible(path);
      ++paths;
      if (got.feasible != oracle::brute_classify(induced_walk(path)).excursion) ++mismatches;
      if (got.feasible) {
        ++feasible;
        if (!verify_witness(path, got.witness)) ++bad_witness;
      }
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == caps.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  // Sampled beyond the exhaustive range.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(11, 18);
  std::uniform_int_distribution<std::size_t> pick(0, caps.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    CapabilityPath path;
    for (int i = len(rng); i > 0; --i) path.push_back(caps[pick(rng)]);
    const auto got = path_feasible(path);
    ++paths;
    if (got.feasible != oracle::brute_classify(induced_walk(path)).excursion) ++mismatches;
    if (got.feasible && !verify_witness(path, got.witness)) ++bad_witness;
    feasible += got.feasible;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " disagreements with the oracle");
  o.require(bad_witness == 0, std::to_string(bad_witness) + " invalid witnesses");
  o.detail << ' ' << paths << " paths (all of length <= 10 plus 2000 sampled), " << feasible
           << " feasible, all witnesses verified;";
}

}  // namespace

int main() {
  criterion(1, "Dyck series identities", kBudgetSeries, dyck_series);
  criterion(2, "Motzkin meander GF", 0, motzkin_meander);
  criterion(3, "Limit proportions", kBudgetLimits, limit_ratios);
  criterion(4, "Asymptotic convergence", 0, asym_convergence);
  criterion(5, "Probability regimes", 0, regimes);
  criterion(6, "Monte Carlo excursions", kBudgetMonteCarlo, monte_carlo);
  criterion(7, "General machinery", 0, general_machinery);
  criterion(8, "Gamma constant", 0, gamma_constant);
  criterion(9, "Tunnel feasibility", 0, networking);
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
