#include "nwalk/selftest.hpp"

#include "nwalk/oracle.hpp"
#include "nwalk/series.hpp"

namespace nwalk {

namespace {

SelftestCheck compare(std::string name, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t n = 0; n < a.size() && n < b.size(); ++n) {
    if (a[n] != b[n]) {
      return {std::move(name), false, "first mismatch at n=" + std::to_string(n) + ": " + to_string(a[n]) + " vs " +
                                          to_string(b[n])};
    }
  }
  if (a.size() != b.size()) return {std::move(name), false, "length mismatch"};
  return {std::move(name), true, "n<=" + std::to_string(a.size() - 1)};
}

std::vector<Rational> oracle_counts(const WeightedStepSet& set, Kind kind, int max_n) {
  std::vector<Rational> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(oracle::brute_count(set, kind, n));
  return out;
}

}  // namespace

SelftestReport run_selftest() {
  SelftestReport report;
  const DyckWeights dyck;
  const WeightedStepSet dyck_set = to_step_set(dyck);
  constexpr int kDyckN = 8;
  for (Kind kind : {Kind::walk, Kind::bridge, Kind::meander, Kind::excursion}) {
    const std::string k(to_string(kind));
    const auto dp = count_dyck(kind, dyck, kDyckN).counts;
    report.checks.push_back(compare("dyck " + k + ": oracle vs dp", oracle_counts(dyck_set, kind, kDyckN), dp));
  }
  report.checks.push_back(compare("dyck meander: dp vs series", count_dyck(Kind::meander, dyck, 20).counts,
                                  gf_dyck_meander_unweighted(20).coefficients(20)));
  report.checks.push_back(compare("dyck excursion: dp vs series", count_dyck(Kind::excursion, dyck, 20).counts,
                                  gf_dyck_excursion_unweighted(20).coefficients(20)));
  report.checks.push_back(compare("dyck bridge: dp vs series", count_dyck(Kind::bridge, dyck, 20).counts,
                                  gf_dyck_bridge_unweighted(20).coefficients(20)));

  const MotzkinWeights motzkin;
  const WeightedStepSet motzkin_set = to_step_set(motzkin);
  constexpr int kMotzkinN = 4;
  for (Kind kind : {Kind::bridge, Kind::meander, Kind::excursion}) {
    const std::string k(to_string(kind));
    report.checks.push_back(compare("motzkin " + k + ": oracle vs dp", oracle_counts(motzkin_set, kind, kMotzkinN),
                                    count_motzkin(kind, motzkin, kMotzkinN).counts));
  }
  report.checks.push_back(compare("motzkin meander: dp vs series", count_motzkin(Kind::meander, motzkin, 20).counts,
                                  gf_motzkin_meander_unweighted(20).coefficients(20)));

  SelftestCheck feasible{"feasibility vs oracle", true, "all paths of length <= 6"};
  const std::vector<NodeCapability> caps{NodeCapability::encap(), NodeCapability::decap(), NodeCapability::both(),
                                         NodeCapability::passive()};
  for (int len = 0; len <= 6 && feasible.passed; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      CapabilityPath path;
      for (auto i : idx) path.push_back(caps[i]);
      const auto got = path_feasible(path);
      const bool want = oracle::brute_classify(induced_walk(path)).excursion;
      if (got.feasible != want || (got.feasible && !verify_witness(path, got.witness))) {
        feasible = {feasible.name, false, "mismatch on " + format_capability_path(path)};
        break;
      }
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == caps.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  report.checks.push_back(feasible);
  return report;
}

}  // namespace nwalk
