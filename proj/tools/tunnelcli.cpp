#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "nwalk/dsl.hpp"
#include "nwalk/errors.hpp"
#include "nwalk/io.hpp"
#include "nwalk/selftest.hpp"
#include "nwalk/series.hpp"

namespace {

using namespace nwalk;

constexpr int kDyckCountLimit = 2000;
constexpr int kMotzkinCountLimit = 400;
constexpr int kGeneralCountLimit = 200;
constexpr int kSeriesOrderLimit = 2000;
constexpr std::uint64_t kSimulationStepBudget = 100'000'000'000ULL;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

double parse_probability(const std::string& text) {
  try {
    return parse_rational(text).get_d();
  } catch (const ValidationError&) {
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ValidationError("malformed probability '" + text + "'");
  }
  return v;
}

DyckWeights parse_dyck_weights(const std::string& text) {
  std::vector<Rational> w;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    w.push_back(parse_rational(text.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (w.size() != 3) throw ValidationError("--weights expects down,up,both");
  return {w[0], w[1], w[2]};
}

void check_limit(std::int64_t n, std::int64_t limit, const std::string& what) {
  if (n > limit) throw BudgetExceeded(what + " is limited to " + std::to_string(limit));
}

CountTable run_count(const std::string& family_name, const std::string& steps, const std::string& kind_name,
                     int max_n) {
  if (max_n < 0) throw ValidationError("--max-n must be >= 0");
  const Family family = parse_family(family_name);
  const Kind kind = parse_kind(kind_name);
  const WeightedStepSet set = parse_step_set(steps);
  switch (family) {
    case Family::dyck:
      check_limit(max_n, kDyckCountLimit, "--max-n for the dyck family");
      return count_dyck(kind, dyck_weights_from(set), max_n);
    case Family::motzkin:
      check_limit(max_n, kMotzkinCountLimit, "--max-n for the motzkin family");
      return count_motzkin(kind, motzkin_weights_from(set), max_n);
    default:
      check_limit(max_n, kGeneralCountLimit, "--max-n for the general family");
      if (kind == Kind::bridge) return count_bridges_general(set, max_n);
      if (kind == Kind::walk) {
        std::vector<Rational> counts{Rational(1)};
        for (int n = 1; n <= max_n; ++n) counts.push_back(counts.back() * set.total_weight());
        return {kind, set, counts};
      }
      throw ValidationError("the general family supports --kind walk and bridge");
  }
}

SeriesReport run_series(const std::string& form, const std::string& weights, int order) {
  if (order < 0) throw ValidationError("--order must be >= 0");
  check_limit(order, kSeriesOrderLimit, "--order");
  SeriesReport r{form, std::nullopt, order, {}};
  if (!weights.empty()) r.weights = parse_dyck_weights(weights);
  Series s;
  if (form == "dyck-meander") {
    s = r.weights ? gf_dyck_meander(*r.weights, order) : gf_dyck_meander_unweighted(order);
  } else if (form == "dyck-excursion") {
    s = r.weights ? gf_dyck_excursion(*r.weights, order) : gf_dyck_excursion_unweighted(order);
  } else if (form == "dyck-bridge" || form == "motzkin-meander") {
    if (r.weights) throw ValidationError("--weights is only supported for dyck-meander and dyck-excursion");
    s = form == "dyck-bridge" ? gf_dyck_bridge_unweighted(order) : gf_motzkin_meander_unweighted(order);
  } else {
    throw ValidationError("unknown form '" + form + "'");
  }
  r.coefficients = s.coefficients(order);
  return r;
}

std::string kinds_csv(const CountTable& t) {
  std::string out = "n,count\n";
  for (std::size_t n = 0; n < t.counts.size(); ++n) out += std::to_string(n) + ',' + to_string(t.counts[n]) + '\n';
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic enumeration of N-walks, Monte Carlo and tunnel-path feasibility"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "exact counts by length");
  std::string family = "dyck", steps = "default", kind = "walk";
  int max_n = 10;
  bool csv = false;
  count->add_option("--family", family, "dyck | motzkin | general")->capture_default_str();
  count->add_option("--steps", steps, "step-set DSL")->capture_default_str();
  count->add_option("--kind", kind, "walk | bridge | meander | excursion")->capture_default_str();
  count->add_option("--max-n", max_n, "largest length")->capture_default_str();
  count->add_flag("--csv", csv, "n,count lines instead of JSON");

  auto* series = app.add_subcommand("series", "closed-form generating function coefficients");
  std::string form, weights;
  int order = 20;
  series->add_option("--form", form, "dyck-meander | dyck-excursion | dyck-bridge | motzkin-meander")->required();
  series->add_option("--weights", weights, "Dyck weights down,up,both (rationals)");
  series->add_option("--order", order, "last coefficient")->capture_default_str();

  auto* asym = app.add_subcommand("asym", "asymptotic estimates");
  asym->require_subcommand(0, 1);
  std::string afamily = "dyck", akind = "meander";
  std::int64_t an = 32;
  asym->add_option("--family", afamily, "dyck | motzkin")->capture_default_str();
  asym->add_option("--kind", akind, "walk | bridge | meander | excursion")->capture_default_str();
  asym->add_option("--n", an, "length")->capture_default_str();
  auto* prob = asym->add_subcommand("prob", "Dyck excursion probability at half-length n");
  std::string p1_text, pm1_text;
  std::int64_t pn = 1000;
  prob->add_option("--p1", p1_text, "probability of {1}")->required();
  prob->add_option("--pm1", pm1_text, "probability of {-1}")->required();
  prob->add_option("--n", pn, "half-length (walk length 2n)")->capture_default_str();

  auto* automaton = app.add_subcommand("automaton", "type automaton of a step set");
  std::string asteps = "motzkin";
  AutomatonOptions aopts;
  automaton->add_option("--steps", asteps, "step-set DSL")->capture_default_str();
  automaton->add_option("--margin", aopts.stabilization_margin, "stabilisation margin")->capture_default_str();
  automaton->add_option("--max-cap", aopts.max_cap, "largest count cap")->capture_default_str();

  auto* frob = app.add_subcommand("frobenius", "Frobenius number");
  std::string gens, fsteps;
  frob->add_option("--gens", gens, "comma-separated generators");
  frob->add_option("--steps", fsteps, "step-set DSL: report the semigroup of its N-steps");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo class proportions");
  std::string ssteps = "{-1}:1/3;{1}:1/3;{-1,1}:1/3", lengths = "10,100,1000";
  SimConfig sim{WeightedStepSet::unweighted(dyck_steps()), {}, 100000, 42, 0};
  bool scsv = false;
  simulate->add_option("--steps", ssteps, "step-set DSL with weights summing to 1")->capture_default_str();
  simulate->add_option("--lengths", lengths, "comma-separated lengths")->capture_default_str();
  simulate->add_option("--runs", sim.runs, "runs per length")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "seed")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "worker threads (0: all cores)")->capture_default_str();
  simulate->add_flag("--csv", scsv, "CSV instead of JSON");

  auto* feasible = app.add_subcommand("feasible", "tunnel path feasibility");
  feasible->require_subcommand(0, 1);
  std::string path_text;
  auto* path_opt = feasible->add_option("--path", path_text, "comma-separated encap|decap|both|passive|{h,...}");
  auto* fprob = feasible->add_subcommand("prob", "probability that a random path is feasible");
  std::string dist, mode = "exact";
  std::int64_t fn = 0;
  fprob->add_option("--dist", dist, "capability=probability,...")->required();
  fprob->add_option("--n", fn, "number of nodes")->required();
  fprob->add_option("--mode", mode, "exact | asym")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "small-n cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (count->parsed()) {
    const auto table = run_count(family, steps, kind, max_n);
    if (csv) {
      std::cout << kinds_csv(table);
    } else {
      emit(table);
    }
  } else if (series->parsed()) {
    emit(run_series(form, weights, order));
  } else if (prob->parsed()) {
    const ExcursionProbability model(parse_probability(p1_text), parse_probability(pm1_text));
    emit(ProbabilityReport{model.p1(), model.pm1(), static_cast<double>(pn), model.decay_base(),
                           model.at(static_cast<double>(pn))});
  } else if (asym->parsed()) {
    emit(asym_count(parse_family(afamily), parse_kind(akind), an));
  } else if (automaton->parsed()) {
    emit(build_type_automaton(parse_step_set(asteps), aopts));
  } else if (frob->parsed()) {
    if (gens.empty() == fsteps.empty()) throw ValidationError("give exactly one of --gens and --steps");
    if (!gens.empty()) {
      const auto g = parse_int_list(gens);
      emit(FrobeniusReport{g, frobenius(g)});
    } else {
      emit(semigroup_info(parse_step_set(fsteps)));
    }
  } else if (simulate->parsed()) {
    sim.stepset = parse_step_set(ssteps);
    sim.lengths = parse_int_list(lengths);
    std::uint64_t work = 0;
    for (auto n : sim.lengths) work += static_cast<std::uint64_t>(std::max<std::int64_t>(n, 0)) * sim.runs;
    if (work > kSimulationStepBudget) throw BudgetExceeded("simulation exceeds the step budget");
    const auto result = nwalk::simulate(sim);
    if (scsv) {
      std::cout << to_csv(result);
    } else {
      emit(result);
    }
  } else if (fprob->parsed()) {
    emit(feasibility_probability(fn, parse_capability_distribution(dist), parse_feasibility_mode(mode)));
  } else if (feasible->parsed()) {
    if (path_opt->count() == 0) throw ValidationError("feasible needs --path or the prob subcommand");
    const auto path = parse_capability_path(path_text);
    emit(FeasibilityReport{path, path_feasible(path)});
  } else if (selftest->parsed()) {
    const auto report = run_selftest();
    emit(report);
    return report.passed() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
