#include "nwalk/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <thread>

#include "nwalk/errors.hpp"
#include "nwalk/rng.hpp"

namespace nwalk {

StreamingClassifier::StreamingClassifier(const WeightedStepSet& set)
    : StreamingClassifier(set, set.is_motzkin_subset()
                                   ? nullptr
                                   : std::make_shared<const TypeAutomaton>(build_type_automaton(set))) {}

StreamingClassifier::StreamingClassifier(const WeightedStepSet& set, std::shared_ptr<const TypeAutomaton> automaton)
    : set_(&set), compact_(set.is_motzkin_subset()), automaton_(std::move(automaton)) {
  if (!compact_ && !automaton_) throw ValidationError("a general step set needs its type automaton");
  reset();
}

void StreamingClassifier::reset() {
  walk_ = MotzkinState{};
  meander_ = MotzkinState{};
  if (automaton_) pos_ = {automaton_->initial, 0, 0};
  meander_reach_ = ReachState{};
}

void StreamingClassifier::push(std::size_t i) {
  const NStep& s = set_->step(i);
  if (compact_) {
    walk_ = motzkin_walk_step(walk_, s);
    if (meander_) meander_ = motzkin_meander_step(*meander_, s);
    return;
  }
  pos_.state = automaton_->transitions[static_cast<std::size_t>(pos_.state)][i];
  pos_.min += s.min();
  pos_.max += s.max();
  if (!meander_reach_.dead()) meander_reach_ = step_reach_meander(meander_reach_, s);
}

Classification StreamingClassifier::result() const {
  Classification c;
  if (compact_) {
    c.bridge = motzkin_reaches_zero(walk_);
    c.meander = meander_.has_value();
    c.excursion = c.meander && motzkin_reaches_zero(*meander_);
    return c;
  }
  c.bridge = automaton_->states[static_cast<std::size_t>(pos_.state)].contains(0, pos_.min, pos_.max);
  c.meander = !meander_reach_.dead();
  c.excursion = c.meander && meander_reach_.contains(0);
  return c;
}

double SimRow::proportion() const { return static_cast<double>(hits) / static_cast<double>(runs); }

double SimRow::standard_error() const {
  const double p = proportion();
  return std::sqrt(p * (1 - p) / static_cast<double>(runs));
}

const SimRow& SimResult::row(std::int64_t n, Kind kind) const {
  for (const auto& r : rows) {
    if (r.n == n && r.kind == kind) return r;
  }
  throw ValidationError("no simulation row for n = " + std::to_string(n));
}

namespace {

constexpr Kind kKinds[] = {Kind::walk, Kind::bridge, Kind::meander, Kind::excursion};

struct Sampler {
  std::vector<std::uint64_t> cumulative;  // scaled weights, running sum
  std::uint64_t total = 0;

  explicit Sampler(const WeightedStepSet& set) {
    std::vector<Rational> w;
    for (const auto& s : set.steps()) w.push_back(s.weight);
    const Integer d = common_denominator(w);
    if (!d.fits_ulong_p()) throw ValidationError("weight denominators are too large to sample exactly");
    for (const auto& x : w) {
      total += Rational(x * d).get_num().get_ui();
      cumulative.push_back(total);
    }
  }

  std::size_t draw(CounterStream& rng) const {
    const std::uint64_t u = rng.below(total);
    return static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
  }
};

}  // namespace

SimResult simulate(const SimConfig& config) {
  if (!config.stepset.is_probability()) throw ValidationError("simulation weights must sum to exactly 1");
  if (config.runs < 1) throw ValidationError("runs must be >= 1");
  if (config.runs > std::numeric_limits<std::uint32_t>::max()) throw ValidationError("at most 2^32 - 1 runs");
  for (auto n : config.lengths) {
    if (n < 0) throw ValidationError("lengths must be nonnegative");
    if (n > (std::int64_t{1} << 30)) throw ValidationError("length too large for one counter stream");
  }
  const Sampler sampler(config.stepset);
  std::shared_ptr<const TypeAutomaton> automaton;
  if (!config.stepset.is_motzkin_subset()) {
    automaton = std::make_shared<const TypeAutomaton>(build_type_automaton(config.stepset));
  }
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.runs));

  const Threefry2x32Word base{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32)};
  SimResult result;
  for (std::size_t li = 0; li < config.lengths.size(); ++li) {
    const std::int64_t n = config.lengths[li];
    const auto key = threefry2x32(base, {static_cast<std::uint32_t>(li), 0xffffffffu});
    std::vector<std::array<std::uint64_t, 4>> hits(threads, {0, 0, 0, 0});
    const auto work = [&](unsigned t) {
      StreamingClassifier cls(config.stepset, automaton);
      for (std::uint64_t r = t; r < config.runs; r += threads) {
        CounterStream rng(key, static_cast<std::uint32_t>(r));
        cls.reset();
        for (std::int64_t k = 0; k < n; ++k) cls.push(sampler.draw(rng));
        const auto c = cls.result();
        hits[t][0] += 1;
        hits[t][1] += c.bridge;
        hits[t][2] += c.meander;
        hits[t][3] += c.excursion;
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      std::uint64_t total = 0;
      for (const auto& h : hits) total += h[k];
      result.rows.push_back({n, kKinds[k], total, config.runs, config.seed});
    }
  }
  return result;
}

namespace {

std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string to_csv(const SimResult& result) {
  std::string out = "n,kind,proportion,stderr,runs,seed\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.n) + "," + std::string(to_string(r.kind)) + "," + shortest(r.proportion()) + "," +
           shortest(r.standard_error()) + "," + std::to_string(r.runs) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

}  // namespace nwalk
