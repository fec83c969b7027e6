#pragma once

// Seeded sampling of N-walks under a probability-weighted step set.
//
// Randomness: Threefry-2x32-20. The 64-bit seed is the base key; length
// index l gets the key threefry2x32(base, {l, 0xffffffff}); run r reads the
// stream with counter high word r. Results are integer hit counts, so they
// do not depend on how runs are split across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nwalk/core.hpp"
#include "nwalk/exact.hpp"
#include "nwalk/structure.hpp"

namespace nwalk {

/// Classifies an N-walk one N-step at a time. Step sets inside {-1,0,1}
/// use the compact (min, max) / (min+, max+) states; other sets track the
/// bridge through the type automaton and the meander reach set explicitly.
class StreamingClassifier {
 public:
  explicit StreamingClassifier(const WeightedStepSet& set);
  StreamingClassifier(const WeightedStepSet& set, std::shared_ptr<const TypeAutomaton> automaton);

  void reset();
  void push(std::size_t step_index);
  Classification result() const;

 private:
  const WeightedStepSet* set_;
  bool compact_;
  std::shared_ptr<const TypeAutomaton> automaton_;
  // compact
  MotzkinState walk_;
  std::optional<MotzkinState> meander_;
  // general
  TypeAutomaton::Position pos_{};
  ReachState meander_reach_;
};

struct SimConfig {
  WeightedStepSet stepset;
  std::vector<std::int64_t> lengths;
  std::uint64_t runs = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SimRow {
  std::int64_t n = 0;
  Kind kind = Kind::walk;
  std::uint64_t hits = 0;
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;

  double proportion() const;
  /// sqrt(p (1 - p) / runs)
  double standard_error() const;
  bool operator==(const SimRow&) const = default;
};

struct SimResult {
  std::vector<SimRow> rows;  // per length, kinds in walk/bridge/meander/excursion order
  const SimRow& row(std::int64_t n, Kind kind) const;
  bool operator==(const SimResult&) const = default;
};

/// Throws ValidationError unless the weights sum to exactly 1, runs >= 1 and lengths >= 0.
SimResult simulate(const SimConfig& config);

/// Columns n,kind,proportion,stderr,runs,seed with a header line.
std::string to_csv(const SimResult& result);

}  // namespace nwalk
