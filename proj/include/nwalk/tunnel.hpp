#pragma once

// Encapsulation/decapsulation feasibility of network paths.
//
// Each node on a path can push a header (encap, +1), pop one (decap, -1),
// do either (both), forward untouched (passive, 0), or pick from an explicit
// list of header-depth changes. A path is feasible when some choice per node
// never pops from an empty stack and ends with the original packet, i.e. the
// induced N-walk is an N-excursion.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nwalk/asym.hpp"
#include "nwalk/core.hpp"

namespace nwalk {

class NodeCapability {
 public:
  enum class Kind { encap, decap, both, passive, any_of };

  static NodeCapability encap() { return NodeCapability(Kind::encap, {}); }
  static NodeCapability decap() { return NodeCapability(Kind::decap, {}); }
  static NodeCapability both() { return NodeCapability(Kind::both, {}); }
  static NodeCapability passive() { return NodeCapability(Kind::passive, {}); }
  /// Throws ValidationError for an empty list.
  static NodeCapability any_of(std::vector<Height> heights);

  Kind kind() const { return kind_; }
  NStep step() const;
  /// "encap", "decap", "both", "passive" or "{h1,h2,...}".
  std::string to_string() const;

  bool operator==(const NodeCapability&) const = default;

 private:
  NodeCapability(Kind kind, std::vector<Height> heights) : kind_(kind), heights_(std::move(heights)) {}
  Kind kind_;
  std::vector<Height> heights_;
};

using CapabilityPath = std::vector<NodeCapability>;

/// Accepts the four names and the "{h1,h2,...}" literal. Throws ValidationError otherwise.
NodeCapability parse_capability(std::string_view text);
/// Comma-separated capabilities; commas inside braces belong to the literal. "" is the empty path.
CapabilityPath parse_capability_path(std::string_view text);
std::string format_capability_path(const CapabilityPath& path);

NWalk induced_walk(const CapabilityPath& path);

struct FeasibilityResult {
  bool feasible = false;
  /// One header-depth change per node forming a classical excursion; empty when infeasible.
  std::vector<Height> witness;
  bool operator==(const FeasibilityResult&) const = default;
};

/// Forward pass over meander reach sets, then a backward trace that picks
/// the smallest reachable predecessor ordinate at every node.
FeasibilityResult path_feasible(const CapabilityPath& path);

/// True when `witness` picks an allowed change at every node, never goes
/// below 0 and ends at 0.
bool verify_witness(const CapabilityPath& path, const std::vector<Height>& witness);

using CapabilityDistribution = std::vector<std::pair<NodeCapability, Rational>>;

/// "encap=1/3,decap=1/2,both=1/6".
CapabilityDistribution parse_capability_distribution(std::string_view text);

enum class FeasibilityMode { exact, asym };
std::string_view to_string(FeasibilityMode mode);
FeasibilityMode parse_feasibility_mode(std::string_view name);

struct FeasibilityProbability {
  FeasibilityMode mode = FeasibilityMode::exact;
  std::int64_t n = 0;
  double value = 0;
  std::optional<Rational> exact;          // exact mode
  std::optional<AsymEstimate> estimate;   // asym mode
  bool operator==(const FeasibilityProbability&) const = default;
};

// Exact-mode length limits: beyond them the call throws BudgetExceeded.
inline constexpr std::int64_t kExactDyckDpLimit = 1000;
inline constexpr std::int64_t kExactDyckSeriesLimit = 4000;
inline constexpr std::int64_t kExactMotzkinLimit = 400;

/// Probability that a random path of n nodes, capabilities drawn i.i.d. from
/// `distribution`, is feasible. Probabilities must be nonnegative, sum to 1
/// and name each capability at most once.
///
/// exact: capabilities must lie within {-1,0,1}; Dyck-only distributions use
/// the Dyck DP (or the closed-form series for long even paths), the rest the
/// Motzkin DP.
/// asym: capabilities must be among encap, decap, both, passive, with encap
/// and decap both present. Without passive nodes this is the excursion
/// probability estimate at half-length n/2 (0 for odd n). With passive share
/// q in (0,1), the remaining probabilities are renormalised by 1 - q and the
/// estimate is taken at half-length n(1-q)/2 and halved for the parity of the
/// number of non-passive nodes.
FeasibilityProbability feasibility_probability(std::int64_t n, const CapabilityDistribution& distribution,
                                               FeasibilityMode mode);

}  // namespace nwalk
