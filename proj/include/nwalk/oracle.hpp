#pragma once

// Brute-force ground truth. Classes are decided by enumerating compatible
// classical walks; nothing here goes through reach sets.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nwalk/core.hpp"
#include "nwalk/exact.hpp"

namespace nwalk::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ClassicalWalk {
  std::vector<Height> steps;
  std::vector<Height> ordinates;  // starts with 0, one more entry than steps
};

/// Calls `visit` for each of the |S|^n N-walks, in lexicographic order of
/// step indices. Throws BudgetExceeded when |S|^n > budget.
void for_each_nwalk(const WeightedStepSet& set, int n, const std::function<void(std::span<const NStep>)>& visit,
                    std::uint64_t budget = kDefaultBudget);

std::vector<NWalk> enumerate_nwalks(const WeightedStepSet& set, int n, std::uint64_t budget = kDefaultBudget);

/// All Cartesian-product selections. Throws BudgetExceeded when their number exceeds `budget`.
std::vector<ClassicalWalk> compatible_walks(std::span<const NStep> walk, std::uint64_t budget = kDefaultBudget);

/// Class membership straight from the definitions: some compatible walk ends
/// at 0 / stays nonnegative / does both. The search stops once every class
/// is settled; `ops` accumulates the number of visited walk prefixes.
Classification brute_classify(std::span<const NStep> walk, std::uint64_t* ops = nullptr);

/// Total weight of length-n N-walks of the given kind.
Rational brute_count(const WeightedStepSet& set, Kind kind, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace nwalk::oracle
