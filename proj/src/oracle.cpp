#include "nwalk/oracle.hpp"

#include <string>

#include "nwalk/errors.hpp"

namespace nwalk::oracle {

namespace {

void check_walk_count(std::size_t steps, int n, std::uint64_t budget) {
  if (n < 0) throw ValidationError("length must be nonnegative");
  long double total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<long double>(steps);
  if (total > static_cast<long double>(budget)) {
    throw BudgetExceeded(std::to_string(steps) + "^" + std::to_string(n) + " N-walks exceed the oracle budget");
  }
}

struct Search {
  std::span<const NStep> walk;
  Classification found;
  std::uint64_t ops = 0;

  bool settled() const { return found.bridge && found.meander && found.excursion; }

  void run(std::size_t i, Height y, bool nonneg) {
    ++ops;
    if (i == walk.size()) {
      found.bridge = found.bridge || y == 0;
      found.meander = found.meander || nonneg;
      found.excursion = found.excursion || (nonneg && y == 0);
      return;
    }
    for (Height h : walk[i].heights()) {
      run(i + 1, y + h, nonneg && y + h >= 0);
      if (settled()) return;
    }
  }
};

}  // namespace

void for_each_nwalk(const WeightedStepSet& set, int n, const std::function<void(std::span<const NStep>)>& visit,
                    std::uint64_t budget) {
  check_walk_count(set.size(), n, budget);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  NWalk walk(static_cast<std::size_t>(n), set.step(0));
  while (true) {
    visit(walk);
    // odometer increment, last position fastest
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == set.size()) {
      idx[pos] = 0;
      walk[pos] = set.step(0);
      --pos;
    }
    if (pos < 0) return;
    walk[pos] = set.step(idx[pos]);
  }
}

std::vector<NWalk> enumerate_nwalks(const WeightedStepSet& set, int n, std::uint64_t budget) {
  std::vector<NWalk> out;
  for_each_nwalk(set, n, [&](std::span<const NStep> w) { out.emplace_back(w.begin(), w.end()); }, budget);
  return out;
}

std::vector<ClassicalWalk> compatible_walks(std::span<const NStep> walk, std::uint64_t budget) {
  long double total = 1;
  for (const auto& s : walk) total *= static_cast<long double>(s.size());
  if (total > static_cast<long double>(budget)) throw BudgetExceeded("too many compatible walks");

  std::vector<ClassicalWalk> out;
  ClassicalWalk cur;
  cur.ordinates.push_back(0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == walk.size()) {
      out.push_back(cur);
      return;
    }
    for (Height h : walk[i].heights()) {
      cur.steps.push_back(h);
      cur.ordinates.push_back(cur.ordinates.back() + h);
      rec(i + 1);
      cur.steps.pop_back();
      cur.ordinates.pop_back();
    }
  };
  rec(0);
  return out;
}

Classification brute_classify(std::span<const NStep> walk, std::uint64_t* ops) {
  Search search{walk, {}, 0};
  search.run(0, 0, true);
  if (ops) *ops += search.ops;
  return search.found;
}

Rational brute_count(const WeightedStepSet& set, Kind kind, int n, std::uint64_t budget) {
  Rational total = 0;
  std::uint64_t ops = 0;
  for_each_nwalk(
      set, n,
      [&](std::span<const NStep> w) {
        const auto c = brute_classify(w, &ops);
        if (ops > budget) throw BudgetExceeded("oracle budget exhausted while classifying");
        const bool in = kind == Kind::walk        ? true
                        : kind == Kind::bridge    ? c.bridge
                        : kind == Kind::meander   ? c.meander
                                                  : c.excursion;
        if (in) total += walk_weight(w, set);
      },
      budget);
  return total;
}

}  // namespace nwalk::oracle
