#include "nwalk/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

Height floor_mod(Height x, Height p) { return ((x % p) + p) % p; }

}  // namespace

bool ShapeType::applies(Height min, Height max) const {
  const Height span = max - min;
  return span >= max_a() + max_c() && (C.empty() || span >= 1);
}

bool ShapeType::contains(Height r, Height min, Height max) const {
  const Height lo = r - min, hi = max - r;
  if (lo < 0 || hi < 0) return false;
  if (std::binary_search(A.begin(), A.end(), lo)) return true;
  if (std::binary_search(C.begin(), C.end(), hi)) return true;
  return lo >= max_a() && hi >= max_c() &&
         std::binary_search(B.begin(), B.end(), floor_mod(lo - max_a() - 1, period));
}

ReachState ShapeType::expand(Height min, Height max) const {
  if (!applies(min, max)) throw ValidationError("shape does not apply to this (min, max)");
  std::vector<Height> pts;
  for (Height r = min; r <= max; ++r) {
    if (contains(r, min, max)) pts.push_back(r);
  }
  return ReachState::from_points(std::move(pts));
}

bool ShapeType::describes(const ReachState& reach) const {
  if (reach.dead() || !applies(reach.min(), reach.max())) return false;
  const Height min = reach.min(), max = reach.max();
  const auto& pts = reach.points();
  std::size_t i = 0;
  for (Height r = min; r <= max; ++r) {
    const bool in = i < pts.size() && pts[i] == r;
    if (in) ++i;
    if (in != contains(r, min, max)) return false;
  }
  return true;
}

namespace {

enum class Order { compact, periodic };

std::optional<ShapeType> fit(std::span<const ReachState> members, Order order) {
  if (members.empty()) return std::nullopt;
  struct Member {
    Height span;
    std::vector<char> in;
  };
  std::vector<Member> ms;
  Height min_span = std::numeric_limits<Height>::max(), max_span = 0;
  for (const auto& r : members) {
    if (r.dead()) throw ValidationError("cannot fit a shape to a dead reach set");
    Member m{r.max() - r.min(), {}};
    m.in.assign(static_cast<std::size_t>(m.span + 1), 0);
    for (Height p : r.points()) m.in[static_cast<std::size_t>(p - r.min())] = 1;
    min_span = std::min(min_span, m.span);
    max_span = std::max(max_span, m.span);
    ms.push_back(std::move(m));
  }
  const auto at = [](const Member& m, Height o) { return m.in[static_cast<std::size_t>(o)] != 0; };

  // compact: (|A|+|C|, period, |B|, |A|); periodic: (period, |A|+|C|, |B|, |A|).
  using Cost = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  const auto cost_of = [order](std::size_t ac, Height p, std::size_t b, std::size_t a) {
    const auto pp = static_cast<std::size_t>(p);
    return order == Order::compact ? Cost{ac, pp, b, a} : Cost{pp, ac, b, a};
  };
  std::optional<std::pair<Cost, ShapeType>> best;
  // A candidate is hopeless once its leading two keys exceed the best; for the
  // periodic order only the |A|+|C| bound at the best period prunes.
  const auto beaten = [&](std::size_t ac, Height p) {
    if (!best) return false;
    const auto c = cost_of(ac, p, 0, 0);
    if (order == Order::compact) {
      return std::make_tuple(std::get<0>(c), std::get<1>(c)) >
             std::make_tuple(std::get<0>(best->first), std::get<1>(best->first));
    }
    return std::get<0>(c) > std::get<0>(best->first) ||
           (std::get<0>(c) == std::get<0>(best->first) && std::get<1>(c) > std::get<1>(best->first));
  };

  std::vector<Height> A;
  for (Height a = 0; a <= min_span; ++a) {
    // The prefix window [0, a] must agree across members.
    bool same = true;
    for (const auto& m : ms) same = same && at(m, a) == at(ms[0], a);
    if (!same) break;
    if (at(ms[0], a)) A.push_back(a);
    if (a > 0 && !at(ms[0], a)) continue;
    if (beaten(A.size(), 1)) break;

    // c = -1 encodes C = {0} with max(C) = 0.
    for (Height c = 0; a + std::max<Height>(c, 0) <= min_span; c = (c == 0 ? -1 : (c < 0 ? 1 : c + 1))) {
      std::vector<Height> C;
      const Height cmax = std::max<Height>(c, 0);
      if (c < 0) {
        if (min_span < 1) continue;
        C = {0};
      } else if (c > 0) {
        bool ok = true;
        for (const auto& m : ms) {
          for (Height j = 0; j <= c && ok; ++j) ok = at(m, m.span - j) == at(ms[0], ms[0].span - j);
        }
        if (!ok || !at(ms[0], ms[0].span - c)) continue;
        for (Height j = 0; j <= c; ++j) {
          if (at(ms[0], ms[0].span - j)) C.push_back(j);
        }
      }
      const std::size_t ac = A.size() + C.size();
      if (beaten(ac, 1)) {
        if (c > 0) break;
        continue;
      }
      for (Height p = 1; p <= max_span + 1; ++p) {
        if (beaten(ac, p)) break;
        std::vector<signed char> state(static_cast<std::size_t>(p), 0);
        bool ok = true;
        for (const auto& m : ms) {
          for (Height o = a; o <= m.span - cmax && ok; ++o) {
            const bool covered = o == a || (!C.empty() && o == m.span - cmax);
            auto& s = state[static_cast<std::size_t>(floor_mod(o - a - 1, p))];
            if (!at(m, o)) {
              ok = s != 1;
              s = -1;
            } else if (!covered) {
              ok = s != -1;
              s = 1;
            }
          }
          if (!ok) break;
        }
        if (!ok) continue;
        ShapeType shape{A, {}, p, C};
        for (Height k = 0; k < p; ++k) {
          if (state[static_cast<std::size_t>(k)] == 1) shape.B.push_back(k);
        }
        const Cost cost = cost_of(ac, p, shape.B.size(), A.size());
        if (!best || cost < best->first) best.emplace(cost, std::move(shape));
      }
    }
  }
  if (!best) return std::nullopt;
  ShapeType shape = std::move(best->second);
  if (shape.period == 1 && shape.C.empty() && min_span >= 1) shape.C = {0};
  return shape;
}

}  // namespace

std::optional<ShapeType> fit_shape(std::span<const ReachState> members) { return fit(members, Order::periodic); }

ShapeType shape_of(const ReachState& reach) {
  const ReachState one[] = {reach};
  auto s = fit(one, Order::compact);
  if (!s) throw std::logic_error("no shape describes a reach set");
  return *s;
}

TypeAutomaton::Position TypeAutomaton::run(std::span<const NStep> walk) const {
  Position pos{initial, 0, 0};
  for (const auto& s : walk) {
    const auto idx = stepset.index_of(s);
    if (!idx) throw UnknownStepError("N-step " + s.to_string() + " is not in the automaton's step set");
    pos.state = transitions[static_cast<std::size_t>(pos.state)][*idx];
    pos.min += s.min();
    pos.max += s.max();
  }
  return pos;
}

ReachState TypeAutomaton::reach(std::span<const NStep> walk) const {
  const auto pos = run(walk);
  return states[static_cast<std::size_t>(pos.state)].expand(pos.min, pos.max);
}

namespace {

using Counts = std::vector<int>;

class ReachCache {
 public:
  explicit ReachCache(const WeightedStepSet& set) : set_(set) {}

  const ReachState& get(const Counts& c) {
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
    ReachState r;
    const auto first = std::find_if(c.begin(), c.end(), [](int x) { return x > 0; });
    if (first != c.end()) {
      Counts prev = c;
      const auto i = static_cast<std::size_t>(first - c.begin());
      --prev[i];
      r = step_reach(get(prev), set_.step(i));
    }
    return cache_.emplace(c, std::move(r)).first->second;
  }

 private:
  const WeightedStepSet& set_;
  std::map<Counts, ReachState> cache_;
};

struct Attempt {
  std::vector<ShapeType> shapes;
  std::vector<std::vector<int>> transitions;
  int initial = 0;
};

std::optional<Attempt> attempt(const WeightedStepSet& set, int cap, const AutomatonOptions& opt) {
  const std::size_t k = set.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= static_cast<std::size_t>(cap + 1);
    if (total > opt.state_budget) return std::nullopt;
  }
  const auto decode = [&](std::size_t id) {
    Counts c(k);
    for (std::size_t i = 0; i < k; ++i, id /= static_cast<std::size_t>(cap + 1)) {
      c[i] = static_cast<int>(id % static_cast<std::size_t>(cap + 1));
    }
    return c;
  };
  const auto encode = [&](const Counts& c) {
    std::size_t id = 0;
    for (std::size_t i = k; i-- > 0;) id = id * static_cast<std::size_t>(cap + 1) + static_cast<std::size_t>(c[i]);
    return id;
  };

  // Representatives: the capped vector itself, each capped count raised by
  // 1..margin, and all capped counts raised together.
  ReachCache cache(set);
  std::vector<std::vector<ReachState>> members(total);
  for (std::size_t id = 0; id < total; ++id) {
    const Counts c = decode(id);
    auto& m = members[id];
    m.push_back(cache.get(c));
    std::vector<std::size_t> capped;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == cap) capped.push_back(i);
    }
    for (int j = 1; j <= opt.stabilization_margin; ++j) {
      for (std::size_t i : capped) {
        Counts d = c;
        d[i] += j;
        m.push_back(cache.get(d));
      }
      if (capped.size() > 1) {
        Counts d = c;
        for (std::size_t i : capped) d[i] += j;
        m.push_back(cache.get(d));
      }
    }
  }

  std::vector<ShapeType> pool;
  for (std::size_t id = 0; id < total; ++id) {
    const auto s = fit_shape(members[id]);
    if (!s) return std::nullopt;
    if (std::find(pool.begin(), pool.end(), *s) == pool.end()) pool.push_back(*s);
  }
  std::sort(pool.begin(), pool.end());
  std::vector<std::vector<std::size_t>> valid(total);
  std::vector<std::size_t> popularity(pool.size(), 0);
  for (std::size_t id = 0; id < total; ++id) {
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (std::all_of(members[id].begin(), members[id].end(),
                      [&](const ReachState& r) { return pool[p].describes(r); })) {
        valid[id].push_back(p);
        ++popularity[p];
      }
    }
  }
  // Each capped vector takes the most widely valid shape it admits.
  std::vector<std::size_t> block(total);
  for (std::size_t id = 0; id < total; ++id) {
    block[id] = *std::max_element(valid[id].begin(), valid[id].end(), [&](std::size_t x, std::size_t y) {
      return popularity[x] < popularity[y] || (popularity[x] == popularity[y] && x > y);
    });
  }
  const auto next = [&](std::size_t id, std::size_t s) {
    Counts c = decode(id);
    c[s] = std::min(c[s] + 1, cap);
    return encode(c);
  };

  // Moore refinement: split blocks until transitions respect them.
  std::vector<std::size_t> label = block;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> refined(total);
    for (std::size_t id = 0; id < total; ++id) {
      std::vector<std::size_t> key{label[id]};
      for (std::size_t s = 0; s < k; ++s) key.push_back(label[next(id, s)]);
      refined[id] = sig.emplace(std::move(key), sig.size()).first->second;
    }
    const bool stable = sig.size() == std::set<std::size_t>(label.begin(), label.end()).size();
    label = std::move(refined);
    if (stable) break;
  }

  // Topological numbering of the quotient, preferring discovery order from the empty walk.
  std::size_t classes = 0;
  for (auto l : label) classes = std::max(classes, l + 1);
  std::vector<std::size_t> rep(classes, total);
  for (std::size_t id = 0; id < total; ++id) {
    if (rep[label[id]] == total) rep[label[id]] = id;
  }
  std::vector<std::set<std::size_t>> succ(classes);
  std::vector<int> indeg(classes, 0);
  for (std::size_t q = 0; q < classes; ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      const auto t = label[next(rep[q], s)];
      if (t != q && succ[q].insert(t).second) ++indeg[t];
    }
  }
  std::vector<int> order(classes, -1);
  std::deque<std::size_t> ready;
  for (std::size_t q = 0; q < classes; ++q) {
    if (indeg[q] == 0) ready.push_back(q);
  }
  int n = 0;
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), [&](auto x, auto y) { return rep[x] < rep[y]; });
    const auto q = ready.front();
    ready.pop_front();
    order[q] = n++;
    for (auto t : succ[q]) {
      if (--indeg[t] == 0) ready.push_back(t);
    }
  }
  if (n != static_cast<int>(classes)) return std::nullopt;  // merged states form a cycle

  Attempt out;
  out.shapes.resize(classes);
  out.transitions.assign(classes, std::vector<int>(k));
  for (std::size_t q = 0; q < classes; ++q) {
    const auto id = static_cast<std::size_t>(order[q]);
    out.shapes[id] = pool[block[rep[q]]];
    for (std::size_t s = 0; s < k; ++s) out.transitions[id][s] = order[label[next(rep[q], s)]];
  }
  out.initial = order[label[0]];
  return out;
}

bool validate(const TypeAutomaton& a, const AutomatonOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> len(0, opt.validation_max_length);
  std::uniform_int_distribution<std::size_t> pick(0, a.stepset.size() - 1);
  for (int i = 0; i < opt.validation_walks; ++i) {
    NWalk w;
    for (int j = len(rng); j > 0; --j) w.push_back(a.stepset.step(pick(rng)));
    ReachState explicit_reach;
    for (const auto& s : w) explicit_reach = step_reach(explicit_reach, s);
    const auto pos = a.run(w);
    if (pos.min != explicit_reach.min() || pos.max != explicit_reach.max()) return false;
    if (!a.states[static_cast<std::size_t>(pos.state)].describes(explicit_reach)) return false;
  }
  return true;
}

}  // namespace

TypeAutomaton build_type_automaton(const WeightedStepSet& set, const AutomatonOptions& options) {
  if (set.size() == 0) throw ValidationError("step set is empty");
  if (options.stabilization_margin < 1) throw ValidationError("stabilization margin must be positive");
  for (int cap = 1; cap <= options.max_cap; ++cap) {
    auto a = attempt(set, cap, options);
    if (!a) continue;
    TypeAutomaton out{set, std::move(a->shapes), std::move(a->transitions), a->initial, cap};
    if (validate(out, options)) return out;
  }
  throw BudgetExceeded("type automaton did not stabilise within cap " + std::to_string(options.max_cap) +
                       " and " + std::to_string(options.state_budget) + " count vectors");
}

CountTable count_bridges_general(const TypeAutomaton& automaton, int max_n) {
  if (max_n < 0) throw ValidationError("maximum length must be nonnegative");
  const auto& set = automaton.stepset;
  std::vector<Rational> w;
  for (const auto& s : set.steps()) w.push_back(s.weight);
  const Integer d = common_denominator(w);
  std::vector<Integer> factor;
  for (const auto& x : w) factor.push_back(Rational(x * d).get_num());

  Height lo_min = 0, hi_min = 0, lo_max = 0, hi_max = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& s = set.step(i);
    lo_min = i == 0 ? s.min() : std::min(lo_min, s.min());
    hi_min = i == 0 ? s.min() : std::max(hi_min, s.min());
    lo_max = i == 0 ? s.max() : std::min(lo_max, s.max());
    hi_max = i == 0 ? s.max() : std::max(hi_max, s.max());
  }
  const auto nmin = static_cast<std::size_t>(max_n * (hi_min - lo_min) + 1);
  const auto nmax = static_cast<std::size_t>(max_n * (hi_max - lo_max) + 1);
  const std::size_t states = automaton.size();
  // After n steps min lies in [n*lo_min, n*hi_min]; cells are indexed relative to that window.
  const auto index = [&](std::size_t q, Height imin, Height imax) {
    return (q * nmin + static_cast<std::size_t>(imin)) * nmax + static_cast<std::size_t>(imax);
  };
  std::vector<Integer> cur(states * nmin * nmax), nxt(cur.size());
  cur[index(static_cast<std::size_t>(automaton.initial), 0, 0)] = 1;

  CountTable table{Kind::bridge, set, {}};
  Integer scale = 1;
  for (int n = 0;; ++n) {
    Integer acc = 0;
    for (std::size_t q = 0; q < states; ++q) {
      const auto& shape = automaton.states[q];
      for (Height i = 0; i <= n * (hi_min - lo_min); ++i) {
        for (Height j = 0; j <= n * (hi_max - lo_max); ++j) {
          const auto& v = cur[index(q, i, j)];
          if (v == 0) continue;
          const Height mn = n * lo_min + i, mx = n * lo_max + j;
          if (!shape.applies(mn, mx)) throw std::logic_error("automaton state does not apply to its (min, max)");
          if (shape.contains(0, mn, mx)) acc += v;
        }
      }
    }
    Rational r(acc, scale);
    r.canonicalize();
    table.counts.push_back(std::move(r));
    if (n == max_n) break;
    for (auto& v : nxt) v = 0;
    for (std::size_t q = 0; q < states; ++q) {
      for (Height i = 0; i <= n * (hi_min - lo_min); ++i) {
        for (Height j = 0; j <= n * (hi_max - lo_max); ++j) {
          const auto& v = cur[index(q, i, j)];
          if (v == 0) continue;
          for (std::size_t s = 0; s < set.size(); ++s) {
            const auto& st = set.step(s);
            const auto t = static_cast<std::size_t>(automaton.transitions[q][s]);
            mpz_addmul(nxt[index(t, i + st.min() - lo_min, j + st.max() - lo_max)].get_mpz_t(), v.get_mpz_t(),
                       factor[s].get_mpz_t());
          }
        }
      }
    }
    std::swap(cur, nxt);
    scale *= d;
  }
  return table;
}

CountTable count_bridges_general(const WeightedStepSet& set, int max_n) {
  return count_bridges_general(build_type_automaton(set), max_n);
}

Height frobenius(std::span<const Height> gens) {
  if (gens.empty()) throw ValidationError("frobenius needs at least one generator");
  Height g = 0;
  for (Height x : gens) {
    if (x <= 0) throw ValidationError("generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw ValidationError("generators must have gcd 1");
  const Height a = *std::min_element(gens.begin(), gens.end());
  constexpr Height inf = std::numeric_limits<Height>::max();
  // best[r]: smallest representable integer congruent to r mod a (round-robin).
  std::vector<Height> best(static_cast<std::size_t>(a), inf);
  best[0] = 0;
  for (Height x : gens) {
    if (x == a) continue;
    const Height d = std::gcd(a, x);
    for (Height p = 0; p < d; ++p) {
      Height start = -1;
      for (Height r = p; r < a; r += d) {
        if (best[static_cast<std::size_t>(r)] != inf &&
            (start < 0 || best[static_cast<std::size_t>(r)] < best[static_cast<std::size_t>(start)])) {
          start = r;
        }
      }
      if (start < 0) continue;
      Height r = start;
      for (Height i = 0; i < a / d; ++i) {
        const Height t = (r + x) % a;
        best[static_cast<std::size_t>(t)] =
            std::min(best[static_cast<std::size_t>(t)], best[static_cast<std::size_t>(r)] + x);
        r = t;
      }
    }
  }
  return *std::max_element(best.begin(), best.end()) - a;
}

SemigroupInfo semigroup_info(const WeightedStepSet& set) {
  SemigroupInfo info;
  for (const auto& ws : set.steps()) {
    for (Height h : ws.step.heights()) info.p = std::gcd(info.p, h - ws.step.min());
  }
  if (info.p == 0) return info;
  for (const auto& ws : set.steps()) {
    for (Height h : ws.step.heights()) {
      if (h != ws.step.min()) info.generators.push_back((h - ws.step.min()) / info.p);
    }
  }
  std::sort(info.generators.begin(), info.generators.end());
  info.generators.erase(std::unique(info.generators.begin(), info.generators.end()), info.generators.end());
  info.frobenius = frobenius(info.generators);
  return info;
}

}  // namespace nwalk
