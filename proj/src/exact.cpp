#include "nwalk/exact.hpp"

#include <cassert>
#include <string>

#include "nwalk/errors.hpp"

namespace nwalk {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::walk: return "walk";
    case Kind::bridge: return "bridge";
    case Kind::meander: return "meander";
    case Kind::excursion: return "excursion";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::walk, Kind::bridge, Kind::meander, Kind::excursion}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown kind '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::dyck: return "dyck";
    case Family::motzkin: return "motzkin";
    case Family::general: return "general";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::dyck, Family::motzkin, Family::general}) {
    if (to_string(f) == name) return f;
  }
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

namespace {

template <std::size_t K>
WeightedStepSet nonzero_steps(const std::vector<NStep>& steps, const std::array<Rational, K>& w) {
  std::vector<WeightedStep> out;
  for (std::size_t i = 0; i < K; ++i) {
    if (w[i] < 0) throw ValidationError("weight of " + steps[i].to_string() + " is negative");
    if (w[i] != 0) out.push_back({steps[i], w[i]});
  }
  if (out.empty()) throw ValidationError("all weights are zero");
  return WeightedStepSet(std::move(out));
}

template <std::size_t K>
std::array<Rational, K> weights_from(const WeightedStepSet& set, const std::vector<NStep>& family,
                                     std::string_view name) {
  std::array<Rational, K> w;
  for (auto& x : w) x = 0;
  for (const auto& ws : set.steps()) {
    std::size_t i = 0;
    while (i < K && family[i] != ws.step) ++i;
    if (i == K) {
      throw ValidationError(ws.step.to_string() + " is not a " + std::string(name) + " N-step");
    }
    w[i] = ws.weight;
  }
  return w;
}

/// Positive weights scaled to integers by the lcm of their denominators.
struct ScaledWeights {
  std::vector<NStep> steps;
  std::vector<Integer> factor;
  Integer denominator;

  explicit ScaledWeights(const WeightedStepSet& set) {
    std::vector<Rational> w;
    for (const auto& ws : set.steps()) w.push_back(ws.weight);
    denominator = common_denominator(w);
    for (const auto& ws : set.steps()) {
      steps.push_back(ws.step);
      Rational scaled = ws.weight * denominator;
      assert(scaled.get_den() == 1);
      factor.push_back(scaled.get_num());
    }
  }
};

std::vector<Rational> unscale(const std::vector<Integer>& raw, const Integer& d) {
  std::vector<Rational> out;
  out.reserve(raw.size());
  Integer power = 1;
  for (const auto& v : raw) {
    Rational r(v, power);
    r.canonicalize();
    out.push_back(std::move(r));
    power *= d;
  }
  return out;
}

void check_length(int max_n) {
  if (max_n < 0) throw ValidationError("maximum length must be nonnegative");
}

std::vector<Rational> walk_totals(const WeightedStepSet& set, int max_n) {
  std::vector<Rational> out;
  Rational p = 1;
  for (int n = 0; n <= max_n; ++n) {
    out.push_back(p);
    p *= set.total_weight();
  }
  return out;
}

/// Square table of big integers over [lo, lo+side)^2, cleared on read.
class Grid {
 public:
  Grid(Height lo, Height side) : lo_(lo), side_(side), cells_(static_cast<std::size_t>(side * side)) {}

  Integer& at(Height a, Height b) {
    assert(a >= lo_ && a < lo_ + side_ && b >= lo_ && b < lo_ + side_);
    return cells_[static_cast<std::size_t>((a - lo_) * side_ + (b - lo_))];
  }

 private:
  Height lo_;
  Height side_;
  std::vector<Integer> cells_;
};

bool dyck_bridge_accepts(Height mn, Height mx) { return mn <= 0 && mx >= 0 && mn % 2 == 0; }

std::vector<Integer> dyck_bridge_counts(const ScaledWeights& sw, int N) {
  std::vector<Integer> out(N + 1);
  Grid cur(-N, 2 * N + 1), next(-N, 2 * N + 1);
  cur.at(0, 0) = 1;
  out[0] = 1;
  for (int k = 0; k < N; ++k) {
    for (Height mn = -k; mn <= k; mn += 2) {
      for (Height mx = mn; mx <= k; mx += 2) {
        Integer& v = cur.at(mn, mx);
        if (sgn(v) == 0) continue;
        for (std::size_t i = 0; i < sw.steps.size(); ++i) {
          const auto& s = sw.steps[i];
          mpz_addmul(next.at(mn + s.min(), mx + s.max()).get_mpz_t(), v.get_mpz_t(), sw.factor[i].get_mpz_t());
        }
        v = 0;
      }
    }
    std::swap(cur, next);
    const int n = k + 1;
    for (Height mn = -n; mn <= 0; mn += 2) {
      for (Height mx = std::max<Height>(mn, 0); mx <= n; ++mx) {
        if (dyck_bridge_accepts(mn, mx)) out[n] += cur.at(mn, mx);
      }
    }
  }
  return out;
}

DyckStep dyck_step_of(const NStep& s) {
  if (s == NStep{-1}) return DyckStep::down;
  if (s == NStep{1}) return DyckStep::up;
  return DyckStep::both;
}

std::vector<Integer> dyck_meander_counts(const ScaledWeights& sw, int N, bool excursion) {
  std::vector<Integer> out(N + 1);
  Grid cur(0, N + 2), next(0, N + 2);
  cur.at(0, 0) = 1;
  out[0] = 1;
  std::vector<DyckStep> kinds;
  for (const auto& s : sw.steps) kinds.push_back(dyck_step_of(s));
  for (int k = 0; k < N; ++k) {
    // after k steps minp has the parity of k
    for (Height mn = k % 2; mn <= k; mn += 2) {
      for (Height mx = mn; mx <= k; mx += 2) {
        Integer& v = cur.at(mn, mx);
        if (sgn(v) == 0) continue;
        for (std::size_t i = 0; i < kinds.size(); ++i) {
          const auto to = dyck_meander_step({mn, mx}, kinds[i]);
          if (!to) continue;
          mpz_addmul(next.at(to->minp, to->maxp).get_mpz_t(), v.get_mpz_t(), sw.factor[i].get_mpz_t());
        }
        v = 0;
      }
    }
    std::swap(cur, next);
    const int n = k + 1;
    for (Height mn = n % 2; mn <= (excursion ? 0 : n); mn += 2) {
      for (Height mx = mn; mx <= n; mx += 2) out[n] += cur.at(mn, mx);
    }
  }
  return out;
}

// {-1,0}, {0,1} and {-1,0,1} contain two adjacent heights
bool mixes_parity(const NStep& s) { return s.contains(0) && s.size() > 1; }

std::vector<Integer> motzkin_bridge_counts(const ScaledWeights& sw, int N) {
  std::vector<Integer> out(N + 1);
  std::array<Grid, 2> cur{Grid(-N, 2 * N + 1), Grid(-N, 2 * N + 1)};
  std::array<Grid, 2> next{Grid(-N, 2 * N + 1), Grid(-N, 2 * N + 1)};
  cur[0].at(0, 0) = 1;
  out[0] = 1;
  for (int k = 0; k < N; ++k) {
    for (int type = 1; type <= 2; ++type) {
      for (Height mn = -k; mn <= k; ++mn) {
        for (Height mx = mn; mx <= k; ++mx) {
          Integer& v = cur[type - 1].at(mn, mx);
          if (sgn(v) == 0) continue;
          for (std::size_t i = 0; i < sw.steps.size(); ++i) {
            const auto to = motzkin_walk_step({type, mn, mx}, sw.steps[i]);
            mpz_addmul(next[to.type - 1].at(to.minp, to.maxp).get_mpz_t(), v.get_mpz_t(),
                       sw.factor[i].get_mpz_t());
          }
          v = 0;
        }
      }
    }
    std::swap(cur, next);
    const int n = k + 1;
    for (int type = 1; type <= 2; ++type) {
      for (Height mn = -n; mn <= 0; ++mn) {
        for (Height mx = 0; mx <= n; ++mx) {
          if (motzkin_reaches_zero({type, mn, mx})) out[n] += cur[type - 1].at(mn, mx);
        }
      }
    }
  }
  return out;
}

// Meander tables index type 2 by maxp-1, the y-exponent convention of the
// type-2 generating function; type 1 is indexed by maxp itself.
Height encoded_max(const MotzkinState& s) { return s.type == 1 ? s.maxp : s.maxp - 1; }

std::vector<Integer> motzkin_meander_counts(const ScaledWeights& sw, int N, bool excursion) {
  std::vector<Integer> out(N + 1);
  std::array<Grid, 2> cur{Grid(0, N + 2), Grid(0, N + 2)};
  std::array<Grid, 2> next{Grid(0, N + 2), Grid(0, N + 2)};
  cur[0].at(0, 0) = 1;
  out[0] = 1;
  for (int k = 0; k < N; ++k) {
    for (int type = 1; type <= 2; ++type) {
      for (Height mn = 0; mn <= k; ++mn) {
        for (Height enc = mn; enc <= k; ++enc) {
          Integer& v = cur[type - 1].at(mn, enc);
          if (sgn(v) == 0) continue;
          const MotzkinState from{type, mn, type == 1 ? enc : enc + 1};
          for (std::size_t i = 0; i < sw.steps.size(); ++i) {
            const auto to = motzkin_meander_step(from, sw.steps[i]);
            if (!to) continue;
            mpz_addmul(next[to->type - 1].at(to->minp, encoded_max(*to)).get_mpz_t(), v.get_mpz_t(),
                       sw.factor[i].get_mpz_t());
          }
          v = 0;
        }
      }
    }
    std::swap(cur, next);
    const int n = k + 1;
    for (int type = 1; type <= 2; ++type) {
      for (Height mn = 0; mn <= (excursion ? 0 : n); ++mn) {
        for (Height enc = mn; enc <= n; ++enc) out[n] += cur[type - 1].at(mn, enc);
      }
    }
  }
  return out;
}

}  // namespace

WeightedStepSet to_step_set(const DyckWeights& weights) {
  return nonzero_steps<3>(dyck_steps(), {weights.down, weights.up, weights.both});
}

WeightedStepSet to_step_set(const MotzkinWeights& weights) { return nonzero_steps<7>(motzkin_steps(), weights.w); }

DyckWeights dyck_weights_from(const WeightedStepSet& set) {
  const auto w = weights_from<3>(set, dyck_steps(), "Dyck");
  return {w[0], w[1], w[2]};
}

MotzkinWeights motzkin_weights_from(const WeightedStepSet& set) {
  return {weights_from<7>(set, motzkin_steps(), "Motzkin")};
}

std::optional<DyckMeanderState> dyck_meander_step(DyckMeanderState st, DyckStep step) {
  if (st.minp > 0) {
    switch (step) {
      case DyckStep::down: return DyckMeanderState{st.minp - 1, st.maxp - 1};
      case DyckStep::up: return DyckMeanderState{st.minp + 1, st.maxp + 1};
      case DyckStep::both: return DyckMeanderState{st.minp - 1, st.maxp + 1};
    }
  }
  if (st.maxp > 0) {
    // the path at 0 disappears under {-1}; 2 becomes the new minimum
    if (step == DyckStep::down) return DyckMeanderState{1, st.maxp - 1};
    return DyckMeanderState{1, st.maxp + 1};
  }
  if (step == DyckStep::down) return std::nullopt;
  return DyckMeanderState{1, 1};
}

MotzkinState motzkin_walk_step(const MotzkinState& st, const NStep& s) {
  assert(s.min() >= -1 && s.max() <= 1);
  MotzkinState to{st.type, st.minp + s.min(), st.maxp + s.max()};
  // two adjacent heights fill the gaps of a type-1 reach set
  if (st.type == 1 && mixes_parity(s)) to.type = 2;
  return to;
}

std::optional<MotzkinState> motzkin_meander_step(const MotzkinState& st, const NStep& s) {
  MotzkinState to = motzkin_walk_step(st, s);
  if (to.minp >= 0) return to;
  if (to.maxp < 0) return std::nullopt;
  if (to.type == 1) {
    to.minp += 2;
  } else {
    to.minp = 0;
    if (to.maxp == 0) to.type = 1;
  }
  return to;
}

bool motzkin_reaches_zero(const MotzkinState& st) {
  if (st.minp > 0 || st.maxp < 0) return false;
  return st.type == 2 || st.minp % 2 == 0;
}

CountTable count_dyck(Kind kind, const DyckWeights& weights, int max_n) {
  check_length(max_n);
  auto set = to_step_set(weights);
  const ScaledWeights sw(set);
  std::vector<Rational> counts;
  switch (kind) {
    case Kind::walk: counts = walk_totals(set, max_n); break;
    case Kind::bridge: counts = unscale(dyck_bridge_counts(sw, max_n), sw.denominator); break;
    case Kind::meander:
    case Kind::excursion:
      counts = unscale(dyck_meander_counts(sw, max_n, kind == Kind::excursion), sw.denominator);
      break;
  }
  return {kind, std::move(set), std::move(counts)};
}

CountTable count_motzkin(Kind kind, const MotzkinWeights& weights, int max_n) {
  check_length(max_n);
  auto set = to_step_set(weights);
  const ScaledWeights sw(set);
  std::vector<Rational> counts;
  switch (kind) {
    case Kind::walk: counts = walk_totals(set, max_n); break;
    case Kind::bridge: counts = unscale(motzkin_bridge_counts(sw, max_n), sw.denominator); break;
    case Kind::meander:
    case Kind::excursion:
      counts = unscale(motzkin_meander_counts(sw, max_n, kind == Kind::excursion), sw.denominator);
      break;
  }
  return {kind, std::move(set), std::move(counts)};
}

Rational ratio(const CountTable& table, std::size_t n) {
  if (n >= table.counts.size()) {
    throw ValidationError("length " + std::to_string(n) + " is beyond the table (max " +
                          std::to_string(table.max_length()) + ")");
  }
  Rational total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= table.stepset.total_weight();
  return table.counts[n] / total;
}

}  // namespace nwalk
