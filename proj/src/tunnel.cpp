#include "nwalk/tunnel.hpp"

#include <algorithm>
#include <cctype>

#include "nwalk/errors.hpp"
#include "nwalk/exact.hpp"
#include "nwalk/series.hpp"

namespace nwalk {

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Splits on commas that are not inside braces.
std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

NodeCapability NodeCapability::any_of(std::vector<Height> heights) {
  NStep normalised(std::move(heights));  // validates nonemptiness
  return NodeCapability(Kind::any_of, {normalised.heights().begin(), normalised.heights().end()});
}

NStep NodeCapability::step() const {
  switch (kind_) {
    case Kind::encap: return NStep{1};
    case Kind::decap: return NStep{-1};
    case Kind::both: return NStep{-1, 1};
    case Kind::passive: return NStep{0};
    default: return NStep(heights_);
  }
}

std::string NodeCapability::to_string() const {
  switch (kind_) {
    case Kind::encap: return "encap";
    case Kind::decap: return "decap";
    case Kind::both: return "both";
    case Kind::passive: return "passive";
    default: return step().to_string();
  }
}

NodeCapability parse_capability(std::string_view text) {
  const std::string s = trim(text);
  if (s == "encap") return NodeCapability::encap();
  if (s == "decap") return NodeCapability::decap();
  if (s == "both") return NodeCapability::both();
  if (s == "passive") return NodeCapability::passive();
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    std::vector<Height> heights;
    std::string_view body(s);
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (true) {
      const auto pos = body.find(',', start);
      const std::string item(body.substr(start, pos - start));
      std::size_t used = 0;
      try {
        heights.push_back(std::stoll(item, &used));
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != item.size()) throw ValidationError("malformed capability '" + s + "'");
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return NodeCapability::any_of(std::move(heights));
  }
  throw ValidationError("unknown capability '" + s + "'");
}

CapabilityPath parse_capability_path(std::string_view text) {
  CapabilityPath path;
  if (trim(text).empty()) return path;
  for (const auto& part : split_top_level(text)) path.push_back(parse_capability(part));
  return path;
}

std::string format_capability_path(const CapabilityPath& path) {
  std::string out;
  for (const auto& c : path) {
    if (!out.empty()) out += ',';
    out += c.to_string();
  }
  return out;
}

NWalk induced_walk(const CapabilityPath& path) {
  NWalk walk;
  walk.reserve(path.size());
  for (const auto& c : path) walk.push_back(c.step());
  return walk;
}

FeasibilityResult path_feasible(const CapabilityPath& path) {
  const NWalk walk = induced_walk(path);
  std::vector<ReachState> prefix{ReachState()};
  prefix.reserve(walk.size() + 1);
  for (const auto& s : walk) {
    if (prefix.back().dead()) return {};
    prefix.push_back(step_reach_meander(prefix.back(), s));
  }
  if (prefix.back().dead() || !prefix.back().contains(0)) return {};

  std::vector<Height> witness(walk.size());
  Height r = 0;
  for (std::size_t i = walk.size(); i-- > 0;) {
    // Heights ascend, so predecessors r - h descend; take the last reachable one.
    std::optional<Height> chosen;
    for (Height h : walk[i].heights()) {
      if (prefix[i].contains(r - h)) chosen = h;
    }
    if (!chosen) throw std::logic_error("backward trace lost the excursion");
    witness[i] = *chosen;
    r -= *chosen;
  }
  FeasibilityResult result{true, std::move(witness)};
  if (!verify_witness(path, result.witness)) throw std::logic_error("reconstructed witness is invalid");
  return result;
}

bool verify_witness(const CapabilityPath& path, const std::vector<Height>& witness) {
  if (witness.size() != path.size()) return false;
  Height r = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i].step().contains(witness[i])) return false;
    r += witness[i];
    if (r < 0) return false;
  }
  return r == 0;
}

CapabilityDistribution parse_capability_distribution(std::string_view text) {
  CapabilityDistribution dist;
  for (const auto& part : split_top_level(text)) {
    const std::string item = trim(part);
    const auto eq = item.rfind('=');
    if (eq == std::string::npos) throw ValidationError("expected capability=probability, got '" + item + "'");
    dist.emplace_back(parse_capability(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
  }
  return dist;
}

std::string_view to_string(FeasibilityMode mode) { return mode == FeasibilityMode::exact ? "exact" : "asym"; }

FeasibilityMode parse_feasibility_mode(std::string_view name) {
  if (name == "exact") return FeasibilityMode::exact;
  if (name == "asym") return FeasibilityMode::asym;
  throw ValidationError("unknown mode '" + std::string(name) + "'");
}

namespace {

void validate_distribution(const CapabilityDistribution& dist) {
  if (dist.empty()) throw ValidationError("empty capability distribution");
  Rational total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i].second < 0) throw ValidationError("negative probability for " + dist[i].first.to_string());
    for (std::size_t j = 0; j < i; ++j) {
      if (dist[j].first.step() == dist[i].first.step()) {
        throw ValidationError("capability " + dist[i].first.to_string() + " listed twice");
      }
    }
    total += dist[i].second;
  }
  if (total != 1) throw ValidationError("probabilities sum to " + to_string(total) + ", not 1");
}

Rational exact_probability(std::int64_t n, const CapabilityDistribution& dist) {
  const auto motzkin = motzkin_steps();
  MotzkinWeights mw;
  mw.w.fill(0);
  bool dyck_only = true;
  for (const auto& [cap, p] : dist) {
    const auto it = std::find(motzkin.begin(), motzkin.end(), cap.step());
    if (it == motzkin.end()) {
      throw ValidationError("exact mode needs capabilities within {-1,0,1}, got " + cap.to_string());
    }
    mw.w[it - motzkin.begin()] = p;
    const auto& s = *it;
    if (p != 0 && s.contains(0)) dyck_only = false;
  }
  if (dyck_only) {
    // motzkin_steps(): {-1}, {0}, {1}, ... {-1,1} at index 4.
    const DyckWeights dw{mw.w[0], mw.w[2], mw.w[4]};
    if (n % 2 != 0) return 0;
    if (n <= kExactDyckDpLimit) return ratio(count_dyck(Kind::excursion, dw, static_cast<int>(n)), n);
    if (n > kExactDyckSeriesLimit) {
      throw BudgetExceeded("exact mode is limited to n <= " + std::to_string(kExactDyckSeriesLimit));
    }
    if (dw.up == 0 || dw.down + dw.both == 0) return 0;
    return dyck_excursion_even_counts(dw, static_cast<int>(n / 2)).back();
  }
  if (n > kExactMotzkinLimit) {
    throw BudgetExceeded("exact mode with passive or mixed capabilities is limited to n <= " +
                         std::to_string(kExactMotzkinLimit));
  }
  return ratio(count_motzkin(Kind::excursion, mw, static_cast<int>(n)), n);
}

AsymEstimate asym_probability(std::int64_t n, const CapabilityDistribution& dist) {
  Rational p1 = 0, pm1 = 0, q = 0;
  for (const auto& [cap, p] : dist) {
    switch (cap.kind()) {
      case NodeCapability::Kind::encap: p1 = p; break;
      case NodeCapability::Kind::decap: pm1 = p; break;
      case NodeCapability::Kind::both: break;
      case NodeCapability::Kind::passive: q = p; break;
      default:
        throw ValidationError("asym mode supports encap, decap, both and passive only, got " + cap.to_string());
    }
  }
  if (q == 1) throw ValidationError("asym mode needs a passive probability below 1");
  if (q == 0) {
    const ExcursionProbability model(p1.get_d(), pm1.get_d());
    if (n % 2 != 0) return {0, 0, model.regime(), "odd path length: no excursion exists"};
    return model.at(static_cast<double>(n / 2));
  }
  const Rational keep = 1 - q;
  const ExcursionProbability model(Rational(p1 / keep).get_d(), Rational(pm1 / keep).get_d());
  AsymEstimate est = model.at(static_cast<double>(n) * keep.get_d() / 2);
  est.main_term /= 2;
  est.correction_term /= 2;
  est.validity_note += "; passive nodes: effective half-length n(1-q)/2 and parity factor 1/2 (approximation)";
  return est;
}

}  // namespace

FeasibilityProbability feasibility_probability(std::int64_t n, const CapabilityDistribution& distribution,
                                               FeasibilityMode mode) {
  if (n < 0) throw ValidationError("path length must be >= 0");
  validate_distribution(distribution);
  FeasibilityProbability out;
  out.mode = mode;
  out.n = n;
  if (mode == FeasibilityMode::exact) {
    out.exact = n == 0 ? Rational(1) : exact_probability(n, distribution);
    out.value = out.exact->get_d();
  } else {
    out.estimate = n == 0 ? AsymEstimate{1, 0, AsymRegime::exact, "empty path"} : asym_probability(n, distribution);
    out.value = out.estimate->value();
  }
  return out;
}

}  // namespace nwalk
