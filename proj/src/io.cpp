#include "nwalk/io.hpp"

#include "nwalk/dsl.hpp"
#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<Rational> parse_rationals(const Json& a) {
  std::vector<Rational> out;
  for (const auto& v : a) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

}  // namespace

void to_json(Json& j, const DyckWeights& w) {
  j = Json{{"down", to_string(w.down)}, {"up", to_string(w.up)}, {"both", to_string(w.both)}};
}

void from_json(const Json& j, DyckWeights& w) {
  w.down = parse_rational(j.at("down").get<std::string>());
  w.up = parse_rational(j.at("up").get<std::string>());
  w.both = parse_rational(j.at("both").get<std::string>());
}

void to_json(Json& j, const CountTable& t) {
  j = Json{{"kind", to_string(t.kind)}, {"steps", format_step_set(t.stepset)}, {"counts", rationals(t.counts)}};
}

CountTable count_table_from_json(const Json& j) {
  return CountTable{parse_kind(j.at("kind").get<std::string>()), parse_step_set(j.at("steps").get<std::string>()),
                 parse_rationals(j.at("counts"))};
}

void to_json(Json& j, const SeriesReport& r) {
  j = Json{{"form", r.form}, {"order", r.order}, {"coefficients", rationals(r.coefficients)}};
  j["weights"] = r.weights ? Json(*r.weights) : Json(nullptr);
}

void from_json(const Json& j, SeriesReport& r) {
  r.form = j.at("form").get<std::string>();
  r.order = j.at("order").get<int>();
  r.coefficients = parse_rationals(j.at("coefficients"));
  r.weights.reset();
  if (!j.at("weights").is_null()) r.weights = j.at("weights").get<DyckWeights>();
}

void to_json(Json& j, const AsymEstimate& e) {
  j = Json{{"main_term", e.main_term},
           {"correction_term", e.correction_term},
           {"value", e.value()},
           {"regime", to_string(e.regime)},
           {"validity_note", e.validity_note}};
}

void from_json(const Json& j, AsymEstimate& e) {
  e.main_term = j.at("main_term").get<double>();
  e.correction_term = j.at("correction_term").get<double>();
  e.regime = parse_asym_regime(j.at("regime").get<std::string>());
  e.validity_note = j.at("validity_note").get<std::string>();
}

void to_json(Json& j, const ProbabilityReport& r) {
  j = Json{{"p1", r.p1},
           {"pm1", r.pm1},
           {"half_length", r.half_length},
           {"decay_base", r.decay_base},
           {"estimate", r.estimate}};
}

void from_json(const Json& j, ProbabilityReport& r) {
  r.p1 = j.at("p1").get<double>();
  r.pm1 = j.at("pm1").get<double>();
  r.half_length = j.at("half_length").get<double>();
  r.decay_base = j.at("decay_base").get<double>();
  r.estimate = j.at("estimate").get<AsymEstimate>();
}

void to_json(Json& j, const TypeAutomaton& a) {
  Json steps = Json::array();
  for (const auto& ws : a.stepset.steps()) {
    steps.push_back({{"step", ws.step.to_string()},
                     {"weight", to_string(ws.weight)},
                     {"min_delta", ws.step.min()},
                     {"max_delta", ws.step.max()}});
  }
  Json states = Json::array();
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    const auto& s = a.states[i];
    states.push_back({{"id", i + 1}, {"A", s.A}, {"B", s.B}, {"period", s.period}, {"C", s.C}});
  }
  Json transitions = Json::array();
  for (const auto& row : a.transitions) {
    Json r = Json::array();
    for (int to : row) r.push_back(to + 1);
    transitions.push_back(r);
  }
  j = Json{{"steps", steps},   {"initial", a.initial + 1}, {"cap", a.cap},
           {"states", states}, {"transitions", transitions}};
}

TypeAutomaton automaton_from_json(const Json& j) {
  std::vector<WeightedStep> steps;
  for (const auto& s : j.at("steps")) {
    const auto parsed = parse_step_set(s.at("step").get<std::string>());
    steps.push_back({parsed.step(0), parse_rational(s.at("weight").get<std::string>())});
  }
  TypeAutomaton a{WeightedStepSet(std::move(steps)), {}, {}, 0, 0};
  for (const auto& s : j.at("states")) {
    a.states.push_back(ShapeType{s.at("A").get<std::vector<Height>>(), s.at("B").get<std::vector<Height>>(),
                                 s.at("period").get<Height>(), s.at("C").get<std::vector<Height>>()});
  }
  for (const auto& row : j.at("transitions")) {
    std::vector<int> r;
    for (const auto& to : row) r.push_back(to.get<int>() - 1);
    a.transitions.push_back(std::move(r));
  }
  a.initial = j.at("initial").get<int>() - 1;
  a.cap = j.at("cap").get<int>();
  return a;
}

void to_json(Json& j, const SemigroupInfo& s) {
  j = Json{{"p", s.p}, {"generators", s.generators}};
  j["frobenius"] = s.frobenius ? Json(*s.frobenius) : Json(nullptr);
}

void from_json(const Json& j, SemigroupInfo& s) {
  s.p = j.at("p").get<Height>();
  s.generators = j.at("generators").get<std::vector<Height>>();
  s.frobenius.reset();
  if (!j.at("frobenius").is_null()) s.frobenius = j.at("frobenius").get<Height>();
}

void to_json(Json& j, const FrobeniusReport& r) { j = Json{{"generators", r.generators}, {"frobenius", r.frobenius}}; }

void from_json(const Json& j, FrobeniusReport& r) {
  r.generators = j.at("generators").get<std::vector<Height>>();
  r.frobenius = j.at("frobenius").get<Height>();
}

void to_json(Json& j, const SimResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"kind", to_string(row.kind)},
                    {"hits", row.hits},
                    {"runs", row.runs},
                    {"seed", row.seed},
                    {"proportion", row.proportion()},
                    {"stderr", row.standard_error()}});
  }
  j = Json{{"rows", rows}};
}

void from_json(const Json& j, SimResult& r) {
  r.rows.clear();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back(SimRow{row.at("n").get<std::int64_t>(), parse_kind(row.at("kind").get<std::string>()),
                            row.at("hits").get<std::uint64_t>(), row.at("runs").get<std::uint64_t>(),
                            row.at("seed").get<std::uint64_t>()});
  }
}

void to_json(Json& j, const FeasibilityReport& r) {
  Json path = Json::array();
  for (const auto& c : r.path) path.push_back(c.to_string());
  j = Json{{"path", path}, {"feasible", r.result.feasible}, {"witness", r.result.witness}};
}

void from_json(const Json& j, FeasibilityReport& r) {
  r.path.clear();
  for (const auto& c : j.at("path")) r.path.push_back(parse_capability(c.get<std::string>()));
  r.result.feasible = j.at("feasible").get<bool>();
  r.result.witness = j.at("witness").get<std::vector<Height>>();
}

void to_json(Json& j, const FeasibilityProbability& p) {
  j = Json{{"mode", to_string(p.mode)}, {"n", p.n}, {"value", p.value}};
  j["exact"] = p.exact ? Json(to_string(*p.exact)) : Json(nullptr);
  j["estimate"] = p.estimate ? Json(*p.estimate) : Json(nullptr);
}

void from_json(const Json& j, FeasibilityProbability& p) {
  p.mode = parse_feasibility_mode(j.at("mode").get<std::string>());
  p.n = j.at("n").get<std::int64_t>();
  p.value = j.at("value").get<double>();
  p.exact.reset();
  p.estimate.reset();
  if (!j.at("exact").is_null()) p.exact = parse_rational(j.at("exact").get<std::string>());
  if (!j.at("estimate").is_null()) p.estimate = j.at("estimate").get<AsymEstimate>();
}

bool SelftestReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void to_json(Json& j, const SelftestReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j = Json{{"checks", checks}, {"passed", r.passed()}};
}

void from_json(const Json& j, SelftestReport& r) {
  r.checks.clear();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  }
}

}  // namespace nwalk
