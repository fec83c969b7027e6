#include "nwalk/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("malformed integer '" + std::string(s) + "' in " + std::string(context));
  }
  return v;
}

WeightedStep parse_step(std::string_view item) {
  const std::string ctx = "'" + std::string(item) + "'";
  if (item.empty() || item.front() != '{') throw ValidationError("expected '{' at " + ctx);
  const auto close = item.find('}');
  if (close == std::string_view::npos) throw ValidationError("missing '}' in " + ctx);
  const auto body = item.substr(1, close - 1);
  if (body.empty()) throw ValidationError("empty N-step " + ctx);
  std::vector<Height> heights;
  for (auto h : split(body, ',')) heights.push_back(parse_int(h, ctx));
  Rational weight(1);
  const auto rest = item.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != ':') throw ValidationError("unexpected text after '}' in " + ctx);
    weight = parse_rational(rest.substr(1));
    if (weight < 0) throw ValidationError("negative weight in " + ctx);
  }
  return {NStep(std::move(heights)), weight};
}

}  // namespace

WeightedStepSet parse_step_set(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "dyck" || s == "default") return WeightedStepSet::unweighted(dyck_steps());
  if (s == "motzkin") return WeightedStepSet::unweighted(motzkin_steps());
  if (s.empty()) throw ValidationError("empty step set");
  std::vector<WeightedStep> steps;
  for (auto item : split(s, ';')) steps.push_back(parse_step(item));
  return WeightedStepSet(std::move(steps));
}

std::string format_step_set(const WeightedStepSet& set) {
  std::string out;
  for (const auto& ws : set.steps()) {
    if (!out.empty()) out += ';';
    out += ws.step.to_string();
    if (ws.weight != 1) out += ':' + to_string(ws.weight);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ValidationError("empty integer list");
  std::vector<std::int64_t> out;
  for (auto part : split(s, ',')) out.push_back(parse_int(part, "'" + s + "'"));
  return out;
}

}  // namespace nwalk
