#include "nwalk/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nwalk/errors.hpp"

namespace nwalk {

Series::Series(std::int64_t precision) : offset_(precision) {}

Series::Series(std::vector<Rational> coeffs, std::int64_t precision, std::int64_t offset)
    : offset_(std::min(offset, precision)), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(precision - offset_));
}

Series Series::constant(const Rational& c, std::int64_t precision) { return monomial(c, 0, precision); }

Series Series::monomial(const Rational& c, std::int64_t exponent, std::int64_t precision) {
  return Series({c}, precision, exponent);
}

std::int64_t Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return offset_ + static_cast<std::int64_t>(i);
  }
  return precision();
}

Rational Series::coefficient(std::int64_t k) const {
  if (k >= precision()) {
    throw ValidationError("coefficient of t^" + std::to_string(k) + " is beyond the series precision " +
                          std::to_string(precision()));
  }
  if (k < offset_) return 0;
  return c_[static_cast<std::size_t>(k - offset_)];
}

std::vector<Rational> Series::coefficients(std::int64_t n) const {
  if (valuation() < 0) throw ValidationError("series has negative valuation");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) out.push_back(coefficient(k));
  return out;
}

Series Series::truncated(std::int64_t precision) const {
  if (precision >= this->precision()) return *this;
  return Series(c_, precision, offset_);
}

Series Series::shifted(std::int64_t k) const {
  Series s = *this;
  s.offset_ += k;
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  const std::int64_t prec = std::min(a.precision(), b.precision());
  const std::int64_t off = std::min({a.offset_, b.offset_, prec});
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(prec - off));
  for (std::int64_t k = off; k < prec; ++k) c.push_back(a.coefficient(k) + b.coefficient(k));
  return Series(std::move(c), prec, off);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const std::int64_t va = a.valuation(), vb = b.valuation();
  const std::int64_t prec = std::min(va + b.precision(), vb + a.precision());
  const std::int64_t off = va + vb;
  if (off >= prec) return Series(prec);
  std::vector<Rational> c(static_cast<std::size_t>(prec - off));
  for (std::int64_t k = off; k < prec; ++k) {
    Rational& acc = c[static_cast<std::size_t>(k - off)];
    for (std::int64_t i = va; i <= k - vb; ++i) acc += a.coefficient(i) * b.coefficient(k - i);
  }
  return Series(std::move(c), prec, off);
}

Series operator/(const Series& a, const Series& b) {
  const std::int64_t vb = b.valuation();
  if (vb >= b.precision()) throw ValidationError("division by a zero series");
  const std::int64_t va = a.valuation();
  const std::int64_t rel = std::min(a.precision() - va, b.precision() - vb);
  const std::int64_t off = va - vb;
  const Rational lead = b.coefficient(vb);
  std::vector<Rational> q(static_cast<std::size_t>(rel));
  for (std::int64_t j = 0; j < rel; ++j) {
    Rational acc = a.coefficient(va + j);
    for (std::int64_t i = 1; i <= j; ++i) acc -= b.coefficient(vb + i) * q[static_cast<std::size_t>(j - i)];
    q[static_cast<std::size_t>(j)] = acc / lead;
  }
  return Series(std::move(q), off + rel, off);
}

Series operator*(const Rational& c, const Series& a) {
  Series s = a;
  for (auto& x : s.c_) x *= c;
  return s;
}

Series operator+(const Rational& c, const Series& a) { return Series::constant(c, a.precision()) + a; }

Series operator-(const Rational& c, const Series& a) { return Series::constant(c, a.precision()) - a; }

Series sqrt(const Series& a) {
  if (a.valuation() != 0) throw ValidationError("square root needs a nonzero constant term");
  const Rational a0 = a.coefficient(0);
  if (a0 < 0 || !mpz_perfect_square_p(a0.get_num_mpz_t()) || !mpz_perfect_square_p(a0.get_den_mpz_t())) {
    throw ValidationError("constant term " + to_string(a0) + " is not a positive rational square");
  }
  Rational s0(::sqrt(a0.get_num()), ::sqrt(a0.get_den()));
  const std::int64_t prec = a.precision();
  std::vector<Rational> s(static_cast<std::size_t>(prec));
  s[0] = s0;
  const Rational two_s0 = 2 * s0;
  for (std::int64_t k = 1; k < prec; ++k) {
    Rational acc = a.coefficient(k);
    for (std::int64_t j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc / two_s0;
  }
  return Series(std::move(s), prec);
}

namespace {

// Every closed form below divides by at most t^2, so four spare terms suffice.
std::int64_t working_precision(int order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  return static_cast<std::int64_t>(order) + 4;
}

Series finish(const Series& s, int order) {
  if (s.valuation() < 0) throw std::logic_error("generating function has negative valuation");
  if (s.precision() <= order) throw std::logic_error("generating function lost precision");
  return s.truncated(order + 1);
}

Series poly(std::vector<Rational> c, std::int64_t prec) { return Series(std::move(c), prec); }

struct DyckRoots {
  Series x;  // X(1,t)
  Series y;  // Y(t)
  Rational c;  // p_-1 + p_-1,1
};

DyckRoots dyck_roots(const DyckWeights& w, std::int64_t prec) {
  if (w.down < 0 || w.up < 0 || w.both < 0) throw ValidationError("weights must be nonnegative");
  const Rational c = w.down + w.both, e = w.up + w.both;
  if (w.up == 0 || c == 0) throw ValidationError("closed form needs p_1 > 0 and p_-1 + p_-1,1 > 0");
  const Series t = Series::monomial(1, 1, prec);
  const Series x = (1 - sqrt(poly({1, 0, -4 * w.up * c}, prec))) / (2 * w.up * t);
  const Series y = (1 - sqrt(poly({1, 0, -4 * w.down * e}, prec))) / (2 * e * t);
  return {x, y, c};
}

}  // namespace

Series gf_walks(const WeightedStepSet& set, int order) {
  const auto prec = working_precision(order);
  return finish(Series::constant(1, prec) / poly({1, -set.total_weight()}, prec), order);
}

Series gf_dyck_meander(const DyckWeights& weights, int order) {
  const auto prec = working_precision(order);
  const auto [x, y, c] = dyck_roots(weights, prec);
  // D+(x,y;t) at x = y = 1.
  const Rational total = weights.down + weights.up + weights.both;
  const Series first = (1 - x) / (1 - x * x);
  const Series second = (1 - y - x * y + x) / poly({1, -total}, prec);
  return finish(first * second, order);
}

Series gf_dyck_excursion(const DyckWeights& weights, int order) {
  const auto prec = working_precision(order);
  const auto [x, y, c] = dyck_roots(weights, prec);
  const Series ct = Series::monomial(c, 1, prec);
  return finish(x / (1 - x * x) * ((1 - x * y) / ct), order);
}

Series gf_dyck_meander_unweighted(int order) {
  const auto prec = working_precision(order);
  const Series num = -(poly({1, -4}, prec) - sqrt(poly({1, 0, -8}, prec)));
  return finish(num / poly({0, 4, -12}, prec), order);
}

Series gf_dyck_excursion_unweighted(int order) {
  const auto prec = working_precision(order);
  const Series num = poly({1, 0, -8}, prec) - poly({1, 0, -12}, prec) * sqrt(poly({1, 0, -8}, prec));
  return finish(num / poly({0, 0, 8, 0, -72}, prec), order);
}

Series gf_dyck_bridge_unweighted(int order) {
  const auto prec = working_precision(order);
  return finish(poly({1, 0, -6}, prec) / (sqrt(poly({1, 0, -8}, prec)) * poly({1, 0, -9}, prec)), order);
}

Series gf_motzkin_meander_unweighted(int order) {
  const auto prec = working_precision(order);
  const Series num = poly({-1, 10}, prec) + sqrt(poly({1, 2}, prec) * poly({1, -6}, prec));
  if (num.coefficient(0) != 0) throw std::logic_error("Motzkin meander numerator does not vanish at t = 0");
  return finish(num / poly({0, 8, -56}, prec), order);
}

std::vector<Rational> dyck_excursion_even_counts(const DyckWeights& weights, int m) {
  if (m < 0) throw ValidationError("length must be nonnegative");
  if (weights.down < 0 || weights.up < 0 || weights.both < 0) throw ValidationError("weights must be nonnegative");
  const Rational ws[] = {weights.down, weights.up, weights.both};
  const Integer d = common_denominator(ws);
  const Integer p1 = Rational(weights.up * d).get_num();
  const Integer pm = Rational(weights.down * d).get_num();
  const Integer pb = Rational(weights.both * d).get_num();
  const Integer c = pm + pb, e = p1 + pb;
  if (p1 == 0 || c == 0) throw ValidationError("closed form needs p_1 > 0 and p_-1 + p_-1,1 > 0");

  // With X = t*x(u), Y = t*y(u) and u = t^2 (integer-scaled weights):
  //   x = c + p1 u x^2,  y = pm + e u y^2,
  // so x_k = Cat_k p1^k c^(k+1), y_k = Cat_k e^k pm^(k+1), and
  // 1 - u x^2 = (p1 + c - x)/p1 turns the excursion closed form into
  //   D+(0,1) = (p1 x - x y + c y) / (c (p1 + c - x)).
  const auto n = static_cast<std::size_t>(m) + 1;
  std::vector<Integer> x(n), y(n);
  Integer cat = 1, xa = c, ya = pm, xstep = p1 * c, ystep = e * pm;
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = cat * xa;
    y[k] = cat * ya;
    xa *= xstep;
    ya *= ystep;
    cat = cat * (2 * (2 * k + 1));
    mpz_divexact_ui(cat.get_mpz_t(), cat.get_mpz_t(), k + 2);
  }
  std::vector<Integer> num(n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer xy = 0;
    for (std::size_t i = 0; i <= k; ++i) mpz_addmul(xy.get_mpz_t(), x[i].get_mpz_t(), y[k - i].get_mpz_t());
    num[k] = p1 * x[k] - xy + c * y[k];
  }
  // Denominator: c*p1 - c * sum_{k>=1} x_k u^k.
  const Integer lead = c * p1;
  std::vector<Integer> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), q[k - i].get_mpz_t());
    acc = num[k] + c * acc;
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw std::logic_error("excursion series is not integral");
    }
    mpz_divexact(q[k].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
  }
  std::vector<Rational> out;
  out.reserve(n);
  Integer scale = 1;
  const Integer d2 = d * d;
  for (std::size_t k = 0; k < n; ++k) {
    Rational r(q[k], scale);
    r.canonicalize();
    out.push_back(std::move(r));
    scale *= d2;
  }
  return out;
}

}  // namespace nwalk
