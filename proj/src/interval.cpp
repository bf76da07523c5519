#include "symcert/interval.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

namespace symcert {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

Rational Interval::mag() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo_ >= 0 && b.lo_ >= 0) return Interval(a.lo_ * b.lo_, a.hi_ * b.hi_);
  if (a.hi_ <= 0 && b.hi_ <= 0) return Interval(a.hi_ * b.hi_, a.lo_ * b.lo_);
  std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return Interval(*mn, *mx);
}

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return Interval(c * a.lo_, c * a.hi_);
  return Interval(c * a.hi_, c * a.lo_);
}

Interval Interval::pow(unsigned k) const {
  if (k == 0) return Interval(Rational(1));
  auto rpow = [](const Rational& x, unsigned e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;
  };
  Rational a = rpow(lo_, k), b = rpow(hi_, k);
  if (k % 2 == 1) return Interval(a, b);
  if (lo_ >= 0) return Interval(a, b);
  if (hi_ <= 0) return Interval(b, a);
  return Interval(Rational(0), std::max(a, b));
}

std::string Interval::to_string() const { return "[" + symcert::to_string(lo_) + "," + symcert::to_string(hi_) + "]"; }

Interval Interval::parse(std::string_view text) {
  if (text.size() < 5 || text.front() != '[' || text.back() != ']') throw std::invalid_argument("malformed interval");
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("malformed interval");
  return Interval(parse_rational(text.substr(1, comma - 1)), parse_rational(text.substr(comma + 1, text.size() - comma - 2)));
}

Interval intersect(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

std::string box_to_string(const Box& b) {
  std::string out;
  for (const auto& iv : b) {
    if (!out.empty()) out += " ";
    out += iv.to_string();
  }
  return out;
}

Interval poly_range(const Polynomial& p, const Box& box) {
  if (static_cast<std::size_t>(p.used_vars()) > box.size())
    throw std::invalid_argument("poly_range: polynomial uses more variables than the box has");
  std::array<std::vector<Interval>, kVars> powers;
  for (std::size_t i = 0; i < box.size() && i < kVars; ++i) {
    int d = p.degree_in(static_cast<int>(i));
    powers[i].reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (int k = 0; k <= d; ++k) powers[i].push_back(box[i].pow(static_cast<unsigned>(k)));
  }
  Rational lo = 0, hi = 0;
  for (const auto& [e, c] : p.terms()) {
    Interval term(c);
    for (std::size_t i = 0; i < kVars; ++i)
      if (e[i] != 0) term = term * powers[i][e[i]];
    lo += term.lo();
    hi += term.hi();
  }
  return Interval(lo, hi);
}

Enclosure::Enclosure(Polynomial p, int dims) : p_(std::move(p)), dims_(dims) {
  if (p_.used_vars() > dims) throw std::invalid_argument("Enclosure: polynomial uses more variables than dims");
}

namespace {

// Infimum over R^n of g.t + t'Ht/2, or nullopt unless H is positive definite.
// LDL' elimination in exact arithmetic; the value is -g'H^{-1}g/2.
std::optional<Rational> quadratic_infimum(std::vector<Rational> h, std::vector<Rational> g, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = h[k * n + k];
    if (pivot <= 0) return std::nullopt;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = h[r * n + k] / pivot;
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) h[r * n + c] -= f * h[k * n + c];
      g[r] -= f * g[k];
    }
  }
  // After elimination g'H^{-1}g = sum g_k^2 / d_k.
  Rational v = 0;
  for (std::size_t k = 0; k < n; ++k) v += g[k] * g[k] / h[k * n + k];
  return Rational(-v / 2);
}

}  // namespace

Interval taylor_range(const Polynomial& p, const Box& box) {
  const std::size_t n = box.size();
  std::vector<Rational> mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = box[i].midpoint();
  Polynomial centered = p.translate(mid);
  std::array<Rational, kVars> radius{};
  for (std::size_t i = 0; i < n; ++i) radius[i] = box[i].width() / 2;

  // Over t_i in [-r_i, r_i] a monomial with every exponent even ranges over
  // [0, prod r^e]; any odd exponent makes it symmetric.
  Rational constant = 0, lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0, lo_rest = 0, hi_rest = 0, mag;
  std::vector<Rational> grad(n), hess(n * n);
  for (const auto& [e, c] : centered.terms()) {
    const int deg = total_degree(e);
    if (deg == 0) {
      constant += c;
      continue;
    }
    mag = abs(c);
    bool all_even = true;
    std::size_t first = kVars, second = kVars;
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      (first == kVars ? first : second) = i;
      all_even = all_even && e[i] % 2 == 0;
      for (int k = 0; k < e[i]; ++k) mag *= radius[i];
    }
    Rational& lo = deg == 1 ? lo1 : deg == 2 ? lo2 : lo_rest;
    Rational& hi = deg == 1 ? hi1 : deg == 2 ? hi2 : hi_rest;
    if (!all_even) {
      lo -= mag;
      hi += mag;
    } else if (c > 0) {
      hi += mag;
    } else {
      lo -= mag;
    }
    if (deg == 1) {
      grad[first] = c;
    } else if (deg == 2 && second == kVars) {
      hess[first * n + first] = 2 * c;
    } else if (deg == 2) {
      hess[first * n + second] = c;
      hess[second * n + first] = c;
    }
  }
  Rational low12 = lo1 + lo2;
  if (auto inf = quadratic_infimum(hess, grad, n); inf && *inf > low12) low12 = *inf;
  return Interval(constant + low12 + lo_rest, constant + hi1 + hi2 + hi_rest);
}

Interval Enclosure::operator()(const Box& box) const {
  Interval natural = poly_range(p_, box);
  // The translated expansion grows combinatorially with dimension.
  if (p_.degree() <= 1 || dims_ > kTaylorMaxDims) return natural;
  return intersect(natural, taylor_range(p_, box));
}

}  // namespace symcert
