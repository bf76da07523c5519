#include "symcert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symcert {

namespace {

constexpr std::array<std::string_view, kVars> kNames = {"x1", "x2", "x3", "y1", "y2", "y3"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

std::string_view var_name(int var) { return kNames.at(static_cast<std::size_t>(var)); }

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(int var) {
  Exponents e{};
  e.at(static_cast<std::size_t>(var)) = 1;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const Rational& c, const Exponents& e) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(var)]);
  return d;
}

int Polynomial::used_vars() const {
  int n = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kVars; ++i)
      if (e[i] != 0) n = std::max(n, i + 1);
  return n;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(add_exponents(ea, eb), prod);
    }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial(c) * p; }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1), base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::diff(int var) const {
  auto v = static_cast<std::size_t>(var);
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    r.add_term(d, c * e[v]);
  }
  return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  // Power tables keep evaluation linear in the number of terms.
  std::array<std::vector<Rational>, kVars> powers;
  for (int i = 0; i < kVars; ++i) {
    int d = degree_in(i);
    if (d <= 0) continue;
    if (static_cast<std::size_t>(i) >= point.size())
      throw std::invalid_argument("evaluation point has too few coordinates");
    auto& tab = powers[i];
    tab.resize(static_cast<std::size_t>(d) + 1);
    tab[0] = 1;
    for (int k = 1; k <= d; ++k) tab[k] = tab[k - 1] * point[i];
  }
  Rational sum = 0, term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (int i = 0; i < kVars; ++i)
      if (e[i] != 0) term *= powers[i][e[i]];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::subst(int var, const Polynomial& replacement) const {
  auto v = static_cast<std::size_t>(var);
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[v]) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[v] = 0;
    r += monomial(c, rest) * powers[e[v]];
  }
  return r;
}

Polynomial Polynomial::compose(std::span<const Polynomial> replacements) const {
  if (replacements.size() < static_cast<std::size_t>(used_vars()))
    throw std::invalid_argument("compose: too few replacement polynomials");
  std::array<std::vector<Polynomial>, kVars> powers;
  for (std::size_t i = 0; i < replacements.size() && i < kVars; ++i) powers[i].push_back(Polynomial(1));
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      auto& tab = powers[i];
      while (tab.size() <= e[i]) tab.push_back(tab.back() * replacements[i]);
      term *= tab[e[i]];
    }
    r += term;
  }
  return r;
}

Polynomial Polynomial::translate(std::span<const Rational> offset) const {
  if (offset.size() > kVars) throw std::invalid_argument("translate: too many offsets");
  Terms cur = terms_;
  for (std::size_t v = 0; v < offset.size(); ++v) {
    const Rational& m = offset[v];
    if (m == 0) continue;
    Terms next;
    std::vector<Rational> mpow{Rational(1)};
    for (const auto& [e, c] : cur) {
      const unsigned n = e[v];
      while (mpow.size() <= n) mpow.push_back(mpow.back() * m);
      // (x + m)^n = sum_k C(n,k) m^(n-k) x^k
      Rational binom = 1;
      Exponents f = e;
      for (unsigned k = 0; k <= n; ++k) {
        f[v] = static_cast<std::uint16_t>(k);
        Rational add = c * binom * mpow[n - k];
        auto [it, fresh] = next.try_emplace(f, add);
        if (!fresh) {
          it->second += add;
          if (it->second == 0) next.erase(it);
        }
        binom = binom * (n - k) / (k + 1);
      }
    }
    cur = std::move(next);
  }
  Polynomial r;
  r.terms_ = std::move(cur);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out += symcert::to_string(mag);
      wrote = true;
    }
    for (int i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out += "*";
      out += kNames[static_cast<std::size_t>(i)];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      wrote = true;
    }
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };
  Polynomial result;
  bool first = true;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = sign;
    Exponents e{};
    bool need_factor = true;
    while (need_factor) {
      if (pos >= s.size()) fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::string lit = read_uint();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          lit += "/" + read_uint();
        }
        coeff *= parse_rational(lit);
      } else {
        int var = -1;
        for (int i = 0; i < kVars; ++i)
          if (s.compare(pos, 2, kNames[static_cast<std::size_t>(i)]) == 0) var = i;
        if (var < 0) fail("unknown factor");
        pos += 2;
        unsigned k = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          k = static_cast<unsigned>(std::stoul(read_uint()));
        }
        e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(var)] + k);
      }
      need_factor = pos < s.size() && s[pos] == '*';
      if (need_factor) ++pos;
    }
    result.add_term(e, coeff);
  }
  return result;
}

Polynomial univariate(std::span<const Rational> coeffs, int var) {
  Polynomial r;
  Exponents e{};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k);
    r += Polynomial::monomial(coeffs[k], e);
  }
  return r;
}

}  // namespace symcert
