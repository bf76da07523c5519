#include "symcert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace symcert {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  if (r == 0) return "0";
  mpz_class num = abs(r.get_num());
  mpz_class den = r.get_den();
  // Find exponent e with 10^(digits-1) <= |r| * 10^(digits-1-e) < 10^digits.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto scaled = [&](long exp10) {
    mpz_class n = num, d = den, p;
    long shift = digits - 1 - exp10;
    if (shift >= 0) {
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
      n *= p;
    } else {
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
      d *= p;
    }
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
  };
  mpz_class lower, upper;
  mpz_ui_pow_ui(lower.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
  mpz_ui_pow_ui(upper.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class q = scaled(e);
  while (q >= upper) q = scaled(++e);
  while (q < lower) q = scaled(--e);
  std::string s = q.get_str();
  std::string out = r < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  return out;
}

int sign(const Rational& r) { return sgn(r); }

}  // namespace symcert
