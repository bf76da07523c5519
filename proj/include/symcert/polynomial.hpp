#ifndef SYMCERT_POLYNOMIAL_HPP
#define SYMCERT_POLYNOMIAL_HPP

#include "symcert/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symcert {

/// Number of coordinates: (x1, x2, x3, y1, y2, y3).
inline constexpr int kVars = 6;

/// Variable slots. Problems with fewer unknowns (q, Q, the slice objectives)
/// use the leading slots x1, x2, x3 as formal variables.
enum Var : int { X1 = 0, X2 = 1, X3 = 2, Y1 = 3, Y2 = 4, Y3 = 5 };

std::string_view var_name(int var);

using Exponents = std::array<std::uint16_t, kVars>;

int total_degree(const Exponents& e);

/// Graded order, descending: larger total degree first, then larger exponent
/// of x1, then x2, ... This is the canonical serialization order.
struct GradedDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using Point = std::array<Rational, kVars>;

/// Sparse exact polynomial in the six coordinates. No zero coefficient is
/// ever stored, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedDescending>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(int var);
  static Polynomial monomial(const Rational& c, const Exponents& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  int degree_in(int var) const;
  /// Highest slot index + 1 actually used (0 for constants).
  int used_vars() const;
  Rational coefficient(const Exponents& e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial diff(int var) const;
  Rational eval(std::span<const Rational> point) const;
  /// Replaces one variable by a polynomial.
  Polynomial subst(int var, const Polynomial& replacement) const;
  /// Simultaneous substitution: slot i becomes replacements[i].
  Polynomial compose(std::span<const Polynomial> replacements) const;
  /// p(x + offset); missing trailing offsets are zero.
  Polynomial translate(std::span<const Rational> offset) const;

  /// e.g. "1/2*x1^3*y2 - 7/6*x1"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Inverse of to_string; also accepts any sum of signed products of
  /// rationals and variables with optional ^exponent, and parentheses-free input.
  static Polynomial parse(std::string_view text);

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Univariate helper: coefficients c0 + c1 t + c2 t^2 + ... in slot `var`.
Polynomial univariate(std::span<const Rational> coeffs, int var = X1);

}  // namespace symcert

#endif  // SYMCERT_POLYNOMIAL_HPP
