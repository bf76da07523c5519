#ifndef SYMCERT_FORM_HPP
#define SYMCERT_FORM_HPP

#include "symcert/linalg.hpp"
#include "symcert/polynomial.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace symcert {

/// Strictly increasing subset of {0..5}, stored as a bit mask.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws std::invalid_argument unless `indices` is strictly increasing within 0..5.
  MultiIndex(std::initializer_list<int> indices);
  static MultiIndex from_mask(std::uint8_t mask);
  static MultiIndex full() { return from_mask(0x3F); }

  std::uint8_t mask() const { return mask_; }
  int size() const;
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  std::vector<int> indices() const;
  MultiIndex complement() const { return from_mask(static_cast<std::uint8_t>(~mask_ & 0x3F)); }

  /// "dx1^dy2"; "1" for the empty index.
  std::string to_string() const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

/// Lexicographic order on the increasing index sequences.
struct MultiIndexLess {
  bool operator()(MultiIndex a, MultiIndex b) const;
};

/// Sign of the permutation sorting the concatenation (a, b); 0 if they overlap.
int concat_sign(MultiIndex a, MultiIndex b);

/// Differential k-form on R^6 with polynomial coefficients.
class DiffForm {
 public:
  using Terms = std::map<MultiIndex, Polynomial, MultiIndexLess>;

  explicit DiffForm(int degree = 0);
  static DiffForm function(const Polynomial& f);
  static DiffForm basis(MultiIndex index, const Polynomial& coeff = Polynomial(1));
  /// dz_var
  static DiffForm dz(int var) { return basis(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << var))); }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(MultiIndex index) const;

  friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
  friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
  friend DiffForm operator-(const DiffForm& a);
  friend DiffForm operator*(const Polynomial& f, const DiffForm& a);
  DiffForm& operator+=(const DiffForm& b);
  friend bool operator==(const DiffForm&, const DiffForm&) = default;

  /// Applies `fn` to every coefficient, dropping any that become zero.
  template <typename Fn>
  DiffForm map_coefficients(Fn&& fn) const {
    DiffForm r(degree_);
    for (const auto& [idx, c] : terms_) r.set(idx, fn(c));
    return r;
  }

  /// Pointwise coefficient values (zero entries omitted).
  std::map<MultiIndex, Rational, MultiIndexLess> eval(std::span<const Rational> point) const;

  /// "(x1) * dy1 + (-x2) * dx1^dy2"; "0" for the zero form.
  std::string to_string() const;

 private:
  void set(MultiIndex idx, Polynomial c);
  void accumulate(MultiIndex idx, const Polynomial& c);

  int degree_;
  Terms terms_;
};

/// Exterior product. Throws std::invalid_argument if the degrees sum past 6.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative. Throws std::invalid_argument on a 6-form.
DiffForm ext_d(const DiffForm& a);

/// Euclidean Hodge star, orientation dx1^dx2^dx3^dy1^dy2^dy3.
DiffForm hodge_star(const DiffForm& a);

/// Pullback under z -> M z: coefficients become f(Mz), dz_i becomes sum_j M_ij dz_j.
DiffForm pullback_linear(const DiffForm& a, const RationalMatrix& m);

/// Matrix of a 2-form at a point. Throws std::invalid_argument unless degree is 2.
AntisymMatrix eval_two_form(const DiffForm& a, std::span<const Rational> point);

/// Coefficients with y1 = y2 = y3 = 0 substituted; basis covectors untouched.
DiffForm subst_coeffs_y0(const DiffForm& a);

inline constexpr const char* kOrientation = "dx1^dx2^dx3^dy1^dy2^dy3";

}  // namespace symcert

#endif  // SYMCERT_FORM_HPP
