#ifndef SYMCERT_INTERVAL_HPP
#define SYMCERT_INTERVAL_HPP

#include "symcert/polynomial.hpp"
#include "symcert/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symcert {

/// Closed interval with exact rational endpoints, lo <= hi.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& v) : lo_(v), hi_(v) {}
  /// Throws std::invalid_argument if lo > hi.
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  /// max(|lo|, |hi|)
  Rational mag() const;
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& c, const Interval& a);
  friend bool operator==(const Interval&, const Interval&) = default;

  /// Sharp integer power: even powers of an interval straddling 0 start at 0.
  Interval pow(unsigned k) const;

  /// "[lo,hi]" with rationals verbatim.
  std::string to_string() const;
  static Interval parse(std::string_view text);

 private:
  Rational lo_ = 0, hi_ = 0;
};

/// Intersection of two intervals known to overlap (both enclose the same set).
Interval intersect(const Interval& a, const Interval& b);

/// Product of intervals; dimension i bounds variable slot i.
using Box = std::vector<Interval>;

std::string box_to_string(const Box& b);

/// Natural interval extension, term by term with the power rule. Sound:
/// p(x) lies in the result for every x in the box. Throws std::invalid_argument
/// if p uses a slot beyond the box dimension.
Interval poly_range(const Polynomial& p, const Box& box);

/// Centered (Taylor) form: p re-expanded exactly about the box midpoint, then
/// bounded term by term over the symmetric offsets. Sound, and much tighter
/// than poly_range on small boxes.
Interval taylor_range(const Polynomial& p, const Box& box);

/// Enclosure used by the branch-and-bound and its certificate replay:
/// poly_range intersected with taylor_range, the latter only when
/// dims <= kTaylorMaxDims.
inline constexpr int kTaylorMaxDims = 3;

class Enclosure {
 public:
  Enclosure(Polynomial p, int dims);
  const Polynomial& polynomial() const { return p_; }
  Interval operator()(const Box& box) const;

 private:
  Polynomial p_;
  int dims_;
};

}  // namespace symcert

#endif  // SYMCERT_INTERVAL_HPP
