#ifndef SYMCERT_LINALG_HPP
#define SYMCERT_LINALG_HPP

#include "symcert/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace symcert {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by exact Gaussian elimination. No tolerance anywhere.
std::size_t rank_exact(RationalMatrix m);

/// Square matrix with M = -M^T exactly; the pointwise value of a 2-form.
class AntisymMatrix {
 public:
  /// Throws std::invalid_argument if `m` is not square and exactly antisymmetric.
  explicit AntisymMatrix(RationalMatrix m);
  static AntisymMatrix zero(std::size_t n) { return AntisymMatrix(RationalMatrix(n, n)); }

  std::size_t size() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  std::size_t rank() const { return rank_exact(m_); }

  friend bool operator==(const AntisymMatrix&, const AntisymMatrix&) = default;

 private:
  RationalMatrix m_;
};

using Vector = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Orthogonal (not normalized) basis of the hyperplane normal to `normal`:
/// Gram-Schmidt over {normal, e_1, ..., e_n}, dependent vectors skipped, the
/// normal direction dropped. Deterministic for a given input.
std::vector<Vector> tangent_basis(std::span<const Rational> normal);

/// B[i][j] = basis_i^T M basis_j. Rejects a basis that is linearly dependent
/// or not orthogonal to `normal`.
AntisymMatrix restrict_two_form(const AntisymMatrix& m, std::span<const Vector> basis,
                                std::span<const Rational> normal);

}  // namespace symcert

#endif  // SYMCERT_LINALG_HPP
