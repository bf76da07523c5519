#include "symcert/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symcert {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += symcert::to_string((*this)(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::size_t rank_exact(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

AntisymMatrix::AntisymMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("antisymmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) throw std::invalid_argument("matrix is not antisymmetric");
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Vector> tangent_basis(std::span<const Rational> normal) {
  const std::size_t n = normal.size();
  std::vector<Vector> ortho{Vector(normal.begin(), normal.end())};
  if (dot(normal, normal) == 0) throw std::invalid_argument("tangent_basis: zero normal");
  for (std::size_t i = 0; i < n && ortho.size() < n; ++i) {
    Vector v(n);
    v[i] = 1;
    // Accepted vectors are mutually orthogonal, so classical Gram-Schmidt is exact here.
    Vector w = v;
    for (const auto& u : ortho) {
      Rational f = dot(v, u) / dot(u, u);
      for (std::size_t k = 0; k < n; ++k) w[k] -= f * u[k];
    }
    bool nonzero = false;
    for (const auto& x : w) nonzero = nonzero || x != 0;
    if (nonzero) ortho.push_back(std::move(w));
  }
  ortho.erase(ortho.begin());
  return ortho;
}

AntisymMatrix restrict_two_form(const AntisymMatrix& m, std::span<const Vector> basis,
                                std::span<const Rational> normal) {
  const std::size_t n = m.size(), k = basis.size();
  RationalMatrix b(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("restrict_two_form: basis vector has wrong length");
    if (dot(basis[j], normal) != 0) throw std::invalid_argument("restrict_two_form: basis vector is not tangent");
    for (std::size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
  }
  if (rank_exact(b) != k) throw std::invalid_argument("restrict_two_form: basis is linearly dependent");
  return AntisymMatrix(b.transpose() * m.matrix() * b);
}

}  // namespace symcert
