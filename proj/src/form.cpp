#include "symcert/form.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace symcert {

MultiIndex::MultiIndex(std::initializer_list<int> indices) {
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= kVars) throw std::invalid_argument("multi-index must be strictly increasing in 0..5");
    mask_ = static_cast<std::uint8_t>(mask_ | (1U << i));
    prev = i;
  }
}

MultiIndex MultiIndex::from_mask(std::uint8_t mask) {
  MultiIndex m;
  m.mask_ = static_cast<std::uint8_t>(mask & 0x3F);
  return m;
}

int MultiIndex::size() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 0; i < kVars; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MultiIndex::to_string() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += "^";
    out += "d";
    out += var_name(i);
  }
  return out;
}

bool MultiIndexLess::operator()(MultiIndex a, MultiIndex b) const { return a.indices() < b.indices(); }

int concat_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int i : a.indices())
    for (int j : b.indices())
      if (i > j) ++inversions;
  return inversions % 2 ? -1 : 1;
}

DiffForm::DiffForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > kVars) throw std::invalid_argument("form degree must be in 0..6");
}

DiffForm DiffForm::function(const Polynomial& f) { return basis(MultiIndex{}, f); }

DiffForm DiffForm::basis(MultiIndex index, const Polynomial& coeff) {
  DiffForm r(index.size());
  r.set(index, coeff);
  return r;
}

Polynomial DiffForm::coefficient(MultiIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Polynomial() : it->second;
}

void DiffForm::set(MultiIndex idx, Polynomial c) {
  if (idx.size() != degree_) throw std::invalid_argument("multi-index size does not match form degree");
  if (c.is_zero())
    terms_.erase(idx);
  else
    terms_[idx] = std::move(c);
}

void DiffForm::accumulate(MultiIndex idx, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& b) {
  if (b.is_zero()) return *this;
  if (is_zero() && degree_ != b.degree_) return *this = b;
  if (degree_ != b.degree_) throw std::invalid_argument("cannot add forms of different degree");
  for (const auto& [idx, c] : b.terms_) accumulate(idx, c);
  return *this;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
  DiffForm r = a;
  r += b;
  return r;
}

DiffForm operator-(const DiffForm& a) {
  return a.map_coefficients([](const Polynomial& c) { return -c; });
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }

DiffForm operator*(const Polynomial& f, const DiffForm& a) {
  return a.map_coefficients([&](const Polynomial& c) { return f * c; });
}

std::map<MultiIndex, Rational, MultiIndexLess> DiffForm::eval(std::span<const Rational> point) const {
  std::map<MultiIndex, Rational, MultiIndexLess> out;
  for (const auto& [idx, c] : terms_) {
    Rational v = c.eval(point);
    if (v != 0) out.emplace(idx, std::move(v));
  }
  return out;
}

std::string DiffForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (idx.size() > 0) out += " * " + idx.to_string();
  }
  return out;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.degree() + b.degree() > kVars) throw std::invalid_argument("wedge: degree exceeds 6");
  DiffForm r(a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      int s = concat_sign(ia, ib);
      if (s == 0) continue;
      Polynomial prod = ca * cb;
      r += DiffForm::basis(MultiIndex::from_mask(static_cast<std::uint8_t>(ia.mask() | ib.mask())),
                           s > 0 ? prod : -prod);
    }
  return r;
}

DiffForm ext_d(const DiffForm& a) {
  if (a.degree() >= kVars) throw std::invalid_argument("ext_d: a 6-form has no exterior derivative");
  DiffForm r(a.degree() + 1);
  for (const auto& [idx, c] : a.terms())
    for (int v = 0; v < kVars; ++v) {
      auto dv = MultiIndex::from_mask(static_cast<std::uint8_t>(1U << v));
      int s = concat_sign(dv, idx);
      if (s == 0) continue;
      Polynomial partial = c.diff(v);
      if (partial.is_zero()) continue;
      r += DiffForm::basis(MultiIndex::from_mask(static_cast<std::uint8_t>(dv.mask() | idx.mask())),
                           s > 0 ? partial : -partial);
    }
  return r;
}

DiffForm hodge_star(const DiffForm& a) {
  DiffForm r(kVars - a.degree());
  for (const auto& [idx, c] : a.terms()) {
    MultiIndex comp = idx.complement();
    r += DiffForm::basis(comp, concat_sign(idx, comp) > 0 ? c : -c);
  }
  return r;
}

DiffForm pullback_linear(const DiffForm& a, const RationalMatrix& m) {
  if (m.rows() != kVars || m.cols() != kVars) throw std::invalid_argument("pullback_linear: matrix must be 6x6");
  std::vector<Polynomial> coords(kVars);
  std::vector<DiffForm> covectors;
  for (int i = 0; i < kVars; ++i) {
    DiffForm dzi(1);
    for (int j = 0; j < kVars; ++j) {
      if (m(i, j) == 0) continue;
      coords[i] += m(i, j) * Polynomial::variable(j);
      dzi += Polynomial(m(i, j)) * DiffForm::dz(j);
    }
    covectors.push_back(std::move(dzi));
  }
  DiffForm r(a.degree());
  for (const auto& [idx, c] : a.terms()) {
    DiffForm term = DiffForm::function(c.compose(coords));
    for (int i : idx.indices()) term = wedge(term, covectors[i]);
    r += term;
  }
  return r;
}

AntisymMatrix eval_two_form(const DiffForm& a, std::span<const Rational> point) {
  if (a.degree() != 2) throw std::invalid_argument("eval_two_form: form must have degree 2");
  RationalMatrix m(kVars, kVars);
  for (const auto& [idx, v] : a.eval(point)) {
    auto ij = idx.indices();
    m(ij[0], ij[1]) = v;
    m(ij[1], ij[0]) = -v;
  }
  return AntisymMatrix(std::move(m));
}

DiffForm subst_coeffs_y0(const DiffForm& a) {
  return a.map_coefficients([](const Polynomial& c) {
    return c.subst(Y1, Polynomial()).subst(Y2, Polynomial()).subst(Y3, Polynomial());
  });
}

}  // namespace symcert
