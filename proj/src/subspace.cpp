#include "nilspan/subspace.hpp"

#include <stdexcept>

namespace nilspan {

void RationalSubspace::check_length(const RationalVector& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                " in a subspace of Q^" + std::to_string(ambient_));
}

RationalSubspace RationalSubspace::span(std::size_t n, std::span<const RationalVector> vectors) {
  RationalSubspace s(n);
  for (const auto& v : vectors) s.check_length(v);
  s.basis_.assign(vectors.begin(), vectors.end());
  s.pivots_ = row_reduce(s.basis_, n);
  return s;
}

RationalSubspace RationalSubspace::full(std::size_t n) {
  std::vector<RationalVector> unit(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) unit[i][i] = 1;
  return span(n, unit);
}

RationalSubspace RationalSubspace::kernel(std::size_t n, std::span<const RationalVector> constraints) {
  // The kernel of a row space is the annihilator of its span.
  return span(n, constraints).annihilator();
}

RationalVector RationalSubspace::reduce(RationalVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) v[k] -= f * basis_[i][k];
  }
  return v;
}

bool RationalSubspace::contains(const RationalVector& v) const {
  check_length(v);
  return is_zero(reduce(v));
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool RationalSubspace::extend(const RationalVector& v) {
  check_length(v);
  if (is_zero(reduce(v))) return false;
  basis_.push_back(v);
  pivots_ = row_reduce(basis_, ambient_);
  return true;
}

RationalSubspace RationalSubspace::annihilator() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < ambient_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(ambient_);
    v[f] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) v[pivots_[i]] = -basis_[i][f];
    out.push_back(std::move(v));
  }
  return span(ambient_, out);
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("intersecting subspaces of different ambient spaces");
  // U n V = ann(ann U + ann V)
  std::vector<RationalVector> rows = annihilator().basis_;
  const auto& more = other.annihilator().basis_;
  rows.insert(rows.end(), more.begin(), more.end());
  return span(ambient_, rows).annihilator();
}

std::string RationalSubspace::to_string() const {
  std::string s = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (k) s += ",";
      s += format_rational(basis_[i][k]);
    }
    s += ")";
  }
  return s + "} in Q^" + std::to_string(ambient_);
}

}  // namespace nilspan
