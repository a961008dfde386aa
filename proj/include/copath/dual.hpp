#pragma once

#include <map>
#include <memory>

#include "copath/coalgebra.hpp"
#include "copath/scalar.hpp"
#include "copath/shape.hpp"

namespace copath {

/// Element of the complete dual algebra C* presented modulo C_N^perp: a
/// finite path -> scalar map whose keys lie in H and have length <= N.
/// The truncation degree N is part of the value and propagates through
/// arithmetic (results live at the minimum of the operand truncations).
template <class Scalar>
class TruncatedDual {
 public:
  TruncatedDual(std::shared_ptr<const MonomialShape> shape, std::size_t trunc)
      : shape_(std::move(shape)), trunc_(trunc) {
    if (!shape_) fail(Errc::BadArgument, "null shape");
  }

  const std::shared_ptr<const MonomialShape>& shape() const { return shape_; }
  std::size_t truncation() const { return trunc_; }

  void set(const Path& p, const Scalar& c) {
    check_key(p);
    if (is_zero(c))
      coeffs_.erase(p);
    else
      coeffs_[p] = c;
  }
  void add(const Path& p, const Scalar& c) {
    check_key(p);
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
      if (!is_zero(c)) coeffs_.emplace(p, c);
      return;
    }
    it->second += c;
    if (is_zero(it->second)) coeffs_.erase(it);
  }
  Scalar coeff(const Path& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }
  const std::map<Path, Scalar>& terms() const { return coeffs_; }

  friend bool operator==(const TruncatedDual& a, const TruncatedDual& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_ && same_shape(a, b);
  }

  static bool same_shape(const TruncatedDual& a, const TruncatedDual& b) {
    return a.shape_ == b.shape_ || *a.shape_ == *b.shape_;
  }

 private:
  void check_key(const Path& p) {
    if (p.length() > trunc_) fail(Errc::BeyondTruncation, p.str());
    if (!shape_->contains(p)) fail(Errc::NotInShape, p.str());
  }

  std::shared_ptr<const MonomialShape> shape_;
  std::size_t trunc_;
  std::map<Path, Scalar> coeffs_;
};

/// p*: the functional dual to the basis path p, at truncation N.
template <class Scalar>
TruncatedDual<Scalar> functional(std::shared_ptr<const MonomialShape> shape, const Path& p,
                                 std::size_t trunc) {
  if (!shape->contains(p)) fail(Errc::NotInShape, p.str());
  if (p.length() > trunc) fail(Errc::TruncationTooSmall, p.str());
  TruncatedDual<Scalar> f(std::move(shape), trunc);
  f.set(p, Scalar(1));
  return f;
}

/// The unit of C*: the counit, i.e. coefficient 1 on every trivial path.
template <class Scalar>
TruncatedDual<Scalar> unit_dual(std::shared_ptr<const MonomialShape> shape, std::size_t trunc) {
  TruncatedDual<Scalar> f(shape, trunc);
  for (const VertexId& v : shape->quiver().vertices()) f.set(Path::trivial(v), Scalar(1));
  return f;
}

/// Dual pairing <f, v> = sum_p v(p) f(p). Every path of v must have length
/// <= the truncation of f, else the value would depend on the coset
/// representative.
template <class Scalar>
Scalar evaluate(const TruncatedDual<Scalar>& f, const PathVector<Scalar>& v) {
  Scalar acc(0);
  for (const auto& [p, c] : v.terms()) {
    if (p.length() > f.truncation()) fail(Errc::BeyondTruncation, p.str());
    acc += c * f.coeff(p);
  }
  return acc;
}

/// Convolution product: coefficient of s is the sum of f(p) g(q) over all
/// factorizations s = pq. Well defined on cosets because lengths add.
template <class Scalar>
TruncatedDual<Scalar> convolve(const TruncatedDual<Scalar>& f, const TruncatedDual<Scalar>& g) {
  if (!TruncatedDual<Scalar>::same_shape(f, g)) fail(Errc::ShapeMismatch, "convolve");
  std::size_t trunc = std::min(f.truncation(), g.truncation());
  TruncatedDual<Scalar> h(f.shape(), trunc);
  for (const auto& [p, a] : f.terms()) {
    if (p.length() > trunc) continue;
    for (const auto& [q, b] : g.terms()) {
      if (p.length() + q.length() > trunc) continue;
      if (p.target() != q.source()) continue;
      Path s = compose(p, q);
      if (!f.shape()->contains(s)) continue;  // pq need not lie in H
      h.add(s, a * b);
    }
  }
  return h;
}

template <class Scalar>
TruncatedDual<Scalar> dual_sum(const TruncatedDual<Scalar>& f, const TruncatedDual<Scalar>& g) {
  if (!TruncatedDual<Scalar>::same_shape(f, g)) fail(Errc::ShapeMismatch, "sum");
  std::size_t trunc = std::min(f.truncation(), g.truncation());
  TruncatedDual<Scalar> h(f.shape(), trunc);
  for (const auto& [p, a] : f.terms())
    if (p.length() <= trunc) h.add(p, a);
  for (const auto& [p, a] : g.terms())
    if (p.length() <= trunc) h.add(p, a);
  return h;
}

template <class Scalar>
TruncatedDual<Scalar> dual_negate(const TruncatedDual<Scalar>& f) {
  TruncatedDual<Scalar> h(f.shape(), f.truncation());
  for (const auto& [p, a] : f.terms()) h.set(p, -a);
  return h;
}

/// Re-truncation to a smaller degree (projection along C_m^perp).
template <class Scalar>
TruncatedDual<Scalar> truncate(const TruncatedDual<Scalar>& f, std::size_t m) {
  if (m > f.truncation()) fail(Errc::BadArgument, "cannot raise a truncation degree");
  TruncatedDual<Scalar> h(f.shape(), m);
  for (const auto& [p, a] : f.terms())
    if (p.length() <= m) h.set(p, a);
  return h;
}

/// Membership in C_n^perp: every stored path longer than n.
template <class Scalar>
bool in_cn_perp(const TruncatedDual<Scalar>& f, std::size_t n) {
  for (const auto& [p, a] : f.terms())
    if (p.length() <= n) return false;
  return true;
}

/// Two-sided inverse modulo C_N^perp. f is a unit iff every vertex
/// coefficient f(e_v) is nonzero; then with f = d + n (d the degree-0
/// part) the inverse is sum_k (-d^{-1} n)^k d^{-1}, truncated at N.
template <class Scalar>
TruncatedDual<Scalar> invert(const TruncatedDual<Scalar>& f) {
  const auto& shape = f.shape();
  std::size_t trunc = f.truncation();
  TruncatedDual<Scalar> d_inv(shape, trunc);
  for (const VertexId& v : shape->quiver().vertices()) {
    Scalar c = f.coeff(Path::trivial(v));
    if (is_zero(c)) fail(Errc::NotAUnit, "vanishing coefficient at vertex " + v);
    d_inv.set(Path::trivial(v), Scalar(1) / c);
  }
  TruncatedDual<Scalar> pos(shape, trunc);
  for (const auto& [p, a] : f.terms())
    if (!p.is_trivial()) pos.set(p, a);
  TruncatedDual<Scalar> step = dual_negate(convolve(d_inv, pos));
  TruncatedDual<Scalar> series = unit_dual<Scalar>(shape, trunc);
  TruncatedDual<Scalar> term = unit_dual<Scalar>(shape, trunc);
  for (std::size_t k = 1; k <= trunc; ++k) {
    term = convolve(term, step);
    if (term.terms().empty()) break;
    series = dual_sum(series, term);
  }
  return convolve(series, d_inv);
}

}  // namespace copath
