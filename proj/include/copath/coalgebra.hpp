#pragma once

#include <map>
#include <vector>

#include "copath/scalar.hpp"
#include "copath/shape.hpp"

namespace copath {

/// Element of the monomial coalgebra span(H): finite path -> scalar map
/// with no stored zeros.
template <class Scalar>
class PathVector {
 public:
  PathVector() = default;

  void add(const Path& p, const Scalar& c) {
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
      if (!is_zero(c)) coeffs_.emplace(p, c);
      return;
    }
    it->second += c;
    if (is_zero(it->second)) coeffs_.erase(it);
  }
  void set(const Path& p, const Scalar& c) {
    if (is_zero(c))
      coeffs_.erase(p);
    else
      coeffs_[p] = c;
  }
  Scalar coeff(const Path& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }
  const std::map<Path, Scalar>& terms() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  friend bool operator==(const PathVector& a, const PathVector& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<Path, Scalar> coeffs_;
};

/// One summand q (x) r of a comultiplication value, with its coefficient.
template <class Scalar>
struct FactorTriple {
  Path left;
  Path right;
  Scalar coeff;
};

/// Delta(p): all factorizations of p with coefficient 1. Every component
/// lies in H because H is subpath closed. Throws NotInShape.
template <class Scalar>
std::vector<FactorTriple<Scalar>> delta(const MonomialShape& shape, const Path& p) {
  if (!shape.contains(p)) fail(Errc::NotInShape, p.str());
  std::vector<FactorTriple<Scalar>> out;
  for (auto& [q, r] : factorizations(p)) out.push_back({q, r, Scalar(1)});
  return out;
}

/// counit(p) = 1 iff p is trivial.
template <class Scalar>
Scalar counit(const Path& p) {
  return p.is_trivial() ? Scalar(1) : Scalar(0);
}

/// Basis of the coradical-filtration layer C_n = span{p in H : |p| <= n},
/// grouped by (source, target, length).
struct CoradicalLayer {
  struct Group {
    VertexId src;
    VertexId tgt;
    std::size_t length;
    std::vector<Path> paths;
  };
  std::vector<Group> groups;
  std::size_t total = 0;
};

CoradicalLayer coradical_layer(const MonomialShape& shape, std::size_t n, std::size_t len_cap);

}  // namespace copath
