#pragma once

#include <cstdint>
#include <vector>

#include "copath/shape.hpp"

namespace copath {

/// Supremum of path lengths for a vertex pair. NoPath means not even the
/// trivial path connects the pair; Finite(0) means only the trivial path.
struct PathSup {
  enum class Kind { NoPath, Finite, Omega };
  Kind kind = Kind::NoPath;
  BigInt value = 0;

  static PathSup nopath() { return {}; }
  static PathSup finite(BigInt v) { return {Kind::Finite, std::move(v)}; }
  static PathSup omega() { return {Kind::Omega, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_omega() const { return kind == Kind::Omega; }
  bool is_nopath() const { return kind == Kind::NoPath; }
  std::string str() const {
    switch (kind) {
      case Kind::NoPath: return "nopath";
      case Kind::Omega: return "omega";
      default: return value.str();
    }
  }
  friend bool operator==(const PathSup& a, const PathSup& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

/// Number of allowed paths from v to w, counting the trivial path when
/// v = w. Omega iff some accepting run crosses a live cycle or an
/// omega-multiplicity bundle.
ExtNat path_count(const MonomialShape& shape, const VertexId& v, const VertexId& w);

/// Supremum of allowed path lengths from v to w.
PathSup max_len(const MonomialShape& shape, const VertexId& v, const VertexId& w);

/// Sum of multiplicities of bundles from v to w (the quantity a(v, w)).
ExtNat arrow_count(const Quiver& q, const VertexId& v, const VertexId& w);

struct EnumerateResult {
  std::vector<Path> paths;
  bool truncated = false;
};

/// Allowed paths from v to w of length <= max_len, in lexicographic order
/// (by bundle id then index, prefixes first), truncated at max_count.
/// Throws UninstantiatedOmega when an omega bundle would have to be
/// expanded.
EnumerateResult enumerate_paths(const MonomialShape& shape, const VertexId& v, const VertexId& w,
                                std::size_t max_len, std::size_t max_count);

/// Same, without a target constraint: all allowed paths leaving v.
EnumerateResult enumerate_from(const MonomialShape& shape, const VertexId& v, std::size_t max_len,
                               std::size_t max_count);

struct PairStats {
  VertexId v;
  VertexId w;
  ExtNat count;
  PathSup sup_len;
};

/// Statistics for every ordered vertex pair, in id order.
std::vector<PairStats> pair_stats(const MonomialShape& shape);

}  // namespace copath
