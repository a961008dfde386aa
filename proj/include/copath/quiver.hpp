#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "copath/errors.hpp"
#include "copath/extnat.hpp"

namespace copath {

using VertexId = std::string;
using BundleId = std::string;

/// A bundle of parallel arrows recorded once, with multiplicity >= 1 or omega.
struct Bundle {
  BundleId id;
  VertexId src;
  VertexId tgt;
  ExtNat multiplicity = ExtNat(std::uint64_t(1));

  friend bool operator==(const Bundle& a, const Bundle& b) {
    return a.id == b.id && a.src == b.src && a.tgt == b.tgt && a.multiplicity == b.multiplicity;
  }
};

/// Finite quiver with arrow bundles; loops and parallel bundles allowed.
/// Vertices and bundles are kept sorted by identifier.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<VertexId> vertices, std::vector<Bundle> bundles);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Bundle>& bundles() const { return bundles_; }

  bool has_vertex(const VertexId& v) const;
  void require_vertex(const VertexId& v) const;
  const Bundle* find_bundle(const BundleId& id) const;
  const Bundle& bundle(const BundleId& id) const;

  /// Bundles with the given source, in id order.
  std::vector<const Bundle*> bundles_from(const VertexId& v) const;

  bool all_finite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.bundles_ == b.bundles_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Bundle> bundles_;
  std::map<BundleId, std::size_t> by_id_;
};

/// Replaces the multiplicity of selected omega bundles by a finite bound.
/// Bounds for unknown or already-finite bundles are rejected.
Quiver instantiate(const Quiver& q, const std::map<BundleId, std::uint64_t>& bounds);

/// A concrete arrow: one member of a bundle, identified by its index.
struct Arrow {
  BundleId bundle;
  std::uint64_t index = 0;

  auto operator<=>(const Arrow&) const = default;
};

/// An oriented path, stored as the visited vertex chain plus the concrete
/// arrows between consecutive vertices. A trivial path has a single vertex
/// and no arrows. Paths are written in traversal order: in p = qr the
/// factor q is traversed first.
class Path {
 public:
  static Path trivial(VertexId v);
  /// Validating constructor: checks composability and index bounds.
  static Path of(const Quiver& q, const std::vector<Arrow>& arrows);

  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }
  const VertexId& source() const { return verts_.front(); }
  const VertexId& target() const { return verts_.back(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<VertexId>& vertex_chain() const { return verts_; }

  /// Extend by one arrow with known target vertex (no quiver lookup).
  Path extended(const Arrow& a, const VertexId& next_vertex) const;
  /// Contiguous segment [i, j): arrows i..j-1, vertices i..j.
  Path segment(std::size_t i, std::size_t j) const;

  std::string str() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.verts_.front() == b.verts_.front() && a.arrows_ == b.arrows_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  /// Total order: by source vertex, then arrow sequence (prefixes first).
  friend bool operator<(const Path& a, const Path& b) {
    if (a.verts_.front() != b.verts_.front()) return a.verts_.front() < b.verts_.front();
    return a.arrows_ < b.arrows_;
  }

 private:
  Path(std::vector<VertexId> verts, std::vector<Arrow> arrows)
      : verts_(std::move(verts)), arrows_(std::move(arrows)) {}

  std::vector<VertexId> verts_;
  std::vector<Arrow> arrows_;
};

/// Concatenation pq: traverse p, then q. Throws NotComposable unless
/// target(p) = source(q).
Path compose(const Path& p, const Path& q);

/// The |p|+1 pairs (q, r) with qr = p, ordered by |q| ascending.
std::vector<std::pair<Path, Path>> factorizations(const Path& p);

/// All contiguous subpaths of p, including the trivial path at every
/// visited vertex.
std::set<Path> subpaths(const Path& p);

/// A path at bundle level (indices unspecified), e.g. a forbidden factor.
using BundleWord = std::vector<BundleId>;

/// Checks that a bundle word is a composable chain; returns (source, target).
std::pair<VertexId, VertexId> bundle_word_endpoints(const Quiver& q, const BundleWord& word);

std::string bundle_word_str(const BundleWord& word);

}  // namespace copath
