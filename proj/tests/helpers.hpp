#pragma once

// Shared test utilities: seeded random quivers/shapes and a brute-force
// path oracle that never touches the automaton.

#include <random>
#include <string>
#include <vector>

#include "copath/paths_analysis.hpp"
#include "copath/shape.hpp"

namespace copath::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return int(std::uniform_int_distribution<int>(lo, hi)(rng));
}

struct QuiverOptions {
  int max_vertices = 4;
  int max_bundles = 5;
  int max_mult = 2;
  bool allow_omega = false;
  bool acyclic = false;
};

inline Quiver random_quiver(Rng& rng, const QuiverOptions& opt = {}) {
  int nv = pick(rng, 1, opt.max_vertices);
  std::vector<VertexId> vertices;
  for (int i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  int nb = pick(rng, 0, opt.max_bundles);
  std::vector<Bundle> bundles;
  for (int i = 0; i < nb; ++i) {
    int s = pick(rng, 0, nv - 1);
    int t = pick(rng, 0, nv - 1);
    if (opt.acyclic) {
      if (nv == 1) break;
      if (s == t) continue;
      if (s > t) std::swap(s, t);
    }
    ExtNat mult{std::uint64_t(1)};
    if (opt.allow_omega && pick(rng, 0, 5) == 0)
      mult = ExtNat::omega();
    else if (pick(rng, 0, 3) == 0)
      mult = ExtNat(std::uint64_t(pick(rng, 2, opt.max_mult)));
    bundles.push_back({"b" + std::to_string(i), vertices[std::size_t(s)],
                       vertices[std::size_t(t)], mult});
  }
  return Quiver(vertices, bundles);
}

// Random composable bundle word by a random walk (empty when stuck).
inline BundleWord random_bundle_word(Rng& rng, const Quiver& q, int len) {
  BundleWord word;
  if (q.bundles().empty()) return word;
  const Bundle& first = q.bundles()[std::size_t(pick(rng, 0, int(q.bundles().size()) - 1))];
  word.push_back(first.id);
  VertexId at = first.tgt;
  for (int i = 1; i < len; ++i) {
    auto outs = q.bundles_from(at);
    if (outs.empty()) break;
    const Bundle* b = outs[std::size_t(pick(rng, 0, int(outs.size()) - 1))];
    word.push_back(b->id);
    at = b->tgt;
  }
  return word;
}

// Random concrete path by a random walk from a random vertex.
inline Path random_path(Rng& rng, const Quiver& q, int max_len) {
  const auto& vs = q.vertices();
  VertexId at = vs[std::size_t(pick(rng, 0, int(vs.size()) - 1))];
  Path p = Path::trivial(at);
  int len = pick(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    auto outs = q.bundles_from(at);
    if (outs.empty()) break;
    const Bundle* b = outs[std::size_t(pick(rng, 0, int(outs.size()) - 1))];
    std::uint64_t index = 0;
    if (b->multiplicity.is_finite())
      index = std::uint64_t(pick(rng, 0, int(b->multiplicity.finite().convert_to<int>()) - 1));
    else
      index = std::uint64_t(pick(rng, 0, 3));
    p = p.extended({b->id, index}, b->tgt);
    at = b->tgt;
  }
  return p;
}

struct ShapeOptions {
  QuiverOptions quiver;
  bool allow_full = true;
  bool allow_forbid = true;
  bool allow_generators = true;
};

inline MonomialShape random_shape(Rng& rng, const ShapeOptions& opt = {}) {
  Quiver q = random_quiver(rng, opt.quiver);
  std::vector<int> modes;
  if (opt.allow_full) modes.push_back(0);
  if (opt.allow_forbid) modes.push_back(1);
  if (opt.allow_generators) modes.push_back(2);
  int mode = modes[std::size_t(pick(rng, 0, int(modes.size()) - 1))];
  if (mode == 0 || q.bundles().empty()) return MonomialShape::full(q);
  if (mode == 1) {
    std::vector<BundleWord> factors;
    int nf = pick(rng, 1, 3);
    for (int i = 0; i < nf; ++i) {
      BundleWord w = random_bundle_word(rng, q, pick(rng, 1, 3));
      if (!w.empty()) factors.push_back(w);
    }
    return MonomialShape::forbid(q, factors);
  }
  std::vector<Path> gens;
  int ng = pick(rng, 1, 4);
  for (int i = 0; i < ng; ++i) gens.push_back(random_path(rng, q, 4));
  return MonomialShape::generators(q, gens);
}

// All allowed paths from v of length <= max_len, found by extending allowed
// prefixes one concrete arrow at a time and testing membership from the
// definition. H is subpath closed, so pruning at the first failing prefix
// is sound. Requires finite multiplicities.
struct BruteForce {
  std::vector<Path> paths;
  bool overflow = false;
};

inline BruteForce brute_paths_from(const MonomialShape& shape, const VertexId& v,
                                   std::size_t max_len, std::size_t node_cap = 2000000) {
  BruteForce out;
  std::vector<Path> frontier{Path::trivial(v)};
  if (!shape.contains(Path::trivial(v))) return out;
  std::size_t nodes = 0;
  while (!frontier.empty()) {
    Path p = frontier.back();
    frontier.pop_back();
    out.paths.push_back(p);
    if (++nodes > node_cap) {
      out.overflow = true;
      return out;
    }
    if (p.length() >= max_len) continue;
    for (const Bundle* b : shape.quiver().bundles_from(p.target())) {
      std::uint64_t mult = b->multiplicity.finite().convert_to<std::uint64_t>();
      for (std::uint64_t i = 0; i < mult; ++i) {
        Path q = p.extended({b->id, i}, b->tgt);
        if (shape.contains(q)) frontier.push_back(q);
      }
    }
  }
  return out;
}

}  // namespace copath::testing
