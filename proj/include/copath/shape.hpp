#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "copath/quiver.hpp"

namespace copath {

enum class ShapeMode { Full, Forbid, Generators };

const char* shape_mode_name(ShapeMode m);

/// Recognizer for the allowed-path language of a monomial shape.
///
/// States are (vertex, suffix-memory) pairs; every state is accepting and
/// the forbidden sink is never materialized. In Full and Forbid modes one
/// edge per surviving bundle carries the bundle multiplicity as a weight;
/// in Generators mode states are the finitely many allowed paths themselves
/// and edges are concrete arrows of weight 1.
class AllowedAutomaton {
 public:
  struct State {
    VertexId vertex;
    std::string label;
  };
  struct Edge {
    int from = 0;
    int to = 0;
    BundleId bundle;
    std::optional<std::uint64_t> index;  // set iff the edge is a single concrete arrow
    ExtNat weight;
  };

  const std::vector<State>& states() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge indices leaving a state, sorted by (bundle, index).
  const std::vector<int>& out(int state) const { return out_[state]; }
  int initial(const VertexId& v) const;

  /// One concrete step; nullopt when the arrow is dead or out of range.
  std::optional<int> step(int state, const Arrow& a) const;
  /// Runs the concrete path from the initial state at its source.
  bool accepts(const Path& p) const;

 private:
  friend class MonomialShape;
  std::vector<State> states_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::map<VertexId, int> initial_;
};

/// Subpath closure of a path set, together with the trivial path at every
/// vertex of the quiver.
std::set<Path> closure(const Quiver& q, const std::vector<Path>& h0);

/// A subpath-closed set H of paths, presented as one of:
///   Full        — all paths of the quiver;
///   Forbid      — paths avoiding every listed bundle-level factor;
///   Generators  — the subpath closure of finitely many concrete paths.
/// Spans of such sets are exactly the monomial subcoalgebras of the path
/// coalgebra.
class MonomialShape {
 public:
  static MonomialShape full(Quiver q);
  static MonomialShape forbid(Quiver q, std::vector<BundleWord> factors);
  static MonomialShape generators(Quiver q, std::vector<Path> h0);

  const Quiver& quiver() const { return quiver_; }
  ShapeMode mode() const { return mode_; }

  /// Declared forbidden factors (deduplicated, sorted); Forbid mode only.
  const std::vector<BundleWord>& declared_forbidden() const { return declared_forbidden_; }
  /// Forbidden factors with redundant ones (containing another as a factor)
  /// removed.
  const std::vector<BundleWord>& minimal_forbidden_words() const { return minimal_forbidden_; }
  /// Declared generating paths (sorted); Generators mode only.
  const std::vector<Path>& declared_generators() const { return generators_; }
  /// The finite set H itself; Generators mode only.
  const std::set<Path>& generator_closure() const { return closure_; }

  /// Membership p in H, decided from the definition (factor scan or closure
  /// lookup), independently of the automaton. Paths that are not valid in
  /// the quiver are simply not members.
  bool contains(const Path& p) const;

  bool valid_in_quiver(const Path& p) const;

  const AllowedAutomaton& automaton() const { return automaton_; }

  /// How many concrete arrows of this bundle are length-1 paths of H.
  ExtNat allowed_arrow_count(const Bundle& b) const;

  friend bool operator==(const MonomialShape& a, const MonomialShape& b);

 private:
  MonomialShape() = default;
  void build_word_automaton();
  void build_generator_automaton();

  Quiver quiver_;
  ShapeMode mode_ = ShapeMode::Full;
  std::vector<BundleWord> declared_forbidden_;
  std::vector<BundleWord> minimal_forbidden_;
  std::vector<Path> generators_;
  std::set<Path> closure_;
  AllowedAutomaton automaton_;
};

/// One position of a forbidden-factor pattern: a bundle, optionally pinned
/// to a single concrete index (Generators mode); an unset index denotes
/// every instantiation.
struct PatternStep {
  BundleId bundle;
  std::optional<std::uint64_t> index;

  friend bool operator==(const PatternStep& a, const PatternStep& b) {
    return a.bundle == b.bundle && a.index == b.index;
  }
  friend bool operator<(const PatternStep& a, const PatternStep& b) {
    if (a.bundle != b.bundle) return a.bundle < b.bundle;
    return a.index < b.index;
  }
};
using FactorPattern = std::vector<PatternStep>;

/// The minimal forbidden factors of H: patterns not in H all of whose proper
/// factors are in H. Empty in Full mode; the minimized word list in Forbid
/// mode; concrete one-step extensions of closure elements in Generators mode
/// (which requires an all-finite quiver).
std::vector<FactorPattern> minimal_forbidden_patterns(const MonomialShape& shape);

}  // namespace copath
