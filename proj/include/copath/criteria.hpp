#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copath/paths_analysis.hpp"
#include "copath/shape.hpp"

namespace copath {

/// Per-vertex data for the covering criterion t41: a bound n(v), a set of
/// bundle-level path patterns ending at v (each denoting all of its index
/// instantiations), and a bound m(v) on the uncovered incoming arrows per
/// source vertex.
struct XDataEntry {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<BundleWord> patterns;
};
using XData = std::map<VertexId, XDataEntry>;

struct Verdict {
  enum class Status { Holds, Fails, NotApplicable };
  Status status = Status::NotApplicable;
  std::string reason;
  std::optional<std::pair<VertexId, VertexId>> pair_witness;
  std::optional<VertexId> vertex_witness;
  std::optional<BundleWord> pattern_witness;

  bool holds() const { return status == Status::Holds; }
  static Verdict pass() { return {Status::Holds, "", {}, {}, {}}; }
};

/// t44: between every ordered vertex pair there are only finitely many
/// allowed paths. Holding makes the coalgebra directly coreflexive with
/// torsion rational functors on both sides.
Verdict check_t44(const MonomialShape& shape);
Verdict check_t44(const MonomialShape& shape, const std::vector<PairStats>& stats);

/// t43: allowed path lengths between every ordered pair are bounded.
/// Holding makes direct coreflexivity equivalent to the torsion property.
Verdict check_t43(const MonomialShape& shape);
Verdict check_t43(const MonomialShape& shape, const std::vector<PairStats>& stats);

/// t41 (full shapes only): every pattern set X(v) consists of paths ending
/// at v of length <= n(v), and for each vertex w the incoming arrows at v
/// not covered as the last arrow of a pattern number at most m(v). Holding
/// gives the same equivalence as t43.
Verdict check_t41(const MonomialShape& shape, const XData& xdata);

/// Whether every vertex pair is joined by finitely many length-1 allowed
/// paths.
bool local_finite(const MonomialShape& shape);

/// The quiver with the same vertices whose bundle multiplicities count the
/// allowed length-1 paths of H.
Quiver ext_quiver(const MonomialShape& shape);

struct ConclusionFlag {
  bool set = false;
  std::string justified_by;
};

struct Conclusions {
  ConclusionFlag directly_coreflexive;
  ConclusionFlag torsion_rat_left;
  ConclusionFlag torsion_rat_right;
  ConclusionFlag equivalence_dc_iff_torsion;
};

struct Report {
  ShapeMode mode = ShapeMode::Full;
  Quiver quiver;
  std::vector<BundleWord> forbidden;
  std::vector<Path> generators;
  std::vector<PairStats> pairs;
  Verdict t44;
  Verdict t43;
  Verdict t41;
  bool locally_finite = false;
  Quiver ext;
  Conclusions conclusions;
  std::vector<std::string> notes;
};

/// Full analysis. Conclusion flags are set only from a holding verdict;
/// t44 yields the unconditional flags, t43/t41 only the equivalence flag.
/// For sub-full shapes, conclusions holding for the full shape over the
/// same quiver are inherited (subcoalgebra inheritance) and noted.
Report analyze(const MonomialShape& shape, const std::optional<XData>& xdata);

}  // namespace copath
