#include "copath/criteria.hpp"

#include <algorithm>

namespace copath {

Verdict check_t44(const MonomialShape&, const std::vector<PairStats>& stats) {
  for (const PairStats& ps : stats) {
    if (ps.count.is_omega()) {
      Verdict v;
      v.status = Verdict::Status::Fails;
      v.pair_witness = {ps.v, ps.w};
      v.reason = "infinitely many allowed paths from " + ps.v + " to " + ps.w;
      return v;
    }
  }
  Verdict v = Verdict::pass();
  v.reason = "finitely many allowed paths between every vertex pair";
  return v;
}

Verdict check_t44(const MonomialShape& shape) { return check_t44(shape, pair_stats(shape)); }

Verdict check_t43(const MonomialShape&, const std::vector<PairStats>& stats) {
  for (const PairStats& ps : stats) {
    if (ps.sup_len.is_omega()) {
      Verdict v;
      v.status = Verdict::Status::Fails;
      v.pair_witness = {ps.v, ps.w};
      v.reason = "allowed path lengths from " + ps.v + " to " + ps.w + " are unbounded";
      return v;
    }
  }
  Verdict v = Verdict::pass();
  v.reason = "allowed path lengths bounded for every vertex pair";
  return v;
}

Verdict check_t43(const MonomialShape& shape) { return check_t43(shape, pair_stats(shape)); }

Verdict check_t41(const MonomialShape& shape, const XData& xdata) {
  if (shape.mode() != ShapeMode::Full) {
    Verdict v;
    v.status = Verdict::Status::NotApplicable;
    v.reason = "stated for the full path coalgebra only";
    return v;
  }
  const Quiver& q = shape.quiver();
  for (const auto& [v, entry] : xdata) {
    if (!q.has_vertex(v)) fail(Errc::MalformedXData, "unknown vertex " + v);
    for (const BundleWord& p : entry.patterns) {
      if (p.empty()) fail(Errc::MalformedXData, "empty pattern at vertex " + v);
      for (const BundleId& b : p)
        if (!q.find_bundle(b)) fail(Errc::MalformedXData, "unknown bundle " + b);
      try {
        bundle_word_endpoints(q, p);
      } catch (const Error&) {
        fail(Errc::MalformedXData, "non-composable pattern at vertex " + v);
      }
    }
  }
  auto entry_for = [&xdata](const VertexId& v) {
    auto it = xdata.find(v);
    return it == xdata.end() ? XDataEntry{} : it->second;
  };
  for (const VertexId& v : q.vertices()) {
    XDataEntry entry = entry_for(v);
    // (Q1) patterns end at v and are no longer than n(v)
    for (const BundleWord& p : entry.patterns) {
      auto [src, tgt] = bundle_word_endpoints(q, p);
      if (tgt != v) {
        Verdict verdict;
        verdict.status = Verdict::Status::Fails;
        verdict.vertex_witness = v;
        verdict.pattern_witness = p;
        verdict.reason = "pattern '" + bundle_word_str(p) + "' does not end at " + v;
        return verdict;
      }
      if (p.size() > entry.n) {
        Verdict verdict;
        verdict.status = Verdict::Status::Fails;
        verdict.vertex_witness = v;
        verdict.pattern_witness = p;
        verdict.reason = "pattern '" + bundle_word_str(p) + "' longer than n(" + v +
                         ") = " + std::to_string(entry.n);
        return verdict;
      }
    }
    // (Q2) incoming bundles at v that never appear as the last arrow of a
    // pattern; every index of such a bundle is uncovered.
    std::set<BundleId> covered;
    for (const BundleWord& p : entry.patterns) covered.insert(p.back());
    for (const VertexId& w : q.vertices()) {
      ExtNat uncovered{std::uint64_t(0)};
      for (const Bundle& b : q.bundles())
        if (b.tgt == v && b.src == w && !covered.count(b.id)) uncovered += b.multiplicity;
      if (uncovered.is_omega() || uncovered > ExtNat(entry.m)) {
        Verdict verdict;
        verdict.status = Verdict::Status::Fails;
        verdict.pair_witness = {v, w};
        verdict.vertex_witness = v;
        verdict.reason = "uncovered arrows from " + w + " into " + v + " number " +
                         uncovered.str() + " > m(" + v + ") = " + std::to_string(entry.m);
        return verdict;
      }
    }
  }
  Verdict verdict = Verdict::pass();
  verdict.reason = "pattern sets cover all but boundedly many incoming arrows";
  return verdict;
}

bool local_finite(const MonomialShape& shape) {
  for (const Bundle& b : shape.quiver().bundles())
    if (shape.allowed_arrow_count(b).is_omega()) return false;
  return true;
}

Quiver ext_quiver(const MonomialShape& shape) {
  std::vector<Bundle> bundles;
  for (const Bundle& b : shape.quiver().bundles()) {
    ExtNat count = shape.allowed_arrow_count(b);
    if (count == ExtNat(std::uint64_t(0))) continue;
    bundles.push_back({b.id, b.src, b.tgt, count});
  }
  return Quiver(shape.quiver().vertices(), std::move(bundles));
}

Report analyze(const MonomialShape& shape, const std::optional<XData>& xdata) {
  Report report;
  report.mode = shape.mode();
  report.quiver = shape.quiver();
  report.forbidden = shape.declared_forbidden();
  report.generators = shape.declared_generators();
  report.pairs = pair_stats(shape);
  report.t44 = check_t44(shape, report.pairs);
  report.t43 = check_t43(shape, report.pairs);
  if (xdata) {
    report.t41 = check_t41(shape, *xdata);
    report.notes.push_back(
        "xdata patterns denote every concrete index instantiation; a pattern set may stand for "
        "infinitely many paths");
  } else {
    report.t41.status = Verdict::Status::NotApplicable;
    report.t41.reason = "no xdata supplied";
  }
  report.locally_finite = local_finite(shape);
  report.ext = ext_quiver(shape);

  if (report.t44.holds()) {
    report.conclusions.directly_coreflexive = {true, "t44"};
    report.conclusions.torsion_rat_left = {true, "t44"};
    report.conclusions.torsion_rat_right = {true, "t44"};
    report.notes.push_back(
        "t44 holds: also coreflexive provided the coradical is coreflexive over the base field "
        "(automatic over infinite fields)");
  }
  std::string equiv_by;
  if (report.t43.holds()) equiv_by = "t43";
  if (report.t41.holds()) equiv_by += equiv_by.empty() ? "t41" : ",t41";
  if (!equiv_by.empty()) report.conclusions.equivalence_dc_iff_torsion = {true, equiv_by};

  if (shape.mode() != ShapeMode::Full) {
    MonomialShape full = MonomialShape::full(shape.quiver());
    Verdict full_t44 = check_t44(full);
    if (full_t44.holds()) {
      auto inherit = [](ConclusionFlag& flag) {
        if (!flag.set) flag = {true, "t44 on the full shape, subcoalgebra inheritance"};
      };
      inherit(report.conclusions.directly_coreflexive);
      inherit(report.conclusions.torsion_rat_left);
      inherit(report.conclusions.torsion_rat_right);
      report.notes.push_back(
          "t44 holds for the full path coalgebra over this quiver; direct coreflexivity and the "
          "torsion property pass to every subcoalgebra");
    }
  }
  return report;
}

}  // namespace copath
