#include "copath/report_io.hpp"

#include <cstdint>
#include <sstream>

namespace copath {

namespace {

using nlohmann::ordered_json;

ordered_json extnat_to_json(const ExtNat& n) {
  if (n.is_omega()) return "omega";
  const BigInt& v = n.finite();
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();  // beyond 64-bit: decimal string
}

ordered_json pathsup_to_json(const PathSup& s) {
  if (s.is_omega()) return "omega";
  if (s.is_nopath()) return "nopath";
  if (s.value <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return s.value.convert_to<std::int64_t>();
  return s.value.str();
}

const char* status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return "holds";
    case Verdict::Status::Fails: return "fails";
    case Verdict::Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["status"] = status_name(v.status);
  j["reason"] = v.reason;
  if (v.pair_witness || v.vertex_witness || v.pattern_witness) {
    ordered_json w;
    if (v.pair_witness) w["pair"] = {v.pair_witness->first, v.pair_witness->second};
    if (v.vertex_witness) w["vertex"] = *v.vertex_witness;
    if (v.pattern_witness) w["pattern"] = bundle_word_str(*v.pattern_witness);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ordered_json flag_to_json(const ConclusionFlag& f) {
  ordered_json j;
  j["set"] = f.set;
  j["justified_by"] = f.set ? ordered_json(f.justified_by) : ordered_json(nullptr);
  return j;
}

}  // namespace

ordered_json quiver_to_json(const Quiver& q) {
  ordered_json j;
  j["vertices"] = q.vertices();
  ordered_json bundles = ordered_json::array();
  for (const Bundle& b : q.bundles()) {
    ordered_json e;
    e["id"] = b.id;
    e["src"] = b.src;
    e["tgt"] = b.tgt;
    e["mult"] = extnat_to_json(b.multiplicity);
    bundles.push_back(e);
  }
  j["bundles"] = bundles;
  return j;
}

ordered_json report_to_json(const Report& report) {
  ordered_json j;
  j["quiver"] = quiver_to_json(report.quiver);
  ordered_json mode;
  mode["kind"] = shape_mode_name(report.mode);
  if (report.mode == ShapeMode::Forbid) {
    ordered_json factors = ordered_json::array();
    for (const BundleWord& f : report.forbidden) factors.push_back(f);
    mode["factors"] = factors;
  } else if (report.mode == ShapeMode::Generators) {
    ordered_json paths = ordered_json::array();
    for (const Path& p : report.generators) paths.push_back(p.str());
    mode["paths"] = paths;
  }
  j["mode"] = mode;
  ordered_json pairs = ordered_json::array();
  for (const PairStats& ps : report.pairs) {
    ordered_json e;
    e["v"] = ps.v;
    e["w"] = ps.w;
    e["path_count"] = extnat_to_json(ps.count);
    e["max_len"] = pathsup_to_json(ps.sup_len);
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  ordered_json theorems;
  theorems["t44"] = verdict_to_json(report.t44);
  theorems["t43"] = verdict_to_json(report.t43);
  theorems["t41"] = verdict_to_json(report.t41);
  j["theorems"] = theorems;
  j["local_finite"] = report.locally_finite;
  j["ext_quiver"] = quiver_to_json(report.ext);
  ordered_json conclusions;
  conclusions["directly_coreflexive"] = flag_to_json(report.conclusions.directly_coreflexive);
  conclusions["torsion_rat_left"] = flag_to_json(report.conclusions.torsion_rat_left);
  conclusions["torsion_rat_right"] = flag_to_json(report.conclusions.torsion_rat_right);
  conclusions["equivalence_dc_iff_torsion"] =
      flag_to_json(report.conclusions.equivalence_dc_iff_torsion);
  j["conclusions"] = conclusions;
  j["notes"] = report.notes;
  return j;
}

namespace {

std::string verdict_text(const std::string& name, const Verdict& v) {
  std::ostringstream os;
  os << name << ": " << status_name(v.status);
  if (v.pair_witness)
    os << "  witness pair (" << v.pair_witness->first << ", " << v.pair_witness->second << ")";
  if (v.vertex_witness) os << "  witness vertex " << *v.vertex_witness;
  if (v.pattern_witness) os << "  witness pattern '" << bundle_word_str(*v.pattern_witness) << "'";
  if (!v.reason.empty()) os << "  -- " << v.reason;
  return os.str();
}

std::string flag_text(const std::string& name, const ConclusionFlag& f) {
  std::string s = "  " + name + ": ";
  s += f.set ? "yes  [" + f.justified_by + "]" : "not established";
  return s;
}

}  // namespace

std::string report_to_text(const Report& report) {
  std::ostringstream os;
  os << "mode: " << shape_mode_name(report.mode) << "\n";
  os << "vertices:";
  for (const VertexId& v : report.quiver.vertices()) os << ' ' << v;
  os << "\nbundles:\n";
  for (const Bundle& b : report.quiver.bundles())
    os << "  " << b.id << " : " << b.src << " -> " << b.tgt << " *" << b.multiplicity.str()
       << "\n";
  if (report.mode == ShapeMode::Forbid) {
    os << "forbidden factors:\n";
    for (const BundleWord& f : report.forbidden) os << "  " << bundle_word_str(f) << "\n";
  }
  if (report.mode == ShapeMode::Generators) {
    os << "generators:\n";
    for (const Path& p : report.generators) os << "  " << p.str() << "\n";
  }
  os << "pairs (v, w): path_count, max_len\n";
  for (const PairStats& ps : report.pairs)
    os << "  (" << ps.v << ", " << ps.w << "): " << ps.count.str() << ", " << ps.sup_len.str()
       << "\n";
  os << verdict_text("t44", report.t44) << "\n";
  os << verdict_text("t43", report.t43) << "\n";
  os << verdict_text("t41", report.t41) << "\n";
  os << "local_finite: " << (report.locally_finite ? "true" : "false") << "\n";
  os << "ext quiver bundles:\n";
  for (const Bundle& b : report.ext.bundles())
    os << "  " << b.id << " : " << b.src << " -> " << b.tgt << " *" << b.multiplicity.str()
       << "\n";
  os << "conclusions:\n";
  os << flag_text("directly_coreflexive", report.conclusions.directly_coreflexive) << "\n";
  os << flag_text("torsion_rat_left", report.conclusions.torsion_rat_left) << "\n";
  os << flag_text("torsion_rat_right", report.conclusions.torsion_rat_right) << "\n";
  os << flag_text("equivalence_dc_iff_torsion", report.conclusions.equivalence_dc_iff_torsion)
     << "\n";
  for (const std::string& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const MonomialShape& shape) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  if (shape.mode() == ShapeMode::Forbid) {
    std::string legend = "forbidden:";
    for (const BundleWord& f : shape.declared_forbidden()) legend += " " + bundle_word_str(f) + ";";
    os << "  label=" << dot_quote(legend) << ";\n";
  } else if (shape.mode() == ShapeMode::Generators) {
    std::string legend = "generators:";
    for (const Path& p : shape.declared_generators()) legend += " " + p.str() + ";";
    os << "  label=" << dot_quote(legend) << ";\n";
  }
  for (const VertexId& v : shape.quiver().vertices()) os << "  " << dot_quote(v) << ";\n";
  for (const Bundle& b : shape.quiver().bundles()) {
    std::string label = b.id;
    if (!(b.multiplicity == ExtNat(std::uint64_t(1)))) label += " *" + b.multiplicity.str();
    os << "  " << dot_quote(b.src) << " -> " << dot_quote(b.tgt) << " [label=" << dot_quote(label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace copath
