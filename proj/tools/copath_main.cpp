#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "copath/criteria.hpp"
#include "copath/dual.hpp"
#include "copath/report_io.hpp"
#include "copath/reps.hpp"
#include "copath/shapefile.hpp"

namespace {

using namespace copath;

struct FieldSpec {
  bool rational = true;
  std::uint64_t prime = 0;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "q") return {};
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(3));
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "bad field spec '" + text + "'");
    }
    Fp::check_modulus(p);
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(Errc::BadArgument, "modulus " + std::to_string(p) + " is not prime");
    return {false, p};
  }
  fail(Errc::BadArgument, "field must be 'q' or 'fp:<prime>'");
}

template <class Scalar>
Scalar parse_coeff(const std::string& text, const FieldSpec& field);

template <>
Rat parse_coeff<Rat>(const std::string& text, const FieldSpec&) {
  return Rat::parse(text);
}

template <>
Fp parse_coeff<Fp>(const std::string& text, const FieldSpec& field) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    try {
      return Fp(std::stoll(s), field.prime);
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "cannot parse prime-field coefficient '" + s + "'");
    }
  };
  if (slash == std::string::npos) return parse_int(text);
  return parse_int(text.substr(0, slash)) / parse_int(text.substr(slash + 1));
}

// Terms like "1*e_a + 2*x.0 x.1 - 1/2*y.0"; a missing coefficient means 1.
template <class Scalar>
TruncatedDual<Scalar> parse_dual_spec(const std::shared_ptr<const MonomialShape>& shape,
                                      std::size_t trunc, const std::string& text,
                                      const FieldSpec& field) {
  std::string padded;
  for (char c : text) {
    if (c == '+' || c == '-' || c == '*')
      padded += std::string(" ") + c + " ";
    else
      padded += c;
  }
  std::istringstream in(padded);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  TruncatedDual<Scalar> out(shape, trunc);
  std::size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    Scalar sign(1);
    if (toks[i] == "+" || toks[i] == "-") {
      if (toks[i] == "-") sign = Scalar(-1);
      ++i;
    } else if (!first) {
      fail(Errc::BadArgument, "expected '+' or '-' before '" + toks[i] + "'");
    }
    first = false;
    Scalar coeff(1);
    if (i + 1 < toks.size() && toks[i + 1] == "*") {
      coeff = parse_coeff<Scalar>(toks[i], field);
      i += 2;
    }
    std::vector<std::string> path_toks;
    while (i < toks.size() && toks[i] != "+" && toks[i] != "-") path_toks.push_back(toks[i++]);
    if (path_toks.empty()) fail(Errc::BadArgument, "term without a path");
    Path p = parse_path_tokens(shape->quiver(), path_toks);
    if (!shape->contains(p)) fail(Errc::NotInShape, p.str());
    if (p.length() > trunc) fail(Errc::BeyondTruncation, p.str());
    out.add(p, sign * coeff);
  }
  return out;
}

template <class Scalar>
std::string dual_to_string(const TruncatedDual<Scalar>& f) {
  if (f.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << p.str();
  }
  return os.str();
}

template <class Scalar>
Representation<Scalar> parse_rep_spec(const std::shared_ptr<const MonomialShape>& shape,
                                      const std::string& text, Side side, const Scalar& one) {
  if (text.rfind("simple:", 0) == 0) return simple<Scalar>(shape, text.substr(7), side);
  if (text.rfind("inj:", 0) == 0) {
    std::string rest = text.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      fail(Errc::BadArgument, "rep spec 'inj:<vertex>:<depth>' expected, got '" + text + "'");
    std::size_t depth = 0;
    try {
      depth = std::stoull(rest.substr(colon + 1));
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "bad depth in rep spec '" + text + "'");
    }
    return injective_trunc<Scalar>(shape, rest.substr(0, colon), side, depth, one);
  }
  fail(Errc::BadArgument, "rep spec must be simple:<vertex> or inj:<vertex>:<depth>");
}

int run_analyze(const std::string& file, bool json, bool want_xdata) {
  ShapeFile sf = load_shape_file(file);
  if (want_xdata && !sf.xdata) fail(Errc::Semantic, "--xdata given but the file has no xdata");
  MonomialShape shape = sf.build_shape();
  Report report = analyze(shape, sf.xdata);
  if (!sf.bounds.empty()) {
    for (const auto& [id, bound] : sf.bounds)
      report.notes.push_back("bundle " + id + " instantiated at " + std::to_string(bound));
  }
  if (json)
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  return 0;
}

int run_delta(const std::string& file, const std::string& path_text) {
  ShapeFile sf = load_shape_file(file);
  MonomialShape shape = sf.build_shape();
  std::istringstream in(path_text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  Path p = parse_path_tokens(sf.quiver, toks);
  auto triples = delta<Rat>(shape, p);
  std::cout << "delta(" << p.str() << "):\n";
  for (const auto& t : triples)
    std::cout << "  (" << t.left.str() << ") (x) (" << t.right.str() << ")\n";
  return 0;
}

template <class Scalar>
int run_convolve_typed(const ShapeFile& sf, std::size_t trunc, const std::string& lhs,
                       const std::string& rhs, const FieldSpec& field) {
  auto shape = std::make_shared<const MonomialShape>(sf.build_shape());
  auto f = parse_dual_spec<Scalar>(shape, trunc, lhs, field);
  if (rhs == "<invert>") {
    auto inv = invert(f);
    std::cout << dual_to_string(inv) << "\n";
    return 0;
  }
  auto g = parse_dual_spec<Scalar>(shape, trunc, rhs, field);
  std::cout << dual_to_string(convolve(f, g)) << "\n";
  return 0;
}

template <class Scalar>
int run_ext1_typed(const ShapeFile& sf, const std::string& m_spec, const std::string& n_spec,
                   Side side, const Scalar& one) {
  auto shape = std::make_shared<const MonomialShape>(sf.build_shape());
  auto m = parse_rep_spec<Scalar>(shape, m_spec, side, one);
  auto n = parse_rep_spec<Scalar>(shape, n_spec, side, one);
  auto ext = ext1(m, n);
  std::cout << "dim ext1 = " << ext.dim << "\n";
  std::cout << "cocycle space dim = " << ext.cocycle_dim
            << ", coboundary dim = " << ext.coboundary_dim
            << ", representative cocycles = " << ext.cocycles.size() << "\n";
  return 0;
}

template <class Scalar>
int run_thick_typed(std::uint64_t n, const Scalar& one) {
  ThickCheck tc = sequence_check_thick<Scalar>(n, one);
  std::cout << "n=" << tc.n << " hom(T,E)=" << tc.hom_te << " hom(T,T^n)=" << tc.hom_t_tn
            << " socle(E)=S: " << (tc.socle_is_s ? "yes" : "no")
            << " euler: " << (tc.euler_ok ? "ok" : "FAIL") << "\n";
  std::cout << "ext1(T,S)=" << tc.ext_ts << " ext1(T,E)=" << tc.ext_te << " identity "
            << (tc.identity_ok ? "OK" : "FAIL") << "\n";
  return tc.ok ? 0 : 2;
}

int run_dot(const std::string& file) {
  ShapeFile sf = load_shape_file(file);
  MonomialShape shape = sf.build_shape();
  std::cout << to_dot(shape);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver path coalgebras: dual-algebra arithmetic, comodule invariants and "
               "direct-coreflexivity criteria"};
  app.require_subcommand(1);

  std::string file, path_text, lhs, rhs, m_spec, n_spec;
  std::string field_text = "q", side_text = "right";
  std::size_t trunc = 0;
  std::uint64_t thick_n = 1;
  bool as_json = false, as_text = false, want_xdata = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report on a shape file");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--json", as_json, "JSON report");
  analyze_cmd->add_flag("--text", as_text, "plain-text report (default)");
  analyze_cmd->add_flag("--xdata", want_xdata, "require xdata from the file");

  auto* delta_cmd = app.add_subcommand("delta", "print the comultiplication of a path");
  delta_cmd->add_option("file", file)->required();
  delta_cmd->add_option("--path", path_text, "space-separated arrows, or a vertex")->required();

  auto* conv_cmd = app.add_subcommand("convolve", "convolution in the truncated dual algebra");
  conv_cmd->add_option("file", file)->required();
  conv_cmd->add_option("--trunc", trunc, "truncation degree")->required();
  conv_cmd->add_option("--lhs", lhs)->required();
  conv_cmd->add_option("--rhs", rhs, "a dual spec, or <invert> for the inverse of --lhs")
      ->required();
  conv_cmd->add_option("--field", field_text, "q or fp:<prime>");

  auto* ext_cmd = app.add_subcommand("ext1", "Ext^1 between built-in comodules");
  ext_cmd->add_option("file", file)->required();
  ext_cmd->add_option("--M", m_spec, "simple:<v> or inj:<v>:<depth>")->required();
  ext_cmd->add_option("--N", n_spec, "simple:<v> or inj:<v>:<depth>")->required();
  ext_cmd->add_option("--side", side_text, "right (default) or left");
  ext_cmd->add_option("--field", field_text, "q or fp:<prime>");

  auto* thick_cmd = app.add_subcommand("thick-check", "finite thick-quiver consistency check");
  thick_cmd->add_option("--n", thick_n, "number of parallel arrows")->required();
  thick_cmd->add_option("--field", field_text, "q or fp:<prime>");

  auto* dot_cmd = app.add_subcommand("dot", "DOT export of the quiver");
  dot_cmd->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      if (as_json && as_text) fail(Errc::BadArgument, "choose one of --json/--text");
      return run_analyze(file, as_json, want_xdata);
    }
    if (delta_cmd->parsed()) return run_delta(file, path_text);
    FieldSpec field = parse_field(field_text);
    Side side = side_text == "left" ? Side::Left : Side::Right;
    if (side_text != "left" && side_text != "right")
      fail(Errc::BadArgument, "--side must be right or left");
    if (conv_cmd->parsed()) {
      ShapeFile sf = load_shape_file(file);
      return field.rational ? run_convolve_typed<Rat>(sf, trunc, lhs, rhs, field)
                            : run_convolve_typed<Fp>(sf, trunc, lhs, rhs, field);
    }
    if (ext_cmd->parsed()) {
      ShapeFile sf = load_shape_file(file);
      return field.rational ? run_ext1_typed<Rat>(sf, m_spec, n_spec, side, Rat(1))
                            : run_ext1_typed<Fp>(sf, m_spec, n_spec, side, Fp(1, field.prime));
    }
    if (thick_cmd->parsed())
      return field.rational ? run_thick_typed<Rat>(thick_n, Rat(1))
                            : run_thick_typed<Fp>(thick_n, Fp(1, field.prime));
    if (dot_cmd->parsed()) return run_dot(file);
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
