#include "copath/shapefile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace copath {

namespace {

struct Tok {
  std::string text;
  std::size_t col;  // 1-based
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Tok> lex_line(const std::string& line, std::size_t lineno) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::size_t col = i + 1;
    if (word_char(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j])) ++j;
      toks.push_back({line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      toks.push_back({"->", col});
      i += 2;
      continue;
    }
    if (c == ':' || c == '*' || c == '=' || c == ';') {
      toks.push_back({std::string(1, c), col});
      ++i;
      continue;
    }
    throw SyntaxError(lineno, col, std::string("unexpected character '") + c + "'");
  }
  return toks;
}

struct Statement {
  std::size_t line;
  std::vector<Tok> toks;
};

std::uint64_t parse_uint(const Statement& st, const Tok& t) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw SyntaxError(st.line, t.col, "expected a number, got '" + t.text + "'");
  try {
    return std::stoull(t.text);
  } catch (const std::exception&) {
    throw SyntaxError(st.line, t.col, "number out of range: '" + t.text + "'");
  }
}

[[noreturn]] void expected(const Statement& st, std::size_t col, const std::string& what) {
  throw SyntaxError(st.line, col, "expected " + what);
}

const Tok& tok_at(const Statement& st, std::size_t i, const std::string& what) {
  if (i >= st.toks.size())
    expected(st, st.toks.empty() ? 1 : st.toks.back().col + st.toks.back().text.size(), what);
  return st.toks[i];
}

void expect_sym(const Statement& st, std::size_t i, const std::string& sym) {
  const Tok& t = tok_at(st, i, "'" + sym + "'");
  if (t.text != sym) expected(st, t.col, "'" + sym + "' before '" + t.text + "'");
}

}  // namespace

ShapeFile parse_shape_file(const std::string& text) {
  std::vector<Statement> statements;
  {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = lex_line(line, lineno);
      if (!toks.empty()) statements.push_back({lineno, std::move(toks)});
    }
  }

  // First pass: declarations.
  std::vector<VertexId> vertices;
  std::vector<Bundle> bundles;
  std::map<BundleId, std::uint64_t> bounds;
  for (const Statement& st : statements) {
    const std::string& head = st.toks[0].text;
    if (head == "vertex") {
      const Tok& id = tok_at(st, 1, "vertex id");
      if (st.toks.size() > 2) expected(st, st.toks[2].col, "end of line");
      if (std::find(vertices.begin(), vertices.end(), id.text) != vertices.end())
        throw SemanticError(id.text, "duplicate vertex");
      vertices.push_back(id.text);
    } else if (head == "arrow") {
      // arrow <id> : <src> -> <tgt> [* <mult>|* omega]
      const Tok& id = tok_at(st, 1, "bundle id");
      expect_sym(st, 2, ":");
      const Tok& src = tok_at(st, 3, "source vertex");
      expect_sym(st, 4, "->");
      const Tok& tgt = tok_at(st, 5, "target vertex");
      ExtNat mult{std::uint64_t(1)};
      if (st.toks.size() > 6) {
        expect_sym(st, 6, "*");
        const Tok& m = tok_at(st, 7, "multiplicity");
        if (m.text == "omega")
          mult = ExtNat::omega();
        else
          mult = ExtNat(parse_uint(st, m));
        if (st.toks.size() > 8) expected(st, st.toks[8].col, "end of line");
      }
      for (const Bundle& b : bundles)
        if (b.id == id.text) throw SemanticError(id.text, "duplicate bundle");
      if (std::find(vertices.begin(), vertices.end(), src.text) == vertices.end())
        throw SemanticError(src.text, "unknown vertex");
      if (std::find(vertices.begin(), vertices.end(), tgt.text) == vertices.end())
        throw SemanticError(tgt.text, "unknown vertex");
      if (mult.is_finite() && mult.finite() < 1)
        throw SemanticError(id.text, "multiplicity must be >= 1");
      bundles.push_back({id.text, src.text, tgt.text, mult});
    } else if (head == "instantiate") {
      // instantiate <bundle>=<int>
      const Tok& id = tok_at(st, 1, "bundle id");
      expect_sym(st, 2, "=");
      const Tok& num = tok_at(st, 3, "bound");
      std::uint64_t bound = parse_uint(st, num);
      if (bounds.count(id.text)) throw SemanticError(id.text, "bundle instantiated twice");
      bounds[id.text] = bound;
    } else if (head != "mode" && head != "path" && head != "xdata") {
      throw SyntaxError(st.line, st.toks[0].col, "unknown directive '" + head + "'");
    }
  }
  for (const VertexId& v : vertices)
    for (const Bundle& b : bundles)
      if (b.id == v) throw SemanticError(v, "id used for both a vertex and a bundle");

  ShapeFile file;
  file.declared_quiver = Quiver(vertices, bundles);
  for (const auto& [id, bound] : bounds) {
    const Bundle* b = file.declared_quiver.find_bundle(id);
    if (!b) throw SemanticError(id, "unknown bundle in instantiate");
    if (b->multiplicity.is_finite())
      throw SemanticError(id, "only omega bundles can be instantiated");
    if (bound < 1) throw SemanticError(id, "instantiation bound must be >= 1");
  }
  file.bounds = bounds;
  file.quiver = instantiate(file.declared_quiver, bounds);

  // Second pass: mode, factors, generator paths, xdata.
  bool have_mode = false;
  XData xdata;
  bool have_xdata = false;
  for (const Statement& st : statements) {
    const std::string& head = st.toks[0].text;
    if (head == "mode") {
      const Tok& kind = tok_at(st, 1, "mode kind");
      if (kind.text == "full") {
        if (st.toks.size() > 2) expected(st, st.toks[2].col, "end of line");
        if (have_mode && file.mode != ShapeMode::Full)
          throw SemanticError(kind.text, "conflicting mode declarations");
        file.mode = ShapeMode::Full;
        have_mode = true;
      } else if (kind.text == "forbid") {
        if (have_mode && file.mode != ShapeMode::Forbid)
          throw SemanticError(kind.text, "conflicting mode declarations");
        file.mode = ShapeMode::Forbid;
        have_mode = true;
        BundleWord factor;
        for (std::size_t i = 2; i < st.toks.size(); ++i) {
          const Tok& t = st.toks[i];
          if (!file.quiver.find_bundle(t.text)) throw SemanticError(t.text, "unknown bundle");
          factor.push_back(t.text);
        }
        if (factor.empty()) expected(st, kind.col + kind.text.size(), "a forbidden factor");
        try {
          bundle_word_endpoints(file.quiver, factor);
        } catch (const Error&) {
          throw SemanticError(bundle_word_str(factor), "forbidden factor is not composable");
        }
        file.forbid_factors.push_back(std::move(factor));
      } else if (kind.text == "generators") {
        if (st.toks.size() > 2) expected(st, st.toks[2].col, "end of line");
        if (have_mode && file.mode != ShapeMode::Generators)
          throw SemanticError(kind.text, "conflicting mode declarations");
        file.mode = ShapeMode::Generators;
        have_mode = true;
      } else {
        throw SyntaxError(st.line, kind.col, "unknown mode '" + kind.text + "'");
      }
    } else if (head == "path") {
      if (!have_mode || file.mode != ShapeMode::Generators)
        throw SemanticError("path", "path lines belong to generators mode");
      std::vector<std::string> toks;
      for (std::size_t i = 1; i < st.toks.size(); ++i) toks.push_back(st.toks[i].text);
      if (toks.empty()) expected(st, st.toks[0].col + 4, "a path");
      file.generator_paths.push_back(parse_path_tokens(file.quiver, toks));
    } else if (head == "xdata") {
      // xdata <vertex> n=<int> m=<int> patterns: <p1>; <p2>; ...
      const Tok& v = tok_at(st, 1, "vertex id");
      if (!file.quiver.has_vertex(v.text)) throw SemanticError(v.text, "unknown vertex");
      XDataEntry entry;
      std::size_t i = 2;
      for (const char* key : {"n", "m"}) {
        const Tok& k = tok_at(st, i, std::string(key) + "=<int>");
        if (k.text != key) expected(st, k.col, std::string("'") + key + "'");
        expect_sym(st, i + 1, "=");
        std::uint64_t value = parse_uint(st, tok_at(st, i + 2, "number"));
        (key[0] == 'n' ? entry.n : entry.m) = value;
        i += 3;
      }
      const Tok& pat = tok_at(st, i, "'patterns'");
      if (pat.text != "patterns") expected(st, pat.col, "'patterns'");
      expect_sym(st, i + 1, ":");
      i += 2;
      BundleWord cur;
      auto flush = [&](const Tok& where) {
        if (cur.empty()) return;
        try {
          bundle_word_endpoints(file.quiver, cur);
        } catch (const Error&) {
          throw SemanticError(bundle_word_str(cur), "pattern is not composable");
        }
        entry.patterns.push_back(cur);
        cur.clear();
        (void)where;
      };
      for (; i < st.toks.size(); ++i) {
        const Tok& t = st.toks[i];
        if (t.text == ";") {
          flush(t);
          continue;
        }
        if (!file.quiver.find_bundle(t.text)) throw SemanticError(t.text, "unknown bundle");
        cur.push_back(t.text);
      }
      flush(st.toks.back());
      if (xdata.count(v.text)) throw SemanticError(v.text, "duplicate xdata for vertex");
      xdata[v.text] = std::move(entry);
      have_xdata = true;
    }
  }
  if (!have_mode) throw SemanticError("mode", "no mode declaration in file");
  if (have_xdata) file.xdata = std::move(xdata);
  return file;
}

ShapeFile load_shape_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) fail(Errc::BadArgument, "cannot open " + filename);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_shape_file(buf.str());
}

MonomialShape ShapeFile::build_shape() const {
  switch (mode) {
    case ShapeMode::Full: return MonomialShape::full(quiver);
    case ShapeMode::Forbid: return MonomialShape::forbid(quiver, forbid_factors);
    case ShapeMode::Generators: return MonomialShape::generators(quiver, generator_paths);
  }
  fail(Errc::BadArgument, "unreachable");
}

Arrow parse_arrow_token(const Quiver& q, const std::string& token) {
  std::string bundle = token;
  std::uint64_t index = 0;
  auto dot = token.rfind('.');
  if (dot != std::string::npos) {
    bundle = token.substr(0, dot);
    std::string digits = token.substr(dot + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw SemanticError(token, "malformed arrow index");
    index = std::stoull(digits);
  }
  const Bundle* b = q.find_bundle(bundle);
  if (!b) throw SemanticError(token, "unknown bundle");
  if (b->multiplicity.is_finite() && BigInt(index) >= b->multiplicity.finite())
    throw SemanticError(token, "arrow index out of range");
  return {bundle, index};
}

Path parse_path_tokens(const Quiver& q, const std::vector<std::string>& tokens) {
  if (tokens.empty()) fail(Errc::BadArgument, "empty path");
  if (tokens.size() == 1) {
    const std::string& t = tokens[0];
    if (t.rfind("e_", 0) == 0 && q.has_vertex(t.substr(2))) return Path::trivial(t.substr(2));
    if (!q.find_bundle(t) && q.has_vertex(t)) return Path::trivial(t);
  }
  std::vector<Arrow> arrows;
  for (const std::string& t : tokens) arrows.push_back(parse_arrow_token(q, t));
  try {
    return Path::of(q, arrows);
  } catch (const Error& e) {
    throw SemanticError(tokens.front(), std::string("path is not composable: ") + e.what());
  }
}

}  // namespace copath
