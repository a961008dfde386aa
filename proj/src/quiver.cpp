#include "copath/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace copath {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotComposable: return "NotComposable";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownBundle: return "UnknownBundle";
    case Errc::InvalidQuiver: return "InvalidQuiver";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::UninstantiatedOmega: return "UninstantiatedOmega";
    case Errc::InfinitePathSet: return "InfinitePathSet";
    case Errc::NotInShape: return "NotInShape";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::BeyondTruncation: return "BeyondTruncation";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotAComodule: return "NotAComodule";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::MalformedXData: return "MalformedXData";
    case Errc::RepMismatch: return "RepMismatch";
    case Errc::BadArgument: return "BadArgument";
    case Errc::Parse: return "ParseError";
    case Errc::Semantic: return "SemanticError";
  }
  return "Error";
}

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Bundle> bundles)
    : vertices_(std::move(vertices)), bundles_(std::move(bundles)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(Errc::InvalidQuiver, "duplicate vertex id");
  std::sort(bundles_.begin(), bundles_.end(),
            [](const Bundle& a, const Bundle& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    const Bundle& b = bundles_[i];
    if (i > 0 && bundles_[i - 1].id == b.id) fail(Errc::InvalidQuiver, "duplicate bundle id " + b.id);
    if (!has_vertex(b.src) || !has_vertex(b.tgt))
      fail(Errc::InvalidQuiver, "bundle " + b.id + " references undeclared vertex");
    if (b.multiplicity.is_finite() && b.multiplicity.finite() < 1)
      fail(Errc::InvalidQuiver, "bundle " + b.id + " has multiplicity < 1");
    by_id_[b.id] = i;
  }
}

bool Quiver::has_vertex(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void Quiver::require_vertex(const VertexId& v) const {
  if (!has_vertex(v)) fail(Errc::UnknownVertex, v);
}

const Bundle* Quiver::find_bundle(const BundleId& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &bundles_[it->second];
}

const Bundle& Quiver::bundle(const BundleId& id) const {
  const Bundle* b = find_bundle(id);
  if (!b) fail(Errc::UnknownBundle, id);
  return *b;
}

std::vector<const Bundle*> Quiver::bundles_from(const VertexId& v) const {
  std::vector<const Bundle*> out;
  for (const Bundle& b : bundles_)
    if (b.src == v) out.push_back(&b);
  return out;
}

bool Quiver::all_finite() const {
  for (const Bundle& b : bundles_)
    if (b.multiplicity.is_omega()) return false;
  return true;
}

Quiver instantiate(const Quiver& q, const std::map<BundleId, std::uint64_t>& bounds) {
  std::vector<Bundle> bundles = q.bundles();
  for (const auto& [id, bound] : bounds) {
    if (bound < 1) fail(Errc::BadArgument, "instantiation bound for " + id + " must be >= 1");
    bool found = false;
    for (Bundle& b : bundles) {
      if (b.id != id) continue;
      if (b.multiplicity.is_finite())
        fail(Errc::BadArgument, "bundle " + id + " is already finite");
      b.multiplicity = ExtNat(bound);
      found = true;
    }
    if (!found) fail(Errc::UnknownBundle, id);
  }
  return Quiver(q.vertices(), std::move(bundles));
}

Path Path::trivial(VertexId v) { return Path({std::move(v)}, {}); }

Path Path::of(const Quiver& q, const std::vector<Arrow>& arrows) {
  if (arrows.empty()) fail(Errc::BadArgument, "Path::of needs at least one arrow; use trivial()");
  std::vector<VertexId> verts;
  verts.reserve(arrows.size() + 1);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Bundle& b = q.bundle(arrows[i].bundle);
    if (b.multiplicity.is_finite() && BigInt(arrows[i].index) >= b.multiplicity.finite())
      fail(Errc::BadArgument,
           "arrow index " + std::to_string(arrows[i].index) + " out of range for bundle " + b.id);
    if (i == 0)
      verts.push_back(b.src);
    else if (verts.back() != b.src)
      fail(Errc::NotComposable, "arrow " + b.id + " does not start where the previous one ends");
    verts.push_back(b.tgt);
  }
  return Path(std::move(verts), arrows);
}

Path Path::extended(const Arrow& a, const VertexId& next_vertex) const {
  std::vector<VertexId> verts = verts_;
  std::vector<Arrow> arrows = arrows_;
  verts.push_back(next_vertex);
  arrows.push_back(a);
  return Path(std::move(verts), std::move(arrows));
}

Path Path::segment(std::size_t i, std::size_t j) const {
  if (i > j || j > length()) fail(Errc::BadArgument, "segment out of range");
  return Path(std::vector<VertexId>(verts_.begin() + i, verts_.begin() + j + 1),
              std::vector<Arrow>(arrows_.begin() + i, arrows_.begin() + j));
}

std::string Path::str() const {
  if (is_trivial()) return "e_" + source();
  std::ostringstream os;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i > 0) os << ' ';
    os << arrows_[i].bundle << '.' << arrows_[i].index;
  }
  return os.str();
}

Path compose(const Path& p, const Path& q) {
  if (p.target() != q.source())
    fail(Errc::NotComposable, "target(" + p.str() + ") != source(" + q.str() + ")");
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  Path r = p;
  for (std::size_t i = 0; i < q.length(); ++i)
    r = r.extended(q.arrows()[i], q.vertex_chain()[i + 1]);
  return r;
}

std::vector<std::pair<Path, Path>> factorizations(const Path& p) {
  std::vector<std::pair<Path, Path>> out;
  out.reserve(p.length() + 1);
  for (std::size_t k = 0; k <= p.length(); ++k)
    out.emplace_back(p.segment(0, k), p.segment(k, p.length()));
  return out;
}

std::set<Path> subpaths(const Path& p) {
  std::set<Path> out;
  for (std::size_t i = 0; i <= p.length(); ++i)
    for (std::size_t j = i; j <= p.length(); ++j) out.insert(p.segment(i, j));
  return out;
}

std::pair<VertexId, VertexId> bundle_word_endpoints(const Quiver& q, const BundleWord& word) {
  if (word.empty()) fail(Errc::BadArgument, "empty bundle word");
  VertexId src, cur;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Bundle& b = q.bundle(word[i]);
    if (i == 0)
      src = b.src;
    else if (cur != b.src)
      fail(Errc::NotComposable, "bundle word not composable at " + b.id);
    cur = b.tgt;
  }
  return {src, cur};
}

std::string bundle_word_str(const BundleWord& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += word[i];
  }
  return s;
}

}  // namespace copath
