#include "copath/shape.hpp"

#include <algorithm>
#include <deque>

namespace copath {

const char* shape_mode_name(ShapeMode m) {
  switch (m) {
    case ShapeMode::Full: return "full";
    case ShapeMode::Forbid: return "forbid";
    case ShapeMode::Generators: return "generators";
  }
  return "?";
}

int AllowedAutomaton::initial(const VertexId& v) const {
  auto it = initial_.find(v);
  if (it == initial_.end()) fail(Errc::UnknownVertex, v);
  return it->second;
}

std::optional<int> AllowedAutomaton::step(int state, const Arrow& a) const {
  for (int ei : out_[state]) {
    const Edge& e = edges_[ei];
    if (e.bundle != a.bundle) continue;
    if (e.index) {
      if (*e.index == a.index) return e.to;
      continue;
    }
    if (e.weight.is_finite() && BigInt(a.index) >= e.weight.finite()) return std::nullopt;
    return e.to;
  }
  return std::nullopt;
}

bool AllowedAutomaton::accepts(const Path& p) const {
  auto it = initial_.find(p.source());
  if (it == initial_.end()) return false;
  int s = it->second;
  for (const Arrow& a : p.arrows()) {
    auto next = step(s, a);
    if (!next) return false;
    s = *next;
  }
  return true;
}

std::set<Path> closure(const Quiver& q, const std::vector<Path>& h0) {
  std::set<Path> out;
  for (const VertexId& v : q.vertices()) out.insert(Path::trivial(v));
  for (const Path& p : h0) {
    auto subs = subpaths(p);
    out.insert(subs.begin(), subs.end());
  }
  return out;
}

namespace {

bool word_contains(const BundleWord& word, const BundleWord& factor) {
  if (factor.size() > word.size()) return false;
  for (std::size_t i = 0; i + factor.size() <= word.size(); ++i)
    if (std::equal(factor.begin(), factor.end(), word.begin() + i)) return true;
  return false;
}

// Aho-Corasick trie over bundle ids with failure links; terminal nodes mark
// the end of (a state containing) a forbidden word.
struct AcAutomaton {
  struct Node {
    std::map<BundleId, int> next;
    int fail = 0;
    bool terminal = false;
    std::string word;
  };
  std::vector<Node> nodes;

  explicit AcAutomaton(const std::vector<BundleWord>& words) {
    nodes.emplace_back();
    for (const BundleWord& w : words) {
      int cur = 0;
      for (const BundleId& b : w) {
        auto it = nodes[cur].next.find(b);
        if (it == nodes[cur].next.end()) {
          nodes.emplace_back();
          nodes.back().word = nodes[cur].word.empty() ? b : nodes[cur].word + " " + b;
          it = nodes[cur].next.emplace(b, int(nodes.size()) - 1).first;
        }
        cur = it->second;
      }
      nodes[cur].terminal = true;
    }
    std::deque<int> queue;
    for (auto& [b, child] : nodes[0].next) {
      nodes[child].fail = 0;
      queue.push_back(child);
    }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      nodes[s].terminal = nodes[s].terminal || nodes[nodes[s].fail].terminal;
      for (auto& [b, child] : nodes[s].next) {
        nodes[child].fail = step(nodes[s].fail, b);
        queue.push_back(child);
      }
    }
  }

  int step(int s, const BundleId& b) const {
    while (true) {
      auto it = nodes[s].next.find(b);
      if (it != nodes[s].next.end()) return it->second;
      if (s == 0) return 0;
      s = nodes[s].fail;
    }
  }
};

}  // namespace

MonomialShape MonomialShape::full(Quiver q) {
  MonomialShape s;
  s.quiver_ = std::move(q);
  s.mode_ = ShapeMode::Full;
  s.build_word_automaton();
  return s;
}

MonomialShape MonomialShape::forbid(Quiver q, std::vector<BundleWord> factors) {
  MonomialShape s;
  s.quiver_ = std::move(q);
  s.mode_ = ShapeMode::Forbid;
  for (const BundleWord& f : factors) {
    if (f.empty()) fail(Errc::InvalidShape, "forbidden factor must have length >= 1");
    bundle_word_endpoints(s.quiver_, f);  // checks composability and known bundles
  }
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  s.declared_forbidden_ = factors;
  for (const BundleWord& f : factors) {
    bool redundant = false;
    for (const BundleWord& g : factors)
      if (g != f && word_contains(f, g)) {
        redundant = true;
        break;
      }
    if (!redundant) s.minimal_forbidden_.push_back(f);
  }
  s.build_word_automaton();
  return s;
}

MonomialShape MonomialShape::generators(Quiver q, std::vector<Path> h0) {
  MonomialShape s;
  s.quiver_ = std::move(q);
  s.mode_ = ShapeMode::Generators;
  for (const Path& p : h0)
    if (!s.valid_in_quiver(p)) fail(Errc::InvalidShape, "generator path invalid: " + p.str());
  std::sort(h0.begin(), h0.end());
  h0.erase(std::unique(h0.begin(), h0.end()), h0.end());
  s.generators_ = std::move(h0);
  s.closure_ = closure(s.quiver_, s.generators_);
  s.build_generator_automaton();
  return s;
}

bool MonomialShape::valid_in_quiver(const Path& p) const {
  const auto& chain = p.vertex_chain();
  if (!quiver_.has_vertex(chain.front())) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const Arrow& a = p.arrows()[i];
    const Bundle* b = quiver_.find_bundle(a.bundle);
    if (!b || b->src != chain[i] || b->tgt != chain[i + 1]) return false;
    if (b->multiplicity.is_finite() && BigInt(a.index) >= b->multiplicity.finite()) return false;
  }
  return true;
}

bool MonomialShape::contains(const Path& p) const {
  if (!valid_in_quiver(p)) return false;
  switch (mode_) {
    case ShapeMode::Full: return true;
    case ShapeMode::Forbid: {
      BundleWord word;
      word.reserve(p.length());
      for (const Arrow& a : p.arrows()) word.push_back(a.bundle);
      for (const BundleWord& f : minimal_forbidden_)
        if (word_contains(word, f)) return false;
      return true;
    }
    case ShapeMode::Generators: return closure_.count(p) > 0;
  }
  return false;
}

ExtNat MonomialShape::allowed_arrow_count(const Bundle& b) const {
  switch (mode_) {
    case ShapeMode::Full: return b.multiplicity;
    case ShapeMode::Forbid:
      for (const BundleWord& f : minimal_forbidden_)
        if (f.size() == 1 && f[0] == b.id) return ExtNat(std::uint64_t(0));
      return b.multiplicity;
    case ShapeMode::Generators: {
      std::uint64_t count = 0;
      for (const Path& p : closure_)
        if (p.length() == 1 && p.arrows()[0].bundle == b.id) ++count;
      return ExtNat(count);
    }
  }
  return ExtNat(std::uint64_t(0));
}

void MonomialShape::build_word_automaton() {
  AcAutomaton ac(minimal_forbidden_);
  AllowedAutomaton& aut = automaton_;
  std::map<std::pair<VertexId, int>, int> ids;
  std::deque<std::pair<VertexId, int>> queue;
  auto intern = [&](const VertexId& v, int node) {
    auto key = std::make_pair(v, node);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = int(aut.states_.size());
    ids.emplace(key, id);
    std::string label = v;
    if (!ac.nodes[node].word.empty()) label += " | " + ac.nodes[node].word;
    aut.states_.push_back({v, label});
    queue.push_back(key);
    return id;
  };
  for (const VertexId& v : quiver_.vertices()) aut.initial_[v] = intern(v, 0);
  while (!queue.empty()) {
    auto [v, node] = queue.front();
    queue.pop_front();
    int from = ids.at({v, node});
    for (const Bundle* b : quiver_.bundles_from(v)) {
      int next = ac.step(node, b->id);
      if (ac.nodes[next].terminal) continue;  // forbidden sink, removed
      int to = intern(b->tgt, next);
      aut.edges_.push_back({from, to, b->id, std::nullopt, b->multiplicity});
    }
  }
  aut.out_.assign(aut.states_.size(), {});
  for (int i = 0; i < int(aut.edges_.size()); ++i) aut.out_[aut.edges_[i].from].push_back(i);
}

void MonomialShape::build_generator_automaton() {
  AllowedAutomaton& aut = automaton_;
  std::map<Path, int> ids;
  for (const Path& p : closure_) {
    int id = int(aut.states_.size());
    ids.emplace(p, id);
    aut.states_.push_back({p.target(), p.str()});
  }
  for (const VertexId& v : quiver_.vertices()) aut.initial_[v] = ids.at(Path::trivial(v));
  for (const auto& [p, id] : ids) {
    if (p.is_trivial()) continue;
    Path prefix = p.segment(0, p.length() - 1);
    aut.edges_.push_back({ids.at(prefix), id, p.arrows().back().bundle, p.arrows().back().index,
                          ExtNat(std::uint64_t(1))});
  }
  std::sort(aut.edges_.begin(), aut.edges_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.bundle, a.index) < std::tie(b.from, b.bundle, b.index);
  });
  aut.out_.assign(aut.states_.size(), {});
  for (int i = 0; i < int(aut.edges_.size()); ++i) aut.out_[aut.edges_[i].from].push_back(i);
}

bool operator==(const MonomialShape& a, const MonomialShape& b) {
  return a.mode_ == b.mode_ && a.quiver_ == b.quiver_ &&
         a.minimal_forbidden_ == b.minimal_forbidden_ && a.closure_ == b.closure_;
}

std::vector<FactorPattern> minimal_forbidden_patterns(const MonomialShape& shape) {
  std::vector<FactorPattern> out;
  switch (shape.mode()) {
    case ShapeMode::Full: break;
    case ShapeMode::Forbid:
      for (const BundleWord& w : shape.minimal_forbidden_words()) {
        FactorPattern p;
        for (const BundleId& b : w) p.push_back({b, std::nullopt});
        out.push_back(std::move(p));
      }
      break;
    case ShapeMode::Generators: {
      if (!shape.quiver().all_finite())
        fail(Errc::UninstantiatedOmega,
             "minimal forbidden factors of a generators shape need a finite quiver");
      const auto& cl = shape.generator_closure();
      // One-step extensions q.a of closure elements q such that q.a leaves H
      // while the tail (q minus its first arrow).a stays in H; all proper
      // factors of such an extension are then in H.
      for (const Path& q : cl) {
        for (const Bundle* b : shape.quiver().bundles_from(q.target())) {
          std::uint64_t mult = std::uint64_t(b->multiplicity.finite());
          for (std::uint64_t i = 0; i < mult; ++i) {
            Path qa = q.extended({b->id, i}, b->tgt);
            if (cl.count(qa)) continue;
            if (!q.is_trivial()) {
              Path tail = qa.segment(1, qa.length());
              if (!cl.count(tail)) continue;
            }
            FactorPattern p;
            for (const Arrow& a : qa.arrows()) p.push_back({a.bundle, a.index});
            out.push_back(std::move(p));
          }
        }
      }
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

}  // namespace copath
