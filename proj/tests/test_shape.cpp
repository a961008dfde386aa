#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copath/shape.hpp"
#include "helpers.hpp"

using namespace copath;

namespace {

Quiver two_step() {
  return Quiver({"a", "b", "c"}, {{"x", "a", "b", ExtNat(std::uint64_t(1))},
                                  {"y", "b", "c", ExtNat(std::uint64_t(1))}});
}

Quiver loop() { return Quiver({"u"}, {{"x", "u", "u", ExtNat(std::uint64_t(1))}}); }

Quiver thick() { return Quiver({"a", "b"}, {{"x", "a", "b", ExtNat::omega()}}); }

}  // namespace

TEST_CASE("closure") {
  Quiver q = two_step();
  CHECK(closure(q, {}) ==
        std::set<Path>{Path::trivial("a"), Path::trivial("b"), Path::trivial("c")});

  Path xy = Path::of(q, {{"x", 0}, {"y", 0}});
  auto cl = closure(q, {xy});
  CHECK(cl.size() == 6);
  CHECK(cl.count(Path::of(q, {{"y", 0}})) == 1);

  Quiver lp = loop();
  auto cl2 = closure(lp, {Path::of(lp, {{"x", 0}, {"x", 0}})});
  CHECK(cl2.size() == 3);

  // idempotence
  std::vector<Path> as_vec(cl.begin(), cl.end());
  CHECK(closure(q, as_vec) == cl);
}

TEST_CASE("contains per mode") {
  Quiver lp = loop();
  Path x = Path::of(lp, {{"x", 0}});
  Path xx = Path::of(lp, {{"x", 0}, {"x", 0}});

  auto full = MonomialShape::full(lp);
  CHECK(full.contains(x));
  CHECK(full.contains(xx));

  auto fb = MonomialShape::forbid(lp, {{"x", "x"}});
  CHECK(fb.contains(Path::trivial("u")));
  CHECK(fb.contains(x));
  CHECK(!fb.contains(xx));

  Quiver q = two_step();
  Path xy = Path::of(q, {{"x", 0}, {"y", 0}});
  auto gen = MonomialShape::generators(q, {xy});
  CHECK(gen.contains(Path::of(q, {{"y", 0}})));
  CHECK(gen.contains(xy));
  // a path that is valid in the quiver but not a subpath of xy
  Quiver q2({"a", "b"}, {{"x", "a", "b", ExtNat(std::uint64_t(2))}});
  auto gen2 = MonomialShape::generators(q2, {Path::of(q2, {{"x", 0}})});
  CHECK(gen2.contains(Path::of(q2, {{"x", 0}})));
  CHECK(!gen2.contains(Path::of(q2, {{"x", 1}})));
}

TEST_CASE("shape construction validates") {
  Quiver q = two_step();
  CHECK_THROWS_AS(MonomialShape::forbid(q, {{"y", "x"}}), Error);  // not composable
  CHECK_THROWS_AS(MonomialShape::forbid(q, {BundleWord{}}), Error);
  CHECK_THROWS_AS(MonomialShape::forbid(q, {{"zzz"}}), Error);
}

TEST_CASE("automaton shapes") {
  // Full mode: isomorphic to the quiver
  auto full = MonomialShape::full(two_step());
  CHECK(full.automaton().states().size() == 3);
  CHECK(full.automaton().edges().size() == 2);

  // loop with xx forbidden: two live states; x is dead from the second
  auto fb = MonomialShape::forbid(loop(), {{"x", "x"}});
  const auto& aut = fb.automaton();
  CHECK(aut.states().size() == 2);
  int s0 = aut.initial("u");
  auto s1 = aut.step(s0, {"x", 0});
  REQUIRE(s1.has_value());
  CHECK(!aut.step(*s1, {"x", 0}).has_value());

  // thick quiver, Full: two states, one omega edge
  auto th = MonomialShape::full(thick());
  CHECK(th.automaton().states().size() == 2);
  REQUIRE(th.automaton().edges().size() == 1);
  CHECK(th.automaton().edges()[0].weight.is_omega());
  // any index of an omega bundle steps
  CHECK(th.automaton().step(th.automaton().initial("a"), {"x", 12345}).has_value());
}

TEST_CASE("minimal forbidden words drop redundant factors") {
  Quiver lp = loop();
  auto fb = MonomialShape::forbid(lp, {{"x", "x"}, {"x", "x", "x"}});
  CHECK(fb.declared_forbidden().size() == 2);
  CHECK(fb.minimal_forbidden_words() == std::vector<BundleWord>{{"x", "x"}});
}

TEST_CASE("minimal forbidden patterns in generators mode") {
  Quiver q2({"a", "b"}, {{"x", "a", "b", ExtNat(std::uint64_t(2))}});
  auto gen = MonomialShape::generators(q2, {Path::of(q2, {{"x", 0}})});
  auto pats = minimal_forbidden_patterns(gen);
  // x.1 is the only minimal forbidden factor
  REQUIRE(pats.size() == 1);
  REQUIRE(pats[0].size() == 1);
  CHECK(pats[0][0].bundle == "x");
  CHECK(pats[0][0].index == std::uint64_t(1));
}

TEST_CASE("automaton agrees with contains on random shapes") {
  testing::Rng rng(987654);
  int tested = 0;
  while (tested < 60) {
    MonomialShape shape = testing::random_shape(rng, {{4, 4, 2, false, false}});
    const Quiver& q = shape.quiver();
    // all concrete quiver paths of length <= 6 from every vertex
    std::vector<Path> all;
    bool too_big = false;
    for (const VertexId& v : q.vertices()) {
      std::vector<Path> frontier{Path::trivial(v)};
      while (!frontier.empty()) {
        Path p = frontier.back();
        frontier.pop_back();
        all.push_back(p);
        if (all.size() > 30000) {
          too_big = true;
          break;
        }
        if (p.length() >= 6) continue;
        for (const Bundle* b : q.bundles_from(p.target())) {
          std::uint64_t mult = b->multiplicity.finite().convert_to<std::uint64_t>();
          for (std::uint64_t i = 0; i < mult; ++i) frontier.push_back(p.extended({b->id, i}, b->tgt));
        }
      }
      if (too_big) break;
    }
    if (too_big) continue;
    ++tested;
    for (const Path& p : all) CHECK(shape.automaton().accepts(p) == shape.contains(p));
  }
}

TEST_CASE("contains is subpath closed on random shapes") {
  testing::Rng rng(13579);
  for (int iter = 0; iter < 150; ++iter) {
    MonomialShape shape = testing::random_shape(rng, {{4, 4, 2, false, false}});
    Path p = testing::random_path(rng, shape.quiver(), 5);
    if (!shape.contains(p)) continue;
    for (const Path& s : subpaths(p)) CHECK(shape.contains(s));
  }
}
