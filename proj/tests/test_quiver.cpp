#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copath/quiver.hpp"
#include "helpers.hpp"

using namespace copath;

namespace {

Quiver two_step() {
  return Quiver({"a", "b", "c"}, {{"x", "a", "b", ExtNat(std::uint64_t(1))},
                                  {"y", "b", "c", ExtNat(std::uint64_t(1))}});
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Quiver({"a"}, {{"x", "a", "zzz", ExtNat(std::uint64_t(1))}}), Error);
  CHECK_THROWS_AS(Quiver({"a"}, {{"x", "a", "a", ExtNat(std::uint64_t(0))}}), Error);
  CHECK_THROWS_AS(Quiver({"a"}, {{"x", "a", "a", ExtNat(std::uint64_t(1))},
                                 {"x", "a", "a", ExtNat(std::uint64_t(1))}}),
                  Error);
  Quiver q = two_step();
  CHECK(q.vertices() == std::vector<VertexId>{"a", "b", "c"});
  CHECK(q.bundle("x").tgt == "b");
  CHECK_THROWS_AS(q.bundle("nope"), Error);
}

TEST_CASE("instantiate replaces omega bounds only") {
  Quiver thick({"a", "b"}, {{"x", "a", "b", ExtNat::omega()}});
  Quiver t3 = instantiate(thick, {{"x", 3}});
  CHECK(t3.bundle("x").multiplicity == ExtNat(std::uint64_t(3)));
  CHECK_THROWS_AS(instantiate(t3, {{"x", 2}}), Error);
  CHECK_THROWS_AS(instantiate(thick, {{"y", 2}}), Error);
  CHECK_THROWS_AS(instantiate(thick, {{"x", 0}}), Error);
}

TEST_CASE("compose basics") {
  Quiver q = two_step();
  Path ea = Path::trivial("a");
  CHECK(compose(ea, ea) == ea);
  Path x = Path::of(q, {{"x", 0}});
  Path y = Path::of(q, {{"y", 0}});
  Path xy = compose(x, y);
  CHECK(xy.length() == 2);
  CHECK(xy.source() == "a");
  CHECK(xy.target() == "c");
  CHECK_THROWS_AS(compose(y, x), Error);
  CHECK(compose(ea, x) == x);
  CHECK(compose(x, Path::trivial("b")) == x);
}

TEST_CASE("factorizations are ordered and recompose") {
  Quiver q = two_step();
  Path ev = Path::trivial("b");
  auto f0 = factorizations(ev);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].first == ev);
  CHECK(f0[0].second == ev);

  Path x = Path::of(q, {{"x", 0}});
  auto f1 = factorizations(x);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == Path::trivial("a"));
  CHECK(f1[0].second == x);
  CHECK(f1[1].first == x);
  CHECK(f1[1].second == Path::trivial("b"));

  Path xy = compose(x, Path::of(q, {{"y", 0}}));
  auto f2 = factorizations(xy);
  REQUIRE(f2.size() == 3);
  for (std::size_t k = 0; k < f2.size(); ++k) {
    CHECK(f2[k].first.length() == k);
    CHECK(compose(f2[k].first, f2[k].second) == xy);
  }
}

TEST_CASE("subpaths") {
  Quiver q = two_step();
  CHECK(subpaths(Path::trivial("a")) == std::set<Path>{Path::trivial("a")});

  Path x = Path::of(q, {{"x", 0}});
  Path y = Path::of(q, {{"y", 0}});
  Path xy = compose(x, y);
  std::set<Path> expected{Path::trivial("a"), Path::trivial("b"), Path::trivial("c"), x, y, xy};
  CHECK(subpaths(xy) == expected);

  Quiver loop({"u"}, {{"x", "u", "u", ExtNat(std::uint64_t(1))}});
  Path xx = Path::of(loop, {{"x", 0}, {"x", 0}});
  std::set<Path> loop_expected{Path::trivial("u"), Path::of(loop, {{"x", 0}}), xx};
  CHECK(subpaths(xx) == loop_expected);
}

TEST_CASE("path algebra laws on random paths") {
  testing::Rng rng(20240801);
  for (int iter = 0; iter < 200; ++iter) {
    Quiver q = testing::random_quiver(rng);
    Path p = testing::random_path(rng, q, 4);
    Path r = testing::random_path(rng, q, 4);

    CHECK(compose(Path::trivial(p.source()), p) == p);
    CHECK(compose(p, Path::trivial(p.target())) == p);

    if (p.target() == r.source()) {
      Path pr = compose(p, r);
      CHECK(pr.length() == p.length() + r.length());
      auto facs = factorizations(pr);
      CHECK(facs.size() == pr.length() + 1);
      for (auto& [u, w] : facs) CHECK(compose(u, w) == pr);
      auto sub = subpaths(pr);
      for (const Path& s : subpaths(p)) CHECK(sub.count(s) == 1);
      for (const Path& s : subpaths(r)) CHECK(sub.count(s) == 1);
      Path t = testing::random_path(rng, q, 3);
      if (r.target() == t.source())  // associativity
        CHECK(compose(compose(p, r), t) == compose(p, compose(r, t)));
    }
  }
}

TEST_CASE("bundle words") {
  Quiver q = two_step();
  auto [s, t] = bundle_word_endpoints(q, {"x", "y"});
  CHECK(s == "a");
  CHECK(t == "c");
  CHECK_THROWS_AS(bundle_word_endpoints(q, {"y", "x"}), Error);
  CHECK_THROWS_AS(bundle_word_endpoints(q, {}), Error);
  CHECK_THROWS_AS(bundle_word_endpoints(q, {"nope"}), Error);
}
