#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "copath/coalgebra.hpp"
#include "copath/paths_analysis.hpp"
#include "copath/scalar.hpp"
#include "helpers.hpp"

using namespace copath;

namespace {

Quiver two_step() {
  return Quiver({"a", "b", "c"}, {{"x", "a", "b", ExtNat(std::uint64_t(1))},
                                  {"y", "b", "c", ExtNat(std::uint64_t(1))}});
}

Quiver loop() { return Quiver({"u"}, {{"x", "u", "u", ExtNat(std::uint64_t(1))}}); }

// multiset of (q, r, s) from expanding either leg of delta
using TripleCount = std::map<std::tuple<Path, Path, Path>, int>;

TripleCount expand_left(const MonomialShape& sh, const Path& p) {
  TripleCount out;
  for (auto& t : delta<Rat>(sh, p))
    for (auto& t2 : delta<Rat>(sh, t.left)) out[{t2.left, t2.right, t.right}]++;
  return out;
}

TripleCount expand_right(const MonomialShape& sh, const Path& p) {
  TripleCount out;
  for (auto& t : delta<Rat>(sh, p))
    for (auto& t2 : delta<Rat>(sh, t.right)) out[{t.left, t2.left, t2.right}]++;
  return out;
}

}  // namespace

TEST_CASE("delta examples") {
  auto sh = MonomialShape::full(two_step());
  auto d0 = delta<Rat>(sh, Path::trivial("a"));
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].left == Path::trivial("a"));
  CHECK(d0[0].right == Path::trivial("a"));
  CHECK(d0[0].coeff == Rat(1));

  Path x = Path::of(two_step(), {{"x", 0}});
  auto d1 = delta<Rat>(sh, x);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].left == Path::trivial("a"));
  CHECK(d1[0].right == x);
  CHECK(d1[1].left == x);
  CHECK(d1[1].right == Path::trivial("b"));

  Path xy = Path::of(two_step(), {{"x", 0}, {"y", 0}});
  CHECK(delta<Rat>(sh, xy).size() == 3);

  auto fb = MonomialShape::forbid(loop(), {{"x", "x"}});
  CHECK_THROWS_AS(delta<Rat>(fb, Path::of(loop(), {{"x", 0}, {"x", 0}})), Error);
}

TEST_CASE("counit") {
  CHECK(counit<Rat>(Path::trivial("a")) == Rat(1));
  CHECK(counit<Rat>(Path::of(two_step(), {{"x", 0}})) == Rat(0));
  CHECK(counit<Rat>(Path::of(two_step(), {{"x", 0}, {"y", 0}})) == Rat(0));
}

TEST_CASE("coradical layers") {
  auto sh = MonomialShape::full(loop());
  auto l0 = coradical_layer(sh, 0, 0);
  REQUIRE(l0.groups.size() == 1);
  CHECK(l0.total == 1);
  CHECK(l0.groups[0].length == 0);

  auto l2 = coradical_layer(sh, 2, 2);
  CHECK(l2.total == 3);  // e_u, x, xx

  Quiver t3 = instantiate(Quiver({"a", "b"}, {{"x", "a", "b", ExtNat::omega()}}), {{"x", 3}});
  auto lt = coradical_layer(MonomialShape::full(t3), 1, 1);
  CHECK(lt.total == 5);  // e_a, e_b, x0, x1, x2

  CHECK_THROWS_AS(coradical_layer(MonomialShape::full(Quiver({"a", "b"},
                                                             {{"x", "a", "b", ExtNat::omega()}})),
                                  1, 1),
                  Error);
  CHECK_THROWS_AS(coradical_layer(sh, 3, 2), Error);  // n > cap
}

TEST_CASE("coassociativity and counit laws hold for short paths on random shapes") {
  testing::Rng rng(555111);
  int tested = 0;
  while (tested < 25) {
    MonomialShape sh = testing::random_shape(rng, {{4, 4, 2, false, false}});
    std::size_t total = 0;
    bool skip = false;
    std::vector<Path> allowed;
    for (const VertexId& v : sh.quiver().vertices()) {
      auto res = testing::brute_paths_from(sh, v, 6, 20000);
      if (res.overflow) {
        skip = true;
        break;
      }
      total += res.paths.size();
      allowed.insert(allowed.end(), res.paths.begin(), res.paths.end());
    }
    if (skip || total > 20000) continue;
    ++tested;
    for (const Path& p : allowed) {
      CHECK(expand_left(sh, p) == expand_right(sh, p));
      // counit laws: contract either leg
      PathVector<Rat> left_sum, right_sum, expected;
      expected.add(p, Rat(1));
      for (auto& t : delta<Rat>(sh, p)) {
        left_sum.add(t.right, t.coeff * counit<Rat>(t.left));
        right_sum.add(t.left, t.coeff * counit<Rat>(t.right));
      }
      CHECK(left_sum == expected);
      CHECK(right_sum == expected);
      // grading and closure
      for (auto& t : delta<Rat>(sh, p)) {
        CHECK(t.left.length() + t.right.length() == p.length());
        CHECK(sh.contains(t.left));
        CHECK(sh.contains(t.right));
      }
    }
  }
}
