#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <coxlab/suites.hpp>
#include <coxlab/walls.hpp>

using namespace coxlab;

namespace {

  std::set<Word> elements(std::vector<Reflection> const& R) {
    std::set<Word> out;
    for (auto const& r : R) out.insert(r.element);
    return out;
  }

  // Exhaustive minimum over pairs of chambers on the two walls.
  size_t pairwise_min(GraphProduct const& gp, Reflection const& t,
                      Reflection const& u, size_t radius) {
    std::vector<Word> ct, cu;
    for (auto const& w : gp.ball(radius)) {
      if (on_wall(gp, t.element, w)) ct.push_back(w);
      if (on_wall(gp, u.element, w)) cu.push_back(w);
    }
    size_t best = SIZE_MAX;
    for (auto const& x : ct) {
      for (auto const& y : cu) {
        best = std::min(best, gp.multiply(gp.inverse(x), y).size());
      }
    }
    return best;
  }

}  // namespace

TEST_CASE("sides and panels") {
  auto gp = GraphProduct::racg(universal_system(3));
  CHECK(side_of(gp, {0}, {}) == 1);
  CHECK(side_of(gp, {0}, {0}) == -1);
  CHECK(on_wall(gp, {0}, {}));
  CHECK(on_wall(gp, {0}, {0}));
  CHECK_FALSE(on_wall(gp, {0}, {1}));
}

TEST_CASE("reflections flip sides on B_5") {
  for (auto const& sys : {universal_system(3), cycle_racg(5)}) {
    auto gp = GraphProduct::racg(sys);
    auto b2 = gp.ball(2);
    for (auto const& w : gp.ball(5)) {
      for (auto const& v : b2) {
        for (size_t s = 0; s < sys.rank(); ++s) {
          Word t = gp.conjugate({static_cast<int>(s)}, v);
          CHECK(side_of(gp, t, w) != side_of(gp, t, gp.multiply(t, w)));
        }
      }
    }
  }
}

TEST_CASE("wall distance examples") {
  auto gp = GraphProduct::racg(universal_system(2));
  auto a  = make_reflection(gp, {0});
  auto bab = make_reflection(gp, {1, 0, 1});
  CHECK(wall_distance(gp, a, bab) == 1);
  CHECK(wall_distance(gp, a, a) == 0);
  CHECK(wall_distance_bfs(gp, a, bab, 4) == std::optional<size_t>(1));
  auto edge = GraphProduct::racg(parse_system("generators a b\nm a b 2\n"));
  CHECK(wall_distance(edge, make_reflection(edge, {0}),
                      make_reflection(edge, {1}))
        == 0);
  CHECK_THROWS_AS(make_reflection(gp, {0, 1}), InvalidInput);
}

TEST_CASE("wall distance: separating walls, BFS and pairwise minimum agree") {
  for (auto const& sys : {universal_system(3), cycle_racg(5), path_racg(4)}) {
    auto                    gp = GraphProduct::racg(sys);
    std::vector<Reflection> R;
    std::set<Word>          seen;
    for (auto const& v : gp.ball(2)) {
      for (size_t s = 0; s < sys.rank(); ++s) {
        Word t = gp.conjugate({static_cast<int>(s)}, v);
        if (seen.insert(t).second) R.push_back(make_reflection(gp, t));
      }
    }
    for (auto const& t : R) {
      for (auto const& u : R) {
        size_t d = wall_distance(gp, t, u);
        CHECK(d == wall_distance(gp, u, t));
        if (gp.commute(t.element, u.element)) {
          CHECK(d == 0);
          continue;
        }
        size_t R0 = t.gate.size() + u.gate.size() + 1;
        CHECK(wall_distance_bfs(gp, t, u, R0) == std::optional<size_t>(d));
        CHECK(pairwise_min(gp, t, u, R0 + 1) == d);
      }
    }
  }
}

TEST_CASE("geometric sets") {
  auto gp = GraphProduct::racg(universal_system(2));
  auto T  = make_reflections(gp, {{0}, {1}, {0, 1, 0}});
  auto r  = is_geometric_set(gp, T);
  CHECK_FALSE(r.geometric);
  REQUIRE(r.failing);
  CHECK(*r.failing == std::make_tuple(0, 1, 2));
  CHECK(is_geometric_set(gp, make_reflections(gp, {{0}, {1}})).geometric);

  auto u3 = GraphProduct::racg(universal_system(3));
  CHECK(is_geometric_set(u3, make_reflections(u3, {{0}, {1}, {2}})).geometric);
  // a commuting pair has no triangle
  auto e = GraphProduct::racg(parse_system("generators a b c\nm a b 2\n"));
  CHECK(is_geometric_set(e, make_reflections(e, {{0}, {1}})).geometric);
}

TEST_CASE("canonical generators: desk examples") {
  auto gp = GraphProduct::racg(universal_system(2));
  auto S  = canonical_generators(gp, make_reflections(gp, {{0}, {1}}));
  CHECK(elements(S.R) == std::set<Word>{{0}, {1}});
  CHECK(S.validated);

  auto cg = canonical_generators(gp, make_reflections(gp, {{0}, {1}, {0, 1, 0}}));
  CHECK(elements(cg.R) == std::set<Word>{{0}, {1}});
  CHECK(cg.validated);

  auto two = canonical_generators(gp, make_reflections(gp, {{0}, {1, 0, 1}}));
  CHECK(elements(two.R) == std::set<Word>{{0}, {1, 0, 1}});
  Folder f(gp, two.R);
  CHECK(f.in_domain({}));
  CHECK(f.in_domain({1}));
  CHECK_FALSE(f.in_domain({0}));
  CHECK_FALSE(f.in_domain({1, 0}));
}

TEST_CASE("folding") {
  auto   gp = GraphProduct::racg(universal_system(2));
  Folder a(gp, make_reflections(gp, {{0}}));
  CHECK(a.representative({0, 1}) == Word{1});
  CHECK_FALSE(a.contains({0, 1}));
  CHECK(a.contains({0}));
  Folder ab(gp, make_reflections(gp, {{0}, {1, 0, 1}}));
  CHECK(ab.contains({1, 0, 1}));
  CHECK(ab.representative({1}) == Word{1});
  for (auto const& w : gp.ball(6)) {
    Word r = ab.representative(w);
    CHECK(ab.representative(r) == r);
    // index 2: the representative is e or b
    CHECK((r == Word{} || r == Word{1}));
  }
}

TEST_CASE("canonical generators on random sets") {
  std::mt19937_64 rng(5);
  for (auto const& sys : {universal_system(3), cycle_racg(5), path_racg(4)}) {
    auto gp = GraphProduct::racg(sys);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Word> xs;
      for (size_t i = suites::uniform(rng, 1, 4); i > 0; --i) {
        Word u = gp.normalize(
            suites::random_word(rng, sys.rank(), suites::uniform(rng, 0, 3)));
        xs.push_back(gp.conjugate(
            {static_cast<int>(suites::uniform(rng, 0, sys.rank() - 1))}, u));
      }
      auto T  = make_reflections(gp, xs);
      auto cg = canonical_generators(gp, T);
      CHECK(cg.validated);
      CHECK(cg.R.size() <= T.size());
      CHECK(is_geometric_set(gp, cg.R).geometric);
      Folder f(gp, cg.R);
      for (auto const& t : T) CHECK(f.contains(t.element));
      for (size_t i = 0; i < cg.R.size(); ++i) {
        CHECK(evaluate_expression(gp, T, cg.expr[i]) == cg.R[i].element);
      }
    }
  }
}

TEST_CASE("fundamental domains are convex on B_5") {
  std::mt19937_64 rng(9);
  auto            gp   = GraphProduct::racg(universal_system(3));
  auto            ball = gp.ball(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Word> xs;
    for (size_t i = 0; i < 3; ++i) {
      Word u = gp.normalize(suites::random_word(rng, 3, suites::uniform(rng, 0, 2)));
      xs.push_back(gp.conjugate({static_cast<int>(i)}, u));
    }
    auto              cg = canonical_generators(gp, make_reflections(gp, xs));
    Folder            f(gp, cg.R);
    std::vector<Word> D;
    for (auto const& w : ball) {
      if (f.in_domain(w)) D.push_back(w);
    }
    // geodesics in a tree-like group: every prefix path of x^-1 y
    for (auto const& x : D) {
      for (auto const& y : D) {
        Word path = gp.multiply(gp.inverse(x), y);
        Word cur  = x;
        for (int s : path) {
          cur = gp.multiply(cur, {s});
          CHECK(f.in_domain(cur));
        }
      }
    }
  }
}

TEST_CASE("canonical generators at another chamber are conjugate in U") {
  auto gp = GraphProduct::racg(universal_system(3));
  auto T  = make_reflections(gp, {{0}, {1, 2, 1}, {2, 0, 2}});
  auto R  = canonical_generators(gp, T);
  for (auto const& c : gp.ball(2)) {
    auto Rc = canonical_generators(gp, T, c);
    CHECK(Rc.validated);
    CHECK(suites::conjugating_element(gp, R.R, elements(Rc.R), gp.ball(6)));
  }
}
