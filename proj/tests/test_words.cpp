#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include <coxlab/graph_product.hpp>
#include <coxlab/linear.hpp>
#include <coxlab/suites.hpp>
#include <coxlab/words.hpp>

using namespace coxlab;

namespace {

  GraphProduct edge_group() {
    return GraphProduct::racg(parse_system("generators a b\nm a b 2\n"));
  }

  // Words of length <= n up to equality in the Cayley graph: breadth-first
  // search over the matrices of the faithful linear action.
  std::map<IntMatrix, Word> bfs_elements(CoxeterSystem const& sys,
                                         size_t               radius) {
    ReflectionRep             rep(sys);
    std::map<IntMatrix, Word> seen{{identity_matrix(sys.rank()), Word{}}};
    std::vector<std::pair<IntMatrix, Word>> layer{
        {identity_matrix(sys.rank()), Word{}}};
    for (size_t r = 1; r <= radius; ++r) {
      std::vector<std::pair<IntMatrix, Word>> next;
      for (auto const& [m, w] : layer) {
        for (size_t s = 0; s < sys.rank(); ++s) {
          IntMatrix m2 = mat_mul(m, rep.generator(s));
          if (seen.count(m2) == 0) {
            Word w2 = w;
            w2.push_back(static_cast<int>(s));
            seen.emplace(m2, w2);
            next.emplace_back(m2, w2);
          }
        }
      }
      layer = std::move(next);
    }
    return seen;
  }

}  // namespace

TEST_CASE("normalize: commutation and cancellation") {
  auto gp = edge_group();
  CHECK(gp.format(gp.normalize(gp.parse("b a"))) == "ab");
  CHECK(gp.format(gp.normalize(gp.parse("a b a"))) == "b");
  CHECK(gp.normalize(gp.parse("a a")).empty());
  CHECK(gp.format(Word{}) == "e");
  CHECK_THROWS_AS(gp.parse("z"), InvalidInput);
}

TEST_CASE("multiply, inverse, conjugate in the infinite dihedral group") {
  auto gp = GraphProduct::racg(universal_system(2));
  Word a{0}, b{1}, ab{0, 1};
  CHECK(gp.multiply(a, a).empty());
  CHECK(gp.multiply(ab, ab) == Word{0, 1, 0, 1});
  CHECK(gp.conjugate(a, b) == Word{1, 0, 1});
  CHECK(gp.inverse(ab) == Word{1, 0});
}

TEST_CASE("normal forms agree with breadth-first search of the Cayley graph") {
  for (auto const& sys : {universal_system(2), universal_system(3),
                          path_racg(3), cycle_racg(4)}) {
    auto gp  = GraphProduct::racg(sys);
    auto bfs = bfs_elements(sys, 5);
    auto ball = gp.ball(5);
    CHECK(ball.size() == bfs.size());
    ReflectionRep rep(sys);
    std::set<Word> normal;
    for (auto const& [m, w] : bfs) {
      Word nf = gp.normalize(w);
      CHECK(nf.size() == w.size());  // BFS words are geodesics
      normal.insert(nf);
    }
    CHECK(normal == std::set<Word>(ball.begin(), ball.end()));
  }
}

TEST_CASE("normalize is idempotent and respects lengths") {
  auto gp = GraphProduct::racg(cycle_racg(5));
  for (auto const& w : suites::all_words(5, 4)) {
    Word nf = gp.normalize(w);
    CHECK(gp.normalize(nf) == nf);
    CHECK(nf.size() <= w.size());
    CHECK(nf.size() % 2 == w.size() % 2);
    CHECK(gp.inverse(nf).size() == nf.size());
  }
}

TEST_CASE("sphere sizes") {
  auto u3 = GraphProduct::racg(universal_system(3)).spheres(5);
  std::vector<size_t> got;
  for (auto const& s : u3) got.push_back(s.size());
  CHECK(got == std::vector<size_t>{1, 3, 6, 12, 24, 48});

  auto d = GraphProduct::racg(universal_system(2)).spheres(6);
  for (size_t r = 1; r <= 6; ++r) CHECK(d[r].size() == 2);

  // 4-cycle = D_inf x D_inf
  auto c4 = GraphProduct::racg(cycle_racg(4)).spheres(5);
  for (size_t r = 0; r <= 5; ++r) {
    size_t want = 0;
    for (size_t i = 0; i <= r; ++i) {
      want += (i == 0 ? 1 : 2) * (r - i == 0 ? 1 : 2);
    }
    CHECK(c4[r].size() == want);
  }
}

TEST_CASE("element orders") {
  auto gp = GraphProduct::racg(
      parse_system("generators a b c\nm a b 2\n"));  // c commutes with none
  CHECK(element_order(gp, {}) == Order::finite(1));
  CHECK(element_order(gp, {0}) == Order::finite(2));
  CHECK(element_order(gp, gp.parse("c a b c")) == Order::finite(2));
  auto dinf = GraphProduct::racg(universal_system(2));
  CHECK(element_order(dinf, {0, 1}) == Order::infinite());
}

TEST_CASE("orders lie in {1, 2, inf} over B_6") {
  for (auto const& sys : {cycle_racg(5), path_racg(4), universal_system(3)}) {
    auto          gp = GraphProduct::racg(sys);
    ReflectionRep rep(sys);
    for (auto const& x : gp.ball(6)) {
      auto o = element_order(gp, x);
      CHECK(o == suites::matrix_order(rep, x));
      CHECK((o.kind == Order::Kind::infinite || o.value <= 2));
    }
  }
}

TEST_CASE("support and link") {
  auto gp = edge_group();
  CHECK(gp.support(gp.normalize(gp.parse("b a")))
        == gp.support(gp.normalize(gp.parse("a b"))));
  CHECK(gp.link({0}) == std::vector<int>{1});
  // path a - c - b
  auto p = GraphProduct::racg(
      parse_system("generators a b c\nm a c 2\nm c b 2\n"));
  CHECK(p.link(p.parse("a b")) == std::vector<int>{2});
}

TEST_CASE("cyclic roots in the infinite dihedral group") {
  auto gp = GraphProduct::racg(universal_system(2));
  auto r  = cyclic_root(gp, gp.parse("b a b"));
  CHECK(r.h == Word{1});
  CHECK(r.core == Word{0});
  CHECK(r.root == Word{0});
  CHECK(r.n == 1);
  auto r3 = cyclic_root(gp, gp.parse("ababab"));
  CHECK(r3.root == Word{0, 1});
  CHECK(r3.n == 3);
  auto r2 = cyclic_root(gp, gp.parse("abab"));
  CHECK(r2.root == Word{0, 1});
  CHECK(r2.n == 2);
  CHECK_THROWS_AS(cyclic_root(edge_group(), {0}), InvalidInput);
}

TEST_CASE("roots are unique up to conjugacy") {
  auto gp = GraphProduct::racg(universal_system(3));
  for (auto const& x : gp.ball(4)) {
    if (x.empty()) continue;
    auto base = cyclic_root(gp, x);
    for (auto const& g : gp.ball(2)) {
      auto c = cyclic_root(gp, gp.conjugate(x, g));
      CHECK(c.n == base.n);
      CHECK(c.root.size() == base.root.size());
    }
  }
}

TEST_CASE("reflections") {
  auto dinf = GraphProduct::racg(universal_system(2));
  CHECK(is_reflection(dinf, {0}));
  CHECK(is_reflection(dinf, dinf.parse("bab")));
  CHECK_FALSE(is_reflection(edge_group(), {0, 1}));
  auto gp = GraphProduct::racg(cycle_racg(5));
  for (auto const& x : gp.ball(5)) {
    CHECK(is_reflection(gp, x) == is_reflection_bounded(gp, x, x.size()));
  }
}

TEST_CASE("centralizers") {
  auto gp = edge_group();
  auto c  = centralizer_in_ball(gp, centralizer_generators(gp, {0}), 4);
  CHECK(c == WordSet{{}, {0}, {1}, {0, 1}});

  auto dinf = GraphProduct::racg(universal_system(2));
  auto d    = centralizer_generators(dinf, {0, 1});
  CHECK(d.link.empty());
  REQUIRE(d.roots.size() == 1);
  CHECK(d.roots[0] == Word{0, 1});
}

TEST_CASE("centralizers agree with brute force on B_5") {
  for (auto const& sys :
       {universal_system(3), cycle_racg(5), path_racg(4), cycle_racg(4)}) {
    auto gp   = GraphProduct::racg(sys);
    auto ball = gp.ball(5);
    for (auto const& x : ball) {
      auto mine = centralizer_in_ball(gp, centralizer_generators(gp, x), 5);
      CHECK(mine == brute_force_centralizer(gp, x, ball));
    }
  }
}

TEST_CASE("RAAG normal forms carry exponents") {
  auto a = GraphProduct::raag({"u", "v"}, {{0, 1}});
  CHECK(a.format(a.normalize(a.parse("v u^2 u^-1"))) == "u v");
  CHECK(a.format(a.normalize(a.parse("u^3"))) == "u^3");
  CHECK(a.normalize(a.parse("u u^-1")).empty());
  auto f = GraphProduct::raag({"u", "v"}, {});
  CHECK(f.format(f.normalize(f.parse("v u"))) == "v u");
  CHECK(element_order(f, f.parse("u")) == Order::infinite());
}
