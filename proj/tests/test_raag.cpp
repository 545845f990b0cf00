#include <catch_amalgamated.hpp>

#include <set>

#include <coxlab/raag.hpp>
#include <coxlab/words.hpp>

using namespace coxlab;

namespace {

  std::string data(std::string const& rel) {
    return std::string(COXLAB_DATA_DIR) + "/" + rel;
  }

  size_t edge_count(CoxeterSystem const& sys) {
    size_t e = 0;
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        e += sys.graph_adjacent(i, j) ? 1 : 0;
      }
    }
    return e;
  }

}  // namespace

TEST_CASE("graph files") {
  auto g = load_graph(data("graphs/p3.graph"));
  CHECK(g.vertices == std::vector<std::string>{"u", "v", "w"});
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(parse_graph("vertices u v\nedge u x\n"), InvalidInput);
  CHECK_THROWS_AS(parse_graph("vertices u v\nedge u u\n"), InvalidInput);
  CHECK_THROWS_AS(parse_graph("vertices u u\n"), InvalidInput);
  CHECK_THROWS_AS(parse_graph("edge u v\n"), InvalidInput);
  CHECK_THROWS_AS(load_graph(data("graphs/missing.graph")), InvalidInput);
}

TEST_CASE("doubled graphs") {
  GammaPlus v(load_graph(data("graphs/vertex.graph")));
  CHECK(v.system().rank() == 2);
  CHECK(v.system().m(0, 1) == kInf);

  GammaPlus e(load_graph(data("graphs/edge.graph")));
  auto const& sys = e.system();
  CHECK(sys.rank() == 4);
  CHECK(edge_count(sys) == 4);
  for (size_t i = 0; i < 4; ++i) {
    size_t deg = 0;
    for (size_t j = 0; j < 4; ++j) deg += (i != j && sys.graph_adjacent(i, j)) ? 1 : 0;
    CHECK(deg == 2);
  }
  CHECK_FALSE(sys.graph_adjacent(size_t(e.s(0)), size_t(e.r(0))));

  GammaPlus p(load_graph(data("graphs/p3.graph")));
  CHECK(p.system().rank() == 6);
  CHECK(p.system().name(size_t(p.r(1))) == "r_v");
}

TEST_CASE("the embedding on generators") {
  GammaPlus v(load_graph(data("graphs/vertex.graph")));
  auto      g = v.raag().parse("v");
  CHECK(v.beta(g) == Word{v.r(0), v.s(0)});
  CHECK(v.beta(v.raag().parse("v^-1")) == Word{v.s(0), v.r(0)});
  CHECK(element_order(v.racg(), v.beta(g)) == Order::infinite());

  GammaPlus e(load_graph(data("graphs/edge.graph")));
  CHECK(e.racg().format(e.beta(e.raag().parse("u v^-1"))) == "s_v r_u s_u r_v");
}

TEST_CASE("the embedding is an injective homomorphism into the kernel") {
  for (auto const* f : {"vertex", "edge", "p3"}) {
    GammaPlus   gp(load_graph(data(std::string("graphs/") + f + ".graph")));
    auto const& A = gp.raag();
    auto const& W = gp.racg();
    auto        ball = A.ball(4);
    std::set<Word> images;
    for (auto const& x : ball) {
      Word bx = gp.beta(x);
      CHECK(gp.in_kernel(bx));
      CHECK(W.normalize(bx) == bx);
      images.insert(bx);
      CHECK(gp.beta(A.inverse(x)) == W.inverse(bx));
    }
    CHECK(images.size() == ball.size());
    auto b2 = A.ball(2);
    for (auto const& x : b2) {
      for (auto const& y : b2) {
        CHECK(gp.beta(A.multiply(x, y)) == W.multiply(gp.beta(x), gp.beta(y)));
        // commuting is preserved and reflected
        CHECK(A.commute(x, y) == W.commute(gp.beta(x), gp.beta(y)));
      }
    }
  }
}

TEST_CASE("index of the kernel") {
  for (auto const* f : {"vertex", "edge", "p3"}) {
    GammaPlus gp(load_graph(data(std::string("graphs/") + f + ".graph")));
    size_t    n = gp.size();
    CHECK(gp.coset_count(2 * n) == (size_t(1) << n));
    CHECK(gp.theta({gp.s(0), gp.r(0)}) == std::vector<int>(n, 0));
    CHECK_FALSE(gp.in_kernel({gp.s(0)}));
  }
}
