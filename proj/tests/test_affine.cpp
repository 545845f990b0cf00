#include <catch_amalgamated.hpp>

#include <random>

#include <coxlab/affine.hpp>
#include <coxlab/suites.hpp>
#include <coxlab/tits.hpp>

using namespace coxlab;

namespace {

  std::string data(std::string const& rel) {
    return std::string(COXLAB_DATA_DIR) + "/" + rel;
  }

}  // namespace

TEST_CASE("A1~ as Z x| {+1,-1}") {
  auto g  = affine_A1();
  auto ab = g.from_word({0, 1});
  CHECK(g.order(ab) == Order::infinite());
  CHECK(g.order(g.from_word({0})) == Order::finite(2));
  CHECK(g.order(g.identity()) == Order::finite(1));
  // (k, s)(m, s) = (k - m, e)
  int s = g.generators()[0].q;
  for (long long k = -3; k <= 3; ++k) {
    for (long long m = -3; m <= 3; ++m) {
      auto p = g.multiply({{k}, s}, {{m}, s});
      CHECK(p == AffineElement{{k - m}, g.identity_index()});
    }
  }
  CHECK_THROWS_AS(g.from_word({2}), InvalidInput);
  CHECK_THROWS_AS(build_affine("B2~"), InvalidInput);
}

TEST_CASE("group laws on B_5") {
  for (auto const& g : {affine_A1(), affine_A2()}) {
    auto ball = g.ball(5);
    for (auto const& x : ball) {
      CHECK(g.multiply(x, g.inverse(x)) == g.identity());
      CHECK(g.multiply(g.inverse(x), x) == g.identity());
    }
    auto b2 = g.ball(2);
    for (auto const& x : b2) {
      for (auto const& y : b2) {
        for (auto const& z : b2) {
          CHECK(g.multiply(g.multiply(x, y), z)
                == g.multiply(x, g.multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("the model satisfies the Coxeter presentation") {
  for (auto const& g : {affine_A1(), affine_A2()}) {
    auto const& sys = g.system();
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        auto  x = g.from_word({int(i), int(j)});
        Order want = sys.m(i, j) == kInf ? Order::infinite()
                                         : Order::finite(sys.m(i, j));
        CHECK(g.order(x) == want);
      }
    }
    // sphere sizes against the word problem of the presentation
    TitsEngine eng(sys);
    auto       mine = g.spheres(6);
    auto       ref  = eng.ball(6);
    std::vector<size_t> counts(7, 0);
    for (auto const& w : ref) ++counts[w.size()];
    for (size_t r = 0; r <= 6; ++r) CHECK(mine[r].size() == counts[r]);
  }
}

TEST_CASE("sign character") {
  auto g = affine_A2();
  CHECK(g.epsilon(g.identity()) == 1);
  for (auto const& s : g.generators()) CHECK(g.epsilon(s) == -1);
  CHECK(epsilon_of_word({0, 1}).in_kernel);
  CHECK_FALSE(epsilon_of_word({0}).in_kernel);
  for (auto const& g2 : {affine_A1(), affine_A2()}) {
    auto k = kernel_cosets(g2, 6);
    CHECK(k.cosets == 2);
    CHECK(k.normal);
    CHECK(k.consistent);
  }
}

TEST_CASE("reflection length: exact lattice route") {
  auto a1 = affine_A1();
  CHECK(affine_reflection_length(a1, a1.generators()[0]).exact
        == std::optional<size_t>(1));
  AffineElement t{{1}, a1.identity_index()};
  auto          r = affine_reflection_length(a1, t);
  CHECK(r.lower == 2);
  CHECK(r.exact == std::optional<size_t>(2));
  CHECK(affine_reflection_length(a1, a1.identity()).exact
        == std::optional<size_t>(0));

  auto a2 = affine_A2();
  auto gen = involution_generation_check(a2, 6);
  CHECK(gen.covered);
  CHECK(gen.max_length <= 4);
  for (auto const& x : a2.ball(6)) {
    auto l = affine_reflection_length(a2, x);
    REQUIRE(l.exact);
    CHECK(l.lower <= *l.exact);
    CHECK(*l.exact % 2 == (a2.epsilon(x) == 1 ? 0U : 1U));
  }
}

TEST_CASE("reflection length: lattice and search routes agree on B_4") {
  for (auto const& g : {affine_A1(), affine_A2()}) {
    for (auto const& x : g.ball(4)) {
      auto exact  = affine_reflection_length(g, x).exact;
      auto search = affine_reflection_length_search(g, x, 4, 4);
      REQUIRE(exact);
      CHECK(search == exact);
    }
  }
}

TEST_CASE("reflection lattice") {
  CHECK(reflection_lattice_check(affine_A1(), 2, 5));
  CHECK(reflection_lattice_check(affine_A2(), 1, 6));
  CHECK_FALSE(reflection_lattice_check(affine_A1(), 5, 1));
  CHECK(finite_reflections(affine_A1()).size() == 1);
  CHECK(finite_reflections(affine_A2()).size() == 3);
}

TEST_CASE("interpretation in the integers") {
  for (auto const& g : {affine_A1(), affine_A2()}) {
    IntegerInterpretation I(g);
    CHECK(I.parameter_count() == g.finite_order() * g.dim() * g.dim());
    auto ball = g.ball(6);
    for (auto const& x : ball) CHECK(I.decode(I.encode(x)) == x);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
      auto const& x = ball[suites::uniform(rng, 0, ball.size() - 1)];
      auto const& y = ball[suites::uniform(rng, 0, ball.size() - 1)];
      CHECK(I.decode(I.multiply(I.encode(x), I.encode(y))) == g.multiply(x, y));
    }
    CHECK_THROWS_AS(I.decode({0}), InvalidInput);
  }
}

TEST_CASE("custom affine files") {
  auto g = build_affine("custom", data("affine/a1_custom.aff"));
  CHECK(g.dim() == 1);
  CHECK(g.order(g.from_word({0, 1})) == Order::infinite());
  auto ref = affine_A1().spheres(5);
  auto mine = g.spheres(5);
  for (size_t r = 0; r <= 5; ++r) CHECK(mine[r].size() == ref[r].size());
  CHECK_THROWS_AS(load_affine(data("affine/bad_theta.aff")), InvalidInput);
  CHECK_THROWS_AS(load_affine(data("affine/missing.aff")), InvalidInput);
  CHECK_THROWS_AS(parse_affine("dim 1\ntable 0 1\ntable 1 0\ntheta 0 1\n"),
                  InvalidInput);
}
