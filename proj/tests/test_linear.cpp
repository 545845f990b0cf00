#include <catch_amalgamated.hpp>

#include <random>

#include <coxlab/linear.hpp>
#include <coxlab/suites.hpp>

using namespace coxlab;

TEST_CASE("generators of the reflection representation") {
  ReflectionRep rep(universal_system(2));
  CHECK(rep.matrix({}) == identity_matrix(2));
  // sigma_a(alpha_a) = -alpha_a, sigma_a(alpha_b) = alpha_b + 2 alpha_a
  CHECK(rep.generator(0) == IntMatrix{{-1, 2}, {0, 1}});
  CHECK(rep.generator(1) == IntMatrix{{1, 0}, {2, -1}});
  CHECK(mat_mul(rep.generator(0), rep.generator(0)) == identity_matrix(2));

  ReflectionRep edge(parse_system("generators a b\nm a b 2\n"));
  CHECK(mat_mul(edge.generator(0), edge.generator(1))
        == mat_mul(edge.generator(1), edge.generator(0)));
  CHECK_THROWS_AS(ReflectionRep(parse_system("generators a b\nm a b 3\n")),
                  InvalidInput);
}

TEST_CASE("the representation is a homomorphism with det (-1)^length") {
  for (auto const& sys : {universal_system(3), cycle_racg(5), path_racg(3)}) {
    auto          gp = GraphProduct::racg(sys);
    ReflectionRep rep(sys);
    auto          ball = gp.ball(4);
    for (size_t i = 0; i < ball.size(); i += 3) {
      auto const& u  = ball[i];
      IntMatrix   mu = rep.matrix(u);
      CHECK(determinant(mu) == (u.size() % 2 == 0 ? 1 : -1));
      for (size_t j = 0; j < ball.size(); j += 5) {
        auto const& v = ball[j];
        CHECK(rep.matrix(gp.multiply(u, v)) == mat_mul(mu, rep.matrix(v)));
      }
    }
  }
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{3, 0, 0}, {1, 5, 0}, {4, 2, 7}}) == 105);
  CHECK(matrix_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank(IntMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_rank(identity_matrix(4)) == 4);
}

TEST_CASE("fixed space codimension") {
  ReflectionRep d(universal_system(2));
  CHECK(d.fixed_space_codim({}) == 0);
  CHECK(d.fixed_space_codim({0}) == 1);
  CHECK(d.fixed_space_codim({1, 0, 1}) == 1);
  CHECK(d.fixed_space_codim({0, 1}) == 1);
  ReflectionRep e(parse_system("generators a b\nm a b 2\n"));
  CHECK(e.fixed_space_codim({0, 1}) == 2);
}

TEST_CASE("reflection length examples") {
  auto dinf = universal_system(2);
  auto r1   = reflection_length(dinf, {1, 0, 1});
  CHECK(r1.exact);
  CHECK(r1.lower == 1);
  auto r2 = reflection_length(dinf, {0, 1});
  CHECK(r2.exact);
  CHECK(r2.lower == 2);
  auto r0 = reflection_length(dinf, {0, 0});
  CHECK(r0.exact);
  CHECK(r0.upper == std::optional<size_t>(0));

  auto edge = parse_system("generators a b\nm a b 2\n");
  auto re   = reflection_length(edge, {0, 1});
  CHECK(re.exact);
  CHECK(re.lower == 2);

  // abab in D_inf is the product of the two reflections a and babab
  auto r4 = reflection_length(dinf, {0, 1, 0, 1});
  CHECK(r4.exact);
  CHECK(r4.lower == 2);
}

TEST_CASE("reflection length bounds on B_4") {
  for (auto const& sys : {universal_system(3), cycle_racg(5), path_racg(4)}) {
    auto gp = GraphProduct::racg(sys);
    for (auto const& x : gp.ball(4)) {
      auto r = reflection_length(sys, x, 2);
      REQUIRE(r.upper);
      CHECK(r.lower <= *r.upper);
      CHECK(*r.upper <= x.size());
      CHECK(r.lower % 2 == x.size() % 2);
      CHECK(*r.upper % 2 == x.size() % 2);
      CHECK((is_reflection(gp, x) == (r.exact && r.lower == 1)));
    }
  }
}

TEST_CASE("reflection length is a conjugacy invariant") {
  auto sys = universal_system(3);
  auto gp  = GraphProduct::racg(sys);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Word x = gp.normalize(suites::random_word(rng, 3, suites::uniform(rng, 1, 3)));
    Word g = gp.normalize(suites::random_word(rng, 3, suites::uniform(rng, 0, 1)));
    auto a = reflection_length(sys, x, 2);
    auto b = reflection_length(sys, gp.conjugate(x, g), 3);
    if (a.exact && b.exact) CHECK(a.lower == b.lower);
  }
}
