#include <catch_amalgamated.hpp>

#include <random>

#include <coxlab/endo.hpp>
#include <coxlab/suites.hpp>

using namespace coxlab;

namespace {

  std::string data(std::string const& rel) {
    return std::string(COXLAB_DATA_DIR) + "/" + rel;
  }

}  // namespace

TEST_CASE("parse endomorphism files") {
  auto u3 = universal_system(3);
  auto f  = load_endo(u3, data("endos/swap_conj.endo"));
  CHECK(f.images == std::vector<Word>{{1, 0, 1}, {0, 1, 0}, {2}});
  CHECK_THROWS_AS(parse_endo(u3, "map a = b\nmap a = c\n"), InvalidInput);
  CHECK_THROWS_AS(parse_endo(u3, "map z = b\n"), InvalidInput);
  CHECK_THROWS_AS(parse_endo(u3, "send a to b\n"), InvalidInput);
}

TEST_CASE("sim membership examples") {
  auto u3 = universal_system(3);
  CHECK(sim_check(u3, identity_endo(3)).is_sim);
  CHECK(sim_check(u3, load_endo(u3, data("endos/swap_conj.endo"))).is_sim);
  CHECK(sim_check(u3, load_endo(u3, data("endos/alpha3.endo"))).is_sim);

  // a -> b leaves the class of a
  auto bad = parse_endo(u3, "map a = b\n");
  auto r   = sim_check(u3, bad);
  CHECK_FALSE(r.is_sim);
  CHECK_FALSE(r.failures.empty());

  // a commuting pair cannot go to an infinite-order product
  auto e = parse_system("generators a b c\nm a b 2\n");
  CHECK_FALSE(sim_check(e, parse_endo(e, "map b = c b c\n")).is_sim);

  auto tri7 = load_system(data("systems/tri7.cox"));
  auto g    = parse_endo(tri7, "map c = a b a\n");
  auto rg   = sim_check(tri7, g);
  CHECK(rg.is_sim);
  CHECK(rg.decided);
  CHECK_FALSE(sim_check(tri7, parse_endo(tri7, "map c = a b\n")).is_sim);
}

TEST_CASE("classification: automorphisms carry verified inverses") {
  auto u3 = universal_system(3);
  auto gp = GraphProduct::racg(u3);
  auto id = classify_endo(u3, identity_endo(3));
  CHECK(id.kind == EndoKind::automorphism);
  CHECK(id.inverse == identity_endo(3).images);

  auto sc = classify_endo(u3, load_endo(u3, data("endos/swap_conj.endo")));
  CHECK(sc.kind == EndoKind::sim_proper);
  CHECK_FALSE(sc.missing.empty());

  // conjugation by a is inner
  Endo inner;
  for (int s = 0; s < 3; ++s) inner.images.push_back(gp.conjugate({s}, {0}));
  auto ci = classify_endo(u3, inner);
  REQUIRE(ci.kind == EndoKind::automorphism);
  Endo inv;
  inv.images = ci.inverse;
  CHECK(compose(gp, inner, inv).images == identity_endo(3).images);
  CHECK(compose(gp, inv, inner).images == identity_endo(3).images);

  CHECK_THROWS_AS(classify_endo(u3, parse_endo(u3, "map a = b\n")),
                  InvalidInput);
}

TEST_CASE("partial conjugations") {
  auto p3 = load_system(data("systems/p3.cox"));
  auto gp = GraphProduct::racg(p3);
  // star of a is {a, b}; the remaining component is {c}
  auto pc = partial_conjugation(p3, 0, {2});
  CHECK(pc.images == std::vector<Word>{{0}, {1}, {0, 2, 0}});
  CHECK(compose(gp, pc, pc).images == identity_endo(3).images);
  CHECK(sim_check(p3, pc).is_sim);
  CHECK(classify_endo(p3, pc).kind == EndoKind::automorphism);
  CHECK_THROWS_AS(partial_conjugation(p3, 0, {1}), InvalidInput);

  auto u3 = universal_system(3);
  auto pu = partial_conjugation(u3, 0, {1});
  CHECK(pu.images[1] == Word{0, 1, 0});
  CHECK(classify_endo(u3, pu).kind == EndoKind::automorphism);
}

TEST_CASE("alpha_p is proper with determinant p") {
  for (size_t n : {2U, 3U, 4U}) {
    auto sys = universal_system(n);
    auto gp  = GraphProduct::racg(sys);
    for (long p : {3L, 5L, 7L}) {
      auto a = alpha_p(sys, p);
      CHECK(sim_check(sys, a).is_sim);
      CHECK(classify_endo(sys, a).kind == EndoKind::sim_proper);
      CHECK(alpha_p_determinant(sys, p) == p);
      for (long q : {3L, 5L}) {
        auto ab = compose(gp, a, alpha_p(sys, q));
        CHECK(endo_determinant(sys, ab) == p * q);
      }
    }
    CHECK(endo_determinant(sys, identity_endo(n)) == 1);
  }
  CHECK_THROWS_AS(alpha_p_determinant(universal_system(3), 9), InvalidInput);
  CHECK_THROWS_AS(alpha_p_determinant(universal_system(3), 2), InvalidInput);
  CHECK_THROWS_AS(alpha_p(path_racg(3), 3), InvalidInput);
}

TEST_CASE("determinant is multiplicative on random sims") {
  std::mt19937_64 rng(13);
  auto            sys = universal_system(3);
  auto            gp  = GraphProduct::racg(sys);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = suites::random_sim(rng, sys, gp);
    auto b = suites::random_sim(rng, sys, gp);
    CHECK(endo_determinant(sys, compose(gp, a, b))
          == endo_determinant(sys, a) * endo_determinant(sys, b));
  }
}

TEST_CASE("complexity matrices") {
  auto u3 = universal_system(3);
  auto id = complexity_matrix(u3, identity_endo(3));
  CHECK(entry_sum(id.delta) == 0);
  auto a3 = complexity_matrix(u3, load_endo(u3, data("endos/alpha3.endo")));
  CHECK(a3.delta == ComplexityMatrix{{0, 0, 2}, {0, 0, 2}, {2, 2, 0}});
  for (size_t s = 0; s < 3; ++s) CHECK(a3.geometrized[s].letter == int(s));
  CHECK_THROWS_AS(complexity_matrix(load_system(data("systems/tri7.cox")),
                                    identity_endo(3)),
                  InvalidInput);
}

TEST_CASE("composition keeps sims and proper factors raise complexity") {
  std::mt19937_64 rng(21);
  auto            sys = universal_system(3);
  auto            gp  = GraphProduct::racg(sys);
  for (int trial = 0; trial < 30; ++trial) {
    auto a  = suites::random_sim(rng, sys, gp);
    auto b  = suites::random_sim(rng, sys, gp);
    auto ab = compose(gp, a, b);
    REQUIRE(sim_check(sys, ab).is_sim);
    auto da  = complexity_matrix(sys, a).delta;
    auto dab = complexity_matrix(sys, ab).delta;
    CHECK(entrywise_geq(dab, da));
    auto kb  = classify_endo(sys, b).kind;
    auto kab = classify_endo(sys, ab).kind;
    if (kb == EndoKind::sim_proper) {
      CHECK(kab == EndoKind::sim_proper);
      CHECK(dab != da);
    }
  }
}

TEST_CASE("F(Gamma) enumeration") {
  auto d2 = universal_system(2);
  auto f2 = enumerate_F_gamma(d2);
  CHECK(f2.size() == 2);
  CHECK(graph_automorphisms(d2).size() == 2);
  for (auto const& m : f2) CHECK(m.is_permutation());

  auto p3 = path_racg(3);
  auto fp = enumerate_F_gamma(p3);
  CHECK(fp.size() > graph_automorphisms(p3).size());
  auto gp = GraphProduct::racg(p3);
  for (auto const& m : fp) {
    // the lift respects the defining relations
    auto f = endo_of_F2_map(p3, m);
    for (size_t s = 0; s < 3; ++s) {
      CHECK(gp.multiply(f.images[s], f.images[s]).empty());
      for (size_t t = 0; t < 3; ++t) {
        if (p3.m(s, t) == 2) CHECK(gp.commute(f.images[s], f.images[t]));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_F_gamma(universal_system(7)), InvalidInput);
}

TEST_CASE("free coordinates on the even subgroup") {
  auto sys = universal_system(3);
  auto gp  = GraphProduct::racg(sys);
  CHECK(to_free_coordinates(sys, {0, 1}) == FreeWord{1});
  CHECK(to_free_coordinates(sys, {1, 0}) == FreeWord{-1});
  CHECK(to_free_coordinates(sys, {1, 2}) == FreeWord{-1, 2});
  CHECK_THROWS_AS(to_free_coordinates(sys, {0}), InvalidInput);
  for (auto const& x : gp.ball(6)) {
    if (x.size() % 2 != 0) continue;
    auto fw = to_free_coordinates(sys, x);
    CHECK(free_reduce(fw) == fw);
    CHECK(from_free_coordinates(sys, fw) == x);
  }
}
