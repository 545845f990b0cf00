#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>

#include <coxlab/system.hpp>

using namespace coxlab;

namespace {

  std::string data(std::string const& rel) {
    return std::string(COXLAB_DATA_DIR) + "/" + rel;
  }

}  // namespace

TEST_CASE("parse: explicit label and default infinity") {
  auto s = parse_system("generators a b\nm a b 2\n");
  CHECK(s.rank() == 2);
  CHECK(s.m(0, 1) == 2);
  auto u = parse_system("generators a b\n");
  CHECK(u.m(0, 1) == kInf);
  CHECK(u.m(0, 0) == 1);
}

TEST_CASE("parse: malformed files are rejected") {
  CHECK_THROWS_AS(parse_system("generators a b\nm a b 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a a\n"), InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a b\nm a c 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a b\nm a a 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a b\nm a b 2\nm b a 3\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_system("m a b 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a b\ngenerators c\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_system("generators a b\nfoo\n"), InvalidInput);
  CHECK_THROWS_AS(load_system(data("systems/missing.cox")), InvalidInput);
}

TEST_CASE("parse and serialize round trip on the sample files") {
  for (auto const* f : {"d_inf", "u3", "u4", "edge", "p3", "c4", "pentagon",
                        "two_component", "tri4", "tri7", "s3"}) {
    auto s  = load_system(data(std::string("systems/") + f + ".cox"));
    auto s2 = parse_system(serialize_system(s));
    CHECK(s2 == s);
    CHECK(serialize_system(s2) == serialize_system(s));
  }
}

// Both views hold for finite m >= 3; m = 2 is graph only, m = inf diagram
// only.
TEST_CASE("graph and diagram views") {
  auto s = parse_system("generators a b c d\nm a b 2\nm b c 3\nm c d 5\n");
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      if (i == j) {
        continue;
      }
      int m = s.m(i, j);
      CHECK(s.graph_adjacent(i, j) == (m != kInf));
      CHECK(s.diagram_adjacent(i, j) == (m == kInf || m >= 3));
    }
  }
}

TEST_CASE("classify: universal, commuting pair, infinite dihedral") {
  auto u3 = classify(universal_system(3));
  REQUIRE(u3.components.size() == 1);
  CHECK(u3.types[0].kind == ComponentKind::other);

  auto edge = classify(parse_system("generators a b\nm a b 2\n"));
  REQUIRE(edge.components.size() == 2);
  for (auto const& t : edge.types) {
    CHECK(t.kind == ComponentKind::spherical);
    CHECK(t.name == "A1");
  }

  auto dinf = classify(universal_system(2));
  REQUIRE(dinf.components.size() == 1);
  CHECK(dinf.types[0].kind == ComponentKind::affine);
}

TEST_CASE("classify: standard names") {
  auto name = [](std::string const& text) {
    auto r = classify(parse_system(text));
    REQUIRE(r.types.size() == 1);
    return std::make_pair(r.types[0].kind, r.types[0].name);
  };
  CHECK(name("generators a b\nm a b 3\n")
        == std::make_pair(ComponentKind::spherical, std::string("A2")));
  CHECK(name("generators a b\nm a b 5\n")
        == std::make_pair(ComponentKind::spherical, std::string("I2(5)")));
  CHECK(name("generators a b c\nm a b 3\nm b c 3\nm a c 2\n")
        == std::make_pair(ComponentKind::spherical, std::string("A3")));
  CHECK(name("generators a b c\nm a b 3\nm b c 3\nm a c 3\n")
        == std::make_pair(ComponentKind::affine, std::string("A2~")));
  CHECK(name("generators a b c\nm a b 4\nm b c 4\nm a c 4\n").first
        == ComponentKind::other);
}

TEST_CASE("classify is invariant under generator permutation") {
  auto s = parse_system(
      "generators a b c d\nm a b 3\nm b c 3\nm c d 3\nm a c 2\nm a d 2\n"
      "m b d 2\n");
  auto base = classify(s).types;
  REQUIRE(base.size() == 1);
  CHECK(base[0].name == "A4");
  std::vector<int> perm{0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto p = s.restrict_to(perm);
    auto t = classify(p).types;
    REQUIRE(t.size() == 1);
    CHECK(t[0].name == base[0].name);
  }
}

TEST_CASE("abelianization") {
  auto u3 = universal_system(3);
  auto a  = abelianization(u3);
  CHECK(a.target_rank == 3);
  for (int s = 0; s < 3; ++s) {
    auto v = a.image({s});
    for (int i = 0; i < 3; ++i) {
      CHECK(v[static_cast<size_t>(i)] == (i == s ? 1 : 0));
    }
  }
  auto s3 = parse_system("generators a b\nm a b 3\n");
  auto b  = abelianization(s3);
  CHECK(b.target_rank == 1);
  CHECK(b.image({0, 1}) == std::vector<int>{0});
  CHECK(abelianize(u3, {0, 1, 0}) == abelianize(u3, {1}));
}

TEST_CASE("abelianization is a homomorphism up to length 12") {
  std::mt19937_64 rng(11);
  for (auto const* f : {"u3", "p3", "tri7", "pentagon", "s3"}) {
    auto sys = load_system(data(std::string("systems/") + f + ".cox"));
    std::uniform_int_distribution<int>    letter(0, static_cast<int>(sys.rank()) - 1);
    std::uniform_int_distribution<size_t> len(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
      Word u, v;
      for (size_t i = len(rng); i > 0; --i) u.push_back(letter(rng));
      for (size_t i = len(rng); i > 0; --i) v.push_back(letter(rng));
      auto au = abelianize(sys, u), av = abelianize(sys, v);
      auto auv = abelianize(sys, concat(u, v));
      for (size_t i = 0; i < auv.size(); ++i) {
        CHECK(auv[i] == (au[i] ^ av[i]));
      }
    }
  }
}

TEST_CASE("graph predicates") {
  auto path = graph_predicates(path_racg(3));
  CHECK_FALSE(path.star_property);
  CHECK(path.closed_star[0] == std::vector<int>{0, 1});

  auto disc3 = graph_predicates(universal_system(3));
  CHECK(disc3.star_property);
  CHECK_FALSE(disc3.star_connected);

  // two isolated vertices: removing one star leaves a single vertex
  auto disc2 = graph_predicates(universal_system(2));
  CHECK(disc2.star_property);
  CHECK(disc2.star_connected);

  CHECK(graph_predicates(cycle_racg(5)).star_property);
  CHECK_THROWS_AS(graph_predicates(load_system(data("systems/tri4.cox"))),
                  InvalidInput);
}

TEST_CASE("parse_coxeter_word") {
  auto s = universal_system(3);
  CHECK(parse_coxeter_word(s, "a b c") == Word{0, 1, 2});
  CHECK(parse_coxeter_word(s, "abc") == Word{0, 1, 2});
  CHECK(parse_coxeter_word(s, "e").empty());
  CHECK_THROWS_AS(parse_coxeter_word(s, "a^-1"), InvalidInput);
  CHECK_THROWS_AS(parse_coxeter_word(s, "x"), InvalidInput);
}
