#include <catch_amalgamated.hpp>

#include <array>
#include <map>

#include <coxlab/suites.hpp>
#include <coxlab/tits.hpp>

using namespace coxlab;

namespace {

  // Dihedral group of order 2m as pairs (rotation k, flip f):
  // a = (0, 1), b = (1, 1); (k1, f1)(k2, f2) = (k1 + (-1)^f1 k2, f1 ^ f2).
  std::pair<int, int> dihedral(Word const& w, int m) {
    int k = 0, f = 0;
    for (int l : w) {
      int k2 = l == 0 ? 0 : 1;
      k      = ((k + (f ? -k2 : k2)) % m + m) % m;
      f ^= 1;
    }
    return {k, f};
  }

  // Symmetric group S_4 generated by adjacent transpositions.
  std::array<int, 4> perm(Word const& w) {
    std::array<int, 4> p{0, 1, 2, 3};
    for (int l : w) {
      std::swap(p[static_cast<size_t>(l)], p[static_cast<size_t>(l) + 1]);
    }
    return p;
  }

}  // namespace

TEST_CASE("braid relations") {
  auto s3 = parse_system("generators a b\nm a b 3\n");
  CHECK(equals_general(s3, {0, 1, 0}, {1, 0, 1}));
  CHECK_FALSE(equals_general(s3, {0, 1}, {1, 0}));
  auto dinf = universal_system(2);
  CHECK_FALSE(equals_general(dinf, {0, 1, 0, 1}, {1, 0}));
}

TEST_CASE("dihedral word problem against the rotation model") {
  for (int m : {3, 4, 5, 6}) {
    auto       sys = parse_system("generators a b\nm a b " + std::to_string(m));
    TitsEngine eng(sys);
    auto       words = suites::all_words(2, 8);
    for (size_t i = 0; i < words.size(); i += 7) {
      for (size_t j = 0; j < words.size(); j += 5) {
        bool model = dihedral(words[i], m) == dihedral(words[j], m);
        CHECK(eng.equals(words[i], words[j]) == model);
      }
    }
    CHECK(eng.ball(2 * static_cast<size_t>(m)).size()
          == 2 * static_cast<size_t>(m));
  }
}

TEST_CASE("A3 word problem against permutations") {
  auto sys = parse_system("generators a b c\nm a b 3\nm b c 3\nm a c 2\n");
  TitsEngine eng(sys);
  std::map<std::array<int, 4>, Word> seen;
  for (auto const& w : suites::all_words(3, 7)) {
    auto p  = perm(w);
    Word nf = eng.normalize(w);
    auto [it, fresh] = seen.emplace(p, nf);
    CHECK(it->second == nf);
  }
  CHECK(seen.size() == 24);
  CHECK(eng.ball(6).size() == 24);
}

TEST_CASE("normal forms are shortlex least reduced words") {
  auto       sys = parse_system("generators a b\nm a b 3\n");
  TitsEngine eng(sys);
  CHECK(eng.normalize({1, 0, 1}) == Word{0, 1, 0});
  CHECK(eng.normalize({1, 0}) == Word{1, 0});
  CHECK(eng.normalize({0, 0}).empty());
  CHECK_THROWS_AS(eng.normalize({5}), InvalidInput);
}

TEST_CASE("orders in general systems") {
  auto       tri4 = parse_system("generators a b c\nm a b 4\nm b c 4\nm a c 4\n");
  TitsEngine eng(tri4);
  CHECK(eng.order({0}) == Order::finite(2));
  CHECK(eng.order({0, 1}) == Order::finite(4));
  CHECK(eng.default_cutoff() == 8);
  auto o = eng.order({0, 1, 2});
  CHECK(o.kind == Order::Kind::unknown);
  CHECK(o.value == 8);
  CHECK(eng.order({0, 1, 2}, 20) == Order::unknown(20));
}

TEST_CASE("Tits engine agrees with graph products on right-angled systems") {
  for (auto const& sys : {cycle_racg(5), path_racg(3), universal_system(3)}) {
    TitsEngine eng(sys);
    auto       gp = GraphProduct::racg(sys);
    for (auto const& w : suites::all_words(sys.rank(), 4)) {
      CHECK(eng.normalize(w).size() == gp.normalize(w).size());
      CHECK(eng.equals(w, gp.normalize(w)));
    }
  }
}

TEST_CASE("reflection classes") {
  auto       s3 = parse_system("generators a b\nm a b 3\n");
  TitsEngine eng(s3);
  CHECK(eng.reflection_class({0, 1, 0}, 5) >= 0);
  CHECK(eng.reflection_class({0, 1}, 5) == -1);
  auto closure = eng.closure({{0}, {1}});
  CHECK(closure.size() == 6);
}
