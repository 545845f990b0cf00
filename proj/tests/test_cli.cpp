#include <catch_amalgamated.hpp>

#include <coxlab/cli.hpp>

using namespace coxlab;

namespace {

  std::string data(std::string const& rel) {
    return std::string(COXLAB_DATA_DIR) + "/" + rel;
  }

  CommandResult run(std::vector<std::string> const& args) {
    return run_command(args);
  }

  std::string sys(char const* name) {
    return data(std::string("systems/") + name + ".cox");
  }

  // Checks with timings removed.
  json stable_checks(json const& report) {
    json out = report.at("checks");
    for (auto& c : out) c.erase("seconds");
    return out;
  }

}  // namespace

TEST_CASE("word commands") {
  auto n = run({"normalize", "--system", sys("edge"), "--word", "b a"});
  CHECK(n.exit_code() == 0);
  CHECK(n.report["normal_form"] == "ab");

  auto m = run({"mult", "--system", sys("d_inf"), "--x", "ab", "--y", "ab"});
  CHECK(m.exit_code() == 0);

  CHECK(run({"order", "--system", sys("d_inf"), "--word", "ab"}).report["order"]
        == "inf");
  CHECK(run({"order", "--system", sys("tri7"), "--word", "ab"}).report["order"]
        == "7");
  CHECK(run({"normalize", "--system", sys("s3"), "--word", "bab"})
            .report["normal_form"]
        == "aba");
  CHECK(run({"centralizer", "--system", sys("edge"), "--word", "a"}).exit_code()
        == 0);
}

TEST_CASE("wall commands") {
  auto d = run({"dist", "--system", sys("d_inf"), "--t", "a", "--u", "bab"});
  CHECK(d.exit_code() == 0);
  auto g = run({"geom-check", "--system", sys("d_inf"), "--set", "a; b; aba"});
  CHECK(g.exit_code() == 1);
  CHECK(run({"geom-check", "--system", sys("d_inf"), "--set", "a; b"}).exit_code()
        == 0);
  CHECK(run({"canon-gens", "--system", sys("d_inf"), "--set", "a; b; aba"})
            .exit_code()
        == 0);
  CHECK(run({"geom-check", "--system", sys("d_inf"), "--set", "ab"}).exit_code()
        == 2);
}

TEST_CASE("sim commands") {
  auto s = run({"sim-check", "--system", sys("u3"), "--endo",
                data("endos/swap_conj.endo")});
  CHECK(s.exit_code() == 0);
  auto det = run({"detp", "--rank", "3", "--prime", "5"});
  CHECK(det.exit_code() == 0);
  CHECK(det.text.find('5') != std::string::npos);
  CHECK(run({"detp", "--rank", "3", "--prime", "9"}).exit_code() == 2);
  CHECK(run({"delta", "--system", sys("u3"), "--endo", data("endos/alpha3.endo")})
            .exit_code()
        == 0);
  CHECK(run({"refl-length", "--system", sys("d_inf"), "--word", "ab"})
            .exit_code()
        == 0);
}

TEST_CASE("probe commands and exit codes") {
  auto w = run({"probe", "domain", "--system", sys("u3"), "--x", "a", "--y", "b"});
  CHECK(w.exit_code() == 0);
  CHECK(w.report["result"] == "witness");
  auto neg = run({"probe", "domain", "--system", sys("d_inf"), "--x", "ab",
                  "--y", "ab"});
  CHECK(neg.exit_code() == 1);
  CHECK(neg.report["result"] == "certified-negative");

  CHECK(run({"probe", "phi", "--system", sys("d_inf"), "--tuple", "a; aba"})
            .exit_code()
        == 0);
  CHECK(run({"probe", "phi", "--system", sys("d_inf"), "--tuple", "a; bab"})
            .exit_code()
        == 1);
  CHECK(run({"probe", "psi", "--system", sys("p3"), "--word", "a"}).exit_code()
        == 2);
  CHECK(run({"probe", "psi", "--system", sys("d_inf"), "--word", "bab"})
            .exit_code()
        == 0);
  CHECK(run({"probe", "fc", "--system", sys("tri4"), "--word", "a"}).exit_code()
        == 0);
  CHECK(run({"probe", "delta", "--system", sys("tri4"), "--tuple", "a; b; c"})
            .exit_code()
        == 0);
  CHECK(run({"probe", "tree", "--prime", "3", "--depth", "2", "--branch", "2"})
            .exit_code()
        == 0);
}

TEST_CASE("affine and raag commands") {
  CHECK(run({"affine", "build", "--type", "A2~"}).exit_code() == 0);
  CHECK(run({"affine", "build", "--type", "custom", data("affine/a1_custom.aff")})
            .exit_code()
        == 0);
  CHECK(run({"affine", "build", "--type", "custom", data("affine/bad_theta.aff")})
            .exit_code()
        == 2);
  auto in = run({"affine", "interp", "--type", "A2~", "--pairs", "50"});
  CHECK(in.exit_code() == 0);
  CHECK(in.report["mismatches"] == 0);

  auto e = run({"raag", "embed", "--graph", data("graphs/edge.graph"), "--word",
                "u v^-1"});
  CHECK(e.exit_code() == 0);
  CHECK(e.text.find("s_v r_u s_u r_v") != std::string::npos);
  auto i = run({"raag", "index", "--graph", data("graphs/p3.graph")});
  CHECK(i.report["cosets"] == 8);
}

TEST_CASE("invalid input") {
  CHECK(run({"frobnicate"}).exit_code() == 2);
  CHECK(run({"suite", "nonsense"}).exit_code() == 2);
  CHECK(run({"normalize", "--system", sys("missing"), "--word", "a"}).exit_code()
        == 2);
  CHECK(run({"normalize", "--system", sys("d_inf"), "--word", "z"}).exit_code()
        == 2);
  CHECK(run({"normalize", "--system", sys("d_inf")}).exit_code() == 2);
}

TEST_CASE("json reports round trip") {
  auto r = run({"normalize", "--system", sys("edge"), "--word", "b a",
                "--format", "json"});
  REQUIRE(r.exit_code() == 0);
  auto parsed = json::parse(r.text);
  CHECK(parsed == r.report);
  CHECK(json::parse(parsed.dump()) == parsed);
  CHECK(parsed["status"] == "ok");
  CHECK(parsed.contains("seconds"));
}

TEST_CASE("suites are deterministic per seed") {
  auto a = run({"suite", "word-oracle"});
  CHECK(a.exit_code() == 0);
  REQUIRE(a.report["checks"].size() == 1);
  CHECK(a.report["checks"][0]["pass"] == true);

  auto s1 = run({"suite", "sim", "--seed", "7"});
  auto s2 = run({"suite", "sim", "--seed", "7"});
  CHECK(s1.exit_code() == 0);
  CHECK(stable_checks(s1.report) == stable_checks(s2.report));
  CHECK(s1.report["seed"] == 7);
}
