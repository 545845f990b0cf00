// One line per acceptance criterion. Time limits live in the criteria
// table of suites.hpp; a criterion over its limit fails.
#include <cstdio>
#include <cstdlib>

#include <coxlab/suites.hpp>

int main(int argc, char** argv) {
  coxlab::SuiteConfig cfg;
  if (argc > 1) {
    cfg.seed = std::strtoull(argv[1], nullptr, 10);
  }
  int failed = 0;
  for (auto const& c : coxlab::suites::criteria()) {
    auto r = coxlab::run_criterion(c.id, cfg);
    std::printf("%s [%2d] %-32s %7.2fs / %3.0fs  %s\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.limit, r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("seed %llu: %d of %zu criteria failed\n",
              static_cast<unsigned long long>(cfg.seed), failed,
              coxlab::suites::criteria().size());
  return failed == 0 ? 0 : 1;
}
