// Verification suite runner: one pass/fail line per criterion.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "zonal/verify.hpp"

int main(int argc, char** argv) {
  zonal::VerifyOptions options;
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--seed") == 0)
      options.seed = std::strtoull(argv[i + 1], nullptr, 10);

  const auto results = zonal::run_acceptance(options, [](const zonal::CriterionResult& r) {
    std::printf("[%2d/12] %s  %s\n          %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
  });

  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::printf("acceptance: %d/%zu criteria passed\n", passed, results.size());
  return zonal::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
