// End-to-end checks of the command-line interface: exit codes, file format,
// byte-level determinism.  argv[1] = CLI binary, argv[2] = scratch directory.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

int run(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream is(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_checks <zonal-binary> <workdir>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path wd = argv[2];
  fs::remove_all(wd);
  fs::create_directories(wd);

  // moments: success path, header format, row count
  const std::string moments_flags = " moments --m 2 --l 2 --gamma 1 --mu-min 2 --mu-max 16 --out ";
  check(run(bin + moments_flags + (wd / "m1").string()) == 0, "moments exits 0");
  const auto m1 = lines_of(wd / "m1" / "moments.csv");
  check(m1.size() == 2 + 15, "moments.csv has 15 data rows");
  check(m1.size() > 1 && m1[0].rfind("# zonal moments config=", 0) == 0,
        "moments.csv carries the config digest");
  check(m1.size() > 1 && m1[1] == "mu,J,J_mu_gamma,bound_constant",
        "moments.csv names its columns");

  // byte-identical re-run
  check(run(bin + moments_flags + (wd / "m2").string()) == 0, "moments re-run exits 0");
  check(slurp(wd / "m1" / "moments.csv") == slurp(wd / "m2" / "moments.csv"),
        "identical config produces byte-identical output");

  // invalid inputs exit 2
  check(run(bin + " moments --m 2 --l 1 --gamma 1 --out " + (wd / "bad").string()) == 2,
        "moment hypothesis 2l > gamma + m is enforced");
  check(run(bin + " moments --m 2 --l 2 --gamma 0 --out " + (wd / "bad").string()) == 2,
        "gamma = 0 is rejected");
  check(run(bin + " moments --family klein_bottle --out " + (wd / "bad").string()) == 2,
        "unknown family is rejected");
  check(run(bin + " --nonsense") == 2, "unknown flag is rejected");
  check(run(bin) == 2, "missing subcommand is rejected");

  // multipliers table
  check(run(bin + " multipliers --m 2 --l 2 --mu-min 6 --mu-max 6 --n-max 15 --out " +
            (wd / "mult").string()) == 0,
        "multipliers exits 0");
  const auto mult = lines_of(wd / "mult" / "multipliers.csv");
  check(mult.size() == 2 + 16, "multipliers.csv has one row per degree");
  if (mult.size() > 2) {
    double mu_val = 0, n_val = -1, m0 = 0;
    std::sscanf(mult[2].c_str(), "%lf,%lf,%lf", &mu_val, &n_val, &m0);
    check(n_val == 0 && std::abs(m0 - 1.0) < 1e-10, "m_nu(0) = 1 in the table");
  }

  // kernel serialization consumed back by hoelder
  check(run(bin + " kernel --m 3 --beta 0.5 --n-max 60 --out " + (wd / "k").string()) == 0,
        "kernel exits 0");
  check(fs::exists(wd / "k" / "kernel_spec.txt"), "kernel spec file is written");
  check(run(bin + " hoelder --kernel " + (wd / "k" / "kernel_spec.txt").string() +
            " --out " + (wd / "h").string()) == 0,
        "hoelder consumes a kernel spec file");
  const auto hjson = slurp(wd / "h" / "hoelder.json");
  check(hjson.find("beta_hat") != std::string::npos, "hoelder.json reports beta_hat");
  check(fs::exists(wd / "h" / "hoelder_plot.dat"), "hoelder plot data is written");

  // approx tables and fit
  check(run(bin + " approx --m 3 --beta 0.5 --n-max 200 --out " + (wd / "a").string()) == 0,
        "approx exits 0");
  const auto ajson = slurp(wd / "a" / "approx.json");
  check(ajson.find("\"slope\": -") != std::string::npos, "approx.json fit slope is negative");
  const auto acsv = lines_of(wd / "a" / "approx.csv");
  check(acsv.size() == 2 + 200, "approx.csv has one row per index");

  // report
  check(run(bin + " report --m 3 --beta 0.5 --n-max 100 --grid 16x32 --out " +
            (wd / "r").string()) == 0,
        "report exits 0");
  check(slurp(wd / "r" / "report.json").find("funk_hecke") != std::string::npos,
        "report.json contains the oracle summary");

  std::printf("cli_checks: %s\n", failures == 0 ? "all passed" : "FAILURES");
  return failures == 0 ? 0 : 1;
}
