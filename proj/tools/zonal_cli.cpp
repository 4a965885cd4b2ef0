// Command-line front end: verification sweeps over Jackson-smoothed zonal
// integral operators, emitting CSV tables, JSON summaries and plot data.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zonal/jackson.hpp"
#include "zonal/kernels.hpp"
#include "zonal/operators.hpp"
#include "zonal/oracle.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"
#include "zonal/verify.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string family = "sphere";
  int m = 2;
  double beta = 0.5;
  int l = 2;
  int mu_min = 2;
  int mu_max = 16;
  double gamma = 1.0;
  int n_max = 100;
  std::string grid = "32x64";
  std::string out = ".";
  std::uint64_t seed = 20250810;
  std::string kernel_file;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_digest(const RunConfig& cfg) {
  std::ostringstream os;
  os << "cmd=" << cfg.command << ";family=" << cfg.family << ";m=" << cfg.m
     << ";beta=" << g17(cfg.beta) << ";l=" << cfg.l << ";mu_min=" << cfg.mu_min
     << ";mu_max=" << cfg.mu_max << ";gamma=" << g17(cfg.gamma)
     << ";n_max=" << cfg.n_max << ";grid=" << cfg.grid << ";seed=" << cfg.seed
     << ";kernel=" << cfg.kernel_file;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a(os.str()));
  return buf;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out);
  std::ofstream os(std::filesystem::path(cfg.out) / name,
                   std::ios::out | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open output file: " + name);
  return os;
}

void csv_header(std::ofstream& os, const RunConfig& cfg, const std::string& columns) {
  os << "# zonal " << cfg.command << " config=" << config_digest(cfg) << "\n";
  os << columns << "\n";
}

void write_json(const RunConfig& cfg, const std::string& name, json j) {
  j["config_digest"] = config_digest(cfg);
  auto os = open_output(cfg, name);
  os << j.dump(2) << "\n";
}

std::pair<int, int> parse_grid(const std::string& grid) {
  int nt = 0, np = 0;
  if (std::sscanf(grid.c_str(), "%dx%d", &nt, &np) != 2)
    throw std::domain_error("grid must look like 32x64");
  return {nt, np};
}

// kernel for the example-family commands: built from flags or read from file
struct KernelInput {
  zonal::ZonalKernelSpec spec;
  double beta = 0.0;
};

KernelInput load_kernel(const RunConfig& cfg, int n_trunc) {
  KernelInput in;
  if (!cfg.kernel_file.empty()) {
    std::ifstream is(cfg.kernel_file);
    if (!is) throw std::domain_error("cannot read kernel file: " + cfg.kernel_file);
    auto file = zonal::read_kernel_spec(is);
    in.spec = std::move(file.spec);
    in.beta = std::isfinite(file.beta) ? file.beta : cfg.beta;
    return in;
  }
  if (cfg.family != "sphere")
    throw std::domain_error("example kernels are defined on spheres only");
  in.spec = zonal::example_kernel(cfg.m, cfg.beta, n_trunc);
  in.beta = cfg.beta;
  return in;
}

int cmd_moments(const RunConfig& cfg) {
  const auto space = zonal::space_params(zonal::family_from_name(cfg.family), cfg.m);
  if (!(cfg.gamma > 0.0)) throw std::domain_error("gamma must be positive");
  if (!(2 * cfg.l > cfg.gamma + cfg.m))
    throw std::domain_error("moment sweep requires 2l > gamma + m");
  if (cfg.mu_min < 1 || cfg.mu_max < cfg.mu_min)
    throw std::domain_error("need 1 <= mu_min <= mu_max");
  const double c = zonal::moment_bound_constant(cfg.m, cfg.gamma, cfg.l);
  auto os = open_output(cfg, "moments.csv");
  csv_header(os, cfg, "mu,J,J_mu_gamma,bound_constant");
  bool holds = true;
  for (int mu = cfg.mu_min; mu <= cfg.mu_max; ++mu) {
    const auto rule =
        zonal::build_rule(zonal::recommend_panels(mu, cfg.l, 0), 16);
    const auto jp = zonal::make_jackson(space, cfg.l, mu, rule);
    const double J = zonal::moment(jp, cfg.gamma, rule);
    const double scaled = J * std::pow(static_cast<double>(mu), cfg.gamma);
    if (mu >= 2 && !(scaled <= c)) holds = false;
    os << mu << ',' << g17(J) << ',' << g17(scaled) << ',' << g17(c) << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_multipliers(const RunConfig& cfg) {
  const auto space = zonal::space_params(zonal::family_from_name(cfg.family), cfg.m);
  if (cfg.mu_min < 1 || cfg.mu_max < cfg.mu_min)
    throw std::domain_error("need 1 <= mu_min <= mu_max");
  if (cfg.n_max < 0) throw std::domain_error("n_max must be nonnegative");
  auto os = open_output(cfg, "multipliers.csv");
  csv_header(os, cfg, "mu,n,m_nu_n");
  for (int mu = cfg.mu_min; mu <= cfg.mu_max; ++mu) {
    const auto rule =
        zonal::build_rule(zonal::recommend_panels(mu, cfg.l, cfg.n_max), 16);
    const auto jp = zonal::make_jackson(space, cfg.l, mu, rule);
    const auto seq = zonal::multipliers(jp, cfg.n_max, rule);
    for (int n = 0; n <= cfg.n_max; ++n)
      os << mu << ',' << n << ',' << g17(seq.values[n]) << "\n";
  }
  return 0;
}

int cmd_kernel(const RunConfig& cfg) {
  const auto in = load_kernel(cfg, cfg.n_max);
  {
    auto os = open_output(cfg, "kernel_spec.txt");
    os << "# zonal kernel config=" << config_digest(cfg) << "\n";
    zonal::write_kernel_spec(os, in.spec, in.beta);
  }
  auto os = open_output(cfg, "kernel.csv");
  csv_header(os, cfg, "cos_theta,K,tail_bound");
  for (int j = 0; j <= 40; ++j) {
    const double u = -1.0 + 2.0 * j / 40.0;
    const auto kv = zonal::kernel_eval(in.spec, u);
    os << g17(u) << ',' << g17(kv.value) << ',' << g17(kv.tail_bound) << "\n";
  }
  return 0;
}

int cmd_hoelder(const RunConfig& cfg) {
  const auto in = load_kernel(cfg, cfg.n_max);
  std::vector<double> t_grid;
  for (int k = 0; k <= 10; ++k) t_grid.push_back(std::pow(2.0, -k));
  const auto est = zonal::estimate_holder(in.spec, t_grid, 2048);
  double max_ratio = 0.0;
  auto os = open_output(cfg, "hoelder.csv");
  csv_header(os, cfg, "t,omega,omega_over_t_beta");
  auto plot = open_output(cfg, "hoelder_plot.dat");
  plot << "# zonal hoelder config=" << config_digest(cfg) << "\n";
  plot << "# columns: t omega\n";
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double ratio = est.omega[i] / std::pow(t_grid[i], in.beta);
    max_ratio = std::max(max_ratio, ratio);
    os << g17(t_grid[i]) << ',' << g17(est.omega[i]) << ',' << g17(ratio) << "\n";
    plot << g17(t_grid[i]) << ' ' << g17(est.omega[i]) << "\n";
  }
  write_json(cfg, "hoelder.json",
             json{{"beta", in.beta},
                  {"beta_hat", est.beta_hat},
                  {"B_hat", est.B_hat},
                  {"max_omega_over_t_beta", max_ratio},
                  {"n_trunc", in.spec.n_trunc()},
                  {"tail_bound_uniform", zonal::tail_bound_uniform(in.spec)},
                  {"tail_bound_operator", zonal::tail_bound_operator(in.spec)}});
  return 0;
}

int cmd_approx(const RunConfig& cfg) {
  const auto in = load_kernel(cfg, std::max(cfg.n_max, 40));
  if (cfg.n_max < 20) throw std::domain_error("approx needs n_max >= 20");
  const auto op = zonal::operator_from_kernel(in.spec);
  const auto sq = zonal::sqrt_op(op);
  const std::int64_t j_max = cfg.n_max;
  const auto a = zonal::approx_numbers(sq, j_max);
  const double exponent = in.beta / (2.0 * in.spec.space.m);
  auto os = open_output(cfg, "approx.csv");
  csv_header(os, cfg, "j,a_j,a_j_scaled");
  auto plot = open_output(cfg, "approx_plot.dat");
  plot << "# zonal approx config=" << config_digest(cfg) << "\n";
  plot << "# columns: j a_j\n";
  for (std::int64_t j = 1; j <= j_max; ++j) {
    const double scaled = a[j - 1] * std::pow(static_cast<double>(j), exponent);
    os << j << ',' << g17(a[j - 1]) << ',' << g17(scaled) << "\n";
    plot << j << ' ' << g17(a[j - 1]) << "\n";
  }
  const auto lambdas = zonal::approx_numbers(op, j_max);
  const std::int64_t fit_lo = std::max<std::int64_t>(1, j_max / 10);
  const auto fit = zonal::decay_fit(lambdas, fit_lo, j_max);
  write_json(cfg, "approx.json",
             json{{"slope", fit.slope},
                  {"intercept", fit.intercept},
                  {"max_residual", fit.max_residual},
                  {"fit_j_min", fit.j_min},
                  {"fit_j_max", fit.j_max},
                  {"beta", in.beta}});
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  zonal::VerifyOptions options;
  options.seed = cfg.seed;
  const auto results =
      zonal::run_acceptance(options, [](const zonal::CriterionResult& r) {
        std::printf("[%2d/12] %s  %s\n          %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
      });
  json items = json::array();
  int passed = 0;
  for (const auto& r : results) {
    items.push_back(
        {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass ? 1 : 0;
  }
  write_json(cfg, "verify.json",
             json{{"criteria", items},
                  {"passed", passed},
                  {"total", results.size()},
                  {"seed", cfg.seed}});
  std::printf("verify: %d/%zu criteria passed\n", passed, results.size());
  return zonal::all_passed(results) ? 0 : 1;
}

int cmd_report(const RunConfig& cfg) {
  json report;
  {
    const auto space = zonal::space_params(zonal::Family::Sphere, 2);
    const double c = zonal::moment_bound_constant(2, 1.0, 2);
    double worst = 0.0;
    for (int mu = 2; mu <= 16; ++mu) {
      const auto rule = zonal::build_rule(zonal::recommend_panels(mu, 2, 0), 16);
      const auto jp = zonal::make_jackson(space, 2, mu, rule);
      worst = std::max(worst, zonal::moment(jp, 1.0, rule) * mu);
    }
    report["moments"] = {{"max_J_mu", worst}, {"bound_constant", c}};
  }
  {
    const auto in = load_kernel(cfg, std::min(cfg.n_max, 200));
    std::vector<double> t_grid;
    for (int k = 0; k <= 8; ++k) t_grid.push_back(std::pow(2.0, -k));
    const auto est = zonal::estimate_holder(in.spec, t_grid, 512);
    report["hoelder"] = {{"beta_hat", est.beta_hat}, {"B_hat", est.B_hat}};
    const auto op = zonal::operator_from_kernel(in.spec);
    const auto lam = zonal::approx_numbers(op, 2000);
    const auto fit = zonal::decay_fit(lam, 50, 2000);
    report["decay"] = {{"slope", fit.slope}, {"max_residual", fit.max_residual}};
  }
  {
    const auto [nt, np] = parse_grid(cfg.grid);
    zonal::ZonalKernelSpec spec;
    spec.space = zonal::space_params(zonal::Family::Sphere, 2);
    spec.coeffs.resize(7);
    spec.coeffs[0] = spec.space.tau_m;
    for (int n = 1; n <= 6; ++n) spec.coeffs[n] = std::pow(n, -4.0);
    const auto fh = zonal::funk_hecke_check(spec, zonal::sphere_grid(nt, np));
    double worst = 0.0;
    for (const auto& row : fh.rows) worst = std::max(worst, row.max_rel_error);
    report["funk_hecke"] = {{"pass", fh.pass},
                            {"max_cluster_rel_error", worst},
                            {"min_eigenvalue", fh.min_eigenvalue}};
  }
  write_json(cfg, "report.json", std::move(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"spectral verification of Jackson-smoothed zonal integral operators "
               "on compact two-point homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  app.add_option("--family", cfg.family,
                 "space family: sphere, real_projective, complex_projective, "
                 "quaternionic_projective, cayley_plane");
  app.add_option("--m", cfg.m, "manifold dimension");
  app.add_option("--beta", cfg.beta, "Hoelder exponent in (0, 1]");
  app.add_option("--l", cfg.l, "Jackson exponent l");
  app.add_option("--mu-min", cfg.mu_min, "first mu of the sweep");
  app.add_option("--mu-max", cfg.mu_max, "last mu of the sweep");
  app.add_option("--gamma", cfg.gamma, "moment exponent");
  app.add_option("--n-max", cfg.n_max, "degree / index cutoff (per subcommand)");
  app.add_option("--grid", cfg.grid, "sphere grid, e.g. 32x64");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--kernel", cfg.kernel_file, "read the kernel spec from this file");

  auto* moments = app.add_subcommand("moments", "Jackson moment sweep against the bound");
  auto* multipliers = app.add_subcommand("multipliers", "smoothing symbol tables");
  auto* kernel = app.add_subcommand("kernel", "evaluate and serialize a kernel spec");
  auto* hoelder = app.add_subcommand("hoelder", "translation modulus and fitted exponent");
  auto* approx = app.add_subcommand("approx", "approximation numbers and decay fit");
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  auto* report = app.add_subcommand("report", "one-shot JSON summary");
  for (auto* sub : {moments, multipliers, kernel, hoelder, approx, verify, report})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (moments->parsed()) { cfg.command = "moments"; return cmd_moments(cfg); }
    if (multipliers->parsed()) { cfg.command = "multipliers"; return cmd_multipliers(cfg); }
    if (kernel->parsed()) { cfg.command = "kernel"; return cmd_kernel(cfg); }
    if (hoelder->parsed()) { cfg.command = "hoelder"; return cmd_hoelder(cfg); }
    if (approx->parsed()) { cfg.command = "approx"; return cmd_approx(cfg); }
    if (verify->parsed()) { cfg.command = "verify"; return cmd_verify(cfg); }
    if (report->parsed()) { cfg.command = "report"; return cmd_report(cfg); }
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
