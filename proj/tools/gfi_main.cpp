#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "gfi/config.hpp"
#include "gfi/expr.hpp"
#include "gfi/report.hpp"

namespace fs = std::filesystem;
using namespace gfi;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  bool json = false;
  bool csv = false;
  bool corrupt = false;
  bool has_seed = false, has_paths = false, has_grid = false;
  std::uint64_t seed = 0;
  std::size_t paths = 0, grid = 0;
};

RunConfig load_config(const CliOptions& opt) {
  RunConfig cfg = opt.config_path.empty() ? RunConfig{} : parse_config_file(opt.config_path);
  if (opt.has_seed) cfg.seed = opt.seed;
  if (opt.has_paths) {
    cfg.paths = opt.paths;
    cfg.feynman_mc_paths = opt.paths;
    cfg.verify_mc_paths = opt.paths;
  }
  if (opt.has_grid) cfg.grid = opt.grid;
  cfg.validate();
  return cfg;
}

void emit(const CliOptions& opt, const std::string& filename, const std::string& payload) {
  if (opt.out_dir.empty()) {
    std::cout << payload;
    return;
  }
  fs::create_directories(opt.out_dir);
  fs::path target = fs::path(opt.out_dir) / filename;
  std::ofstream out(target, std::ios::binary);
  out << payload;
  if (!out) throw Error("failed writing " + target.string());
  std::cerr << "wrote " << target.string() << "\n";
}

int cmd_covariance(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  WeightFn h = WeightFn::checked(parse_l2(cfg.covariance_h, cfg.domain_end));
  ProcessSpec spec(h);
  PathEnsemble ens = sample_brownian(cfg.grid, cfg.paths, cfg.seed, cfg.domain_end);
  if (!cfg.dump_ensemble_path.empty()) dump_ensemble(ens, cfg.dump_ensemble_path);

  std::vector<CovarianceCell> cells;
  bool all_pass = true;
  for (double s : cfg.covariance_times) {
    for (double t : cfg.covariance_times) {
      McEstimate est = cross_covariance(h, h, ens, s, t);
      CovarianceCell cell;
      cell.s = s;
      cell.t = t;
      cell.empirical = est.value;
      cell.exact = spec.beta(std::min(s, t));
      cell.se = est.se;
      cell.pass = std::abs(cell.empirical - cell.exact) <= 5.0 * cell.se;
      all_pass = all_pass && cell.pass;
      cells.push_back(cell);
    }
  }
  emit(opt, opt.json ? "covariance.json" : "covariance.csv",
       opt.json ? covariance_to_json(cells) : covariance_to_csv(cells));
  return all_pass ? kExitPass : kExitVerifyFail;
}

IdentityReport value_row(std::string name, Cx lhs, Cx rhs, double tol) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.finalize();
  return r;
}

int cmd_feynman(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  std::vector<L2Fn> basis = parse_basis_list(cfg.feynman_basis, cfg.domain_end);
  OrthogonalSet A(std::move(basis));
  CylinderFunctional F(A, parse_kernel(cfg.feynman_kernel, A.size()));
  WeightFn h = WeightFn::checked(parse_l2(cfg.feynman_h, cfg.domain_end));

  std::vector<IdentityReport> rows;
  const double eps_ladder[] = {1e-1, 1e-2, 1e-3, 1e-4};

  // closed form over the q grid, corroborated by the epsilon-approach diagnostic
  for (double q : cfg.q_values) {
    Cx closed = feynman_integral(F, h, q);
    Cx extrapolated = feynman_eps_richardson(F, h, q, eps_ladder);
    IdentityReport r = value_row("feynman/q=" + fmt_g17(q), closed, extrapolated, 1e-8);
    r.seed = cfg.seed;
    rows.push_back(std::move(r));
  }

  // MC cross-checks over the lambda grid
  for (double lam : cfg.lambda_values) {
    Cx closed = analytic_wiener_integral(F, h, {lam, 0.0});
    PathEnsemble ens =
        sample_brownian(cfg.grid, cfg.feynman_mc_paths, cfg.seed ^ std::uint64_t(lam * 977.0),
                        cfg.domain_end);
    const double rho = 1.0 / std::sqrt(lam);
    Cx sum{0.0, 0.0};
    std::vector<Cx> vals(ens.n_paths());
    for (std::size_t p = 0; p < ens.n_paths(); ++p) {
      vals[p] = F.eval_on_process(h, ens.path(p), rho);
      sum += vals[p];
    }
    Cx mean = sum / double(ens.n_paths());
    double var = 0.0;
    for (const Cx& v : vals) var += std::norm(v - mean);
    double se = std::sqrt(var) / double(ens.n_paths());
    IdentityReport r;
    r.name = "feynman/lambda=" + fmt_g17(lam);
    r.lhs = closed;
    r.rhs = mean;
    r.rhs_se = se;
    r.mc_mode = true;
    r.seed = cfg.seed;
    r.finalize();
    rows.push_back(std::move(r));
  }

  // fixed reference rows: unit-variance Gaussian kernel at q = 1
  {
    OrthogonalSet unit_set({L2Fn::indicator(0.0, 1.0, 1.0)});
    CylinderFunctional Fg(unit_set, parse_kernel("term(1, [poly(1); 0.5; 0])", 1));
    WeightFn one = WeightFn::unit(1.0);
    Cx oracle = principal_sqrt(Cx{0.0, -1.0} / (2.0 * std::numbers::pi)) *
                principal_sqrt(2.0 * std::numbers::pi / Cx{1.0, -1.0});
    rows.push_back(value_row("example/gaussian_q1", feynman_integral(Fg, one, 1.0), oracle, 1e-12));
    rows.push_back(value_row("example/eps_richardson", feynman_integral(Fg, one, 1.0),
                             feynman_eps_richardson(Fg, one, 1.0, eps_ladder), 1e-8));
    rows.push_back(value_row("example/sign_invariance", feynman_integral(F, h, cfg.q_values.front()),
                             feynman_integral(F, h.negated(), cfg.q_values.front()), 1e-14));
  }
  for (auto& r : rows) r.seed = cfg.seed;

  emit(opt, opt.csv ? "feynman.csv" : "feynman.json",
       opt.csv ? reports_to_csv(rows) : reports_to_json(rows));
  for (const auto& r : rows)
    if (!r.pass) return kExitVerifyFail;
  return kExitPass;
}

int cmd_gfft(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  std::vector<L2Fn> basis = parse_basis_list(cfg.feynman_basis, cfg.domain_end);
  OrthogonalSet A(std::move(basis));
  CylinderFunctional F(A, parse_kernel(cfg.feynman_kernel, A.size()));
  WeightFn k = WeightFn::checked(parse_l2(cfg.gfft_k, cfg.domain_end));

  TransformResult tr = gfft(F, k, cfg.gfft_q, cfg.gfft_p);
  ScaleVector scales = ScaleVector::for_set(A.rebased(k));

  std::vector<IdentityReport> rows;
  for (double s : cfg.gfft_shifts) {
    // direct route: shift the kernel, then integrate
    std::vector<Cx> shift(A.size(), Cx{s, 0.0});
    Cx direct = weighted_gauss_integral(F.kernel().shifted(shift), scales.sigma_sq,
                                        Cx{0.0, -cfg.gfft_q});
    std::vector<double> probe(A.size(), s);
    Cx via_kernel = tr.functional.kernel().eval(std::span<const double>(probe));
    IdentityReport r = value_row("gfft/shift=" + fmt_g17(s), via_kernel, direct, 1e-10);
    r.seed = cfg.seed;
    rows.push_back(std::move(r));
  }
  {
    std::vector<double> zero(A.size(), 0.0);
    rows.push_back(value_row("gfft/zero_shift_is_feynman",
                             tr.functional.kernel().eval(std::span<const double>(zero)),
                             feynman_integral(F, k, cfg.gfft_q), 1e-12));
    TransformResult neg = gfft(F, k.negated(), cfg.gfft_q, cfg.gfft_p);
    KernelDiff diff = compare_kernels(tr.functional.kernel(), neg.functional.kernel());
    IdentityReport r;
    r.name = "gfft/sign_invariance";
    r.tol = 1e-14;
    r.rel_gap = diff.max_rel_gap;
    r.abs_gap = 0.0;
    r.pass = diff.structurally_equal && diff.max_rel_gap <= r.tol;
    rows.push_back(std::move(r));
  }
  for (auto& r : rows) r.seed = cfg.seed;

  emit(opt, opt.csv ? "gfft.csv" : "gfft.json",
       opt.csv ? reports_to_csv(rows) : reports_to_json(rows));
  for (const auto& r : rows)
    if (!r.pass) return kExitVerifyFail;
  return kExitPass;
}

int cmd_verify(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  SuiteConfig suite;
  suite.seed = cfg.seed;
  suite.configs_per_check = cfg.verify_configs;
  suite.tol = cfg.verify_tol;
  suite.corrupt = opt.corrupt;
  suite.mc_configs = cfg.verify_mc_configs;
  suite.mc_paths = cfg.verify_mc_paths;
  suite.mc_grid = cfg.grid;
  std::vector<IdentityReport> reports = run_suite(suite);
  emit(opt, opt.csv ? "verify.csv" : "verify.json",
       opt.csv ? reports_to_csv(reports) : reports_to_json(reports));
  std::size_t failures = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failures;
  std::cerr << reports.size() - failures << "/" << reports.size() << " identities pass\n";
  return failures == 0 ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Feynman integrals, Fourier-Feynman transforms and parts-formula checks"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--config", opt.config_path, "config file (flat key-value with [sections])");
  app.add_option("--out", opt.out_dir, "directory for report files (default: stdout)");
  auto* seed_opt = app.add_option("--seed", opt.seed, "override run.seed");
  auto* paths_opt = app.add_option("--paths", opt.paths, "override run.paths");
  auto* grid_opt = app.add_option("--grid", opt.grid, "override run.grid");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--csv", opt.csv, "CSV output");
  app.add_flag("--corrupt", opt.corrupt, "negative controls: corrupt each identity's constant");

  auto* cov = app.add_subcommand("covariance", "empirical vs exact covariance of Z_h");
  auto* fey = app.add_subcommand("feynman", "closed-form Feynman integrals with MC cross-checks");
  auto* gff = app.add_subcommand("gfft", "transform kernel vs direct integration");
  auto* ver = app.add_subcommand("verify", "run every identity check and report gaps");
  for (auto* sub : {cov, fey, gff, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  opt.has_seed = seed_opt->count() > 0;
  opt.has_paths = paths_opt->count() > 0;
  opt.has_grid = grid_opt->count() > 0;

  try {
    if (cov->parsed()) return cmd_covariance(opt);
    if (fey->parsed()) return cmd_feynman(opt);
    if (gff->parsed()) return cmd_gfft(opt);
    if (ver->parsed()) return cmd_verify(opt);
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
