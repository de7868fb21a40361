#include "gfi/theorems.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gfi {

void IdentityReport::finalize() {
  abs_gap = std::abs(lhs - rhs);
  rel_gap = abs_gap / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  if (mc_mode) {
    double combined = std::sqrt(lhs_se * lhs_se + rhs_se * rhs_se);
    pass = abs_gap <= 3.0 * combined;
  } else {
    pass = rel_gap <= tol;
  }
}

namespace {

Cx corrupt_factor(bool corrupt) { return corrupt ? Cx{2.0, 0.0} : Cx{1.0, 0.0}; }

WeightFn unit_for(const CylinderFunctional& F) {
  return WeightFn::unit(F.base_set().member(0).domain_end());
}

/// ∫^{anf_q} [F δG + δF G](Z_{h₁}(x,·)) dm via the product-rule assembly.
Cx parts_lhs(const CylinderFunctional& F, const CylinderFunctional& G, const WeightFn& h1,
             const WeightFn& h2, const L2Fn& z, double q) {
  const VariationDirection dir = VariationDirection::w_zh(z, h1);
  CylinderFunctional Fr = F.rebased(h1);
  CylinderFunctional Gr = G.rebased(h1);
  CylinderFunctional dF = variation_functional(F, h1, h2, dir);
  CylinderFunctional dG = variation_functional(G, h1, h2, dir);
  GaussPolyFn kernel = Fr.kernel() * dG.kernel() + dF.kernel() * Gr.kernel();
  CylinderFunctional lhs_fn(Fr.base_set(), std::move(kernel));
  return feynman_integral(lhs_fn, unit_for(lhs_fn), q);
}

void echo_weights(IdentityReport& r, const WeightFn& h1, const WeightFn& h2, const L2Fn& z, double q) {
  r.params.emplace_back("h1", h1.label());
  r.params.emplace_back("h2", h2.label());
  r.params.emplace_back("z", z.label());
  std::ostringstream qs;
  qs << q;
  r.params.emplace_back("q", qs.str());
}

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

IdentityReport check_cameron_storvick(const CylinderFunctional& F, const WeightFn& h1,
                                      const WeightFn& h2, const L2Fn& z, double q, bool corrupt) {
  IdentityReport r;
  r.name = "cameron_storvick";
  r.tol = kExactTol;
  const VariationDirection dir = VariationDirection::w_zh(z, h1);
  CylinderFunctional var = variation_functional(F, h1, h2, dir);
  r.lhs = feynman_integral(var, unit_for(var), q);
  r.rhs = Cx{0.0, -q} * corrupt_factor(corrupt) * feynman_linear_weighted(F, h1, h2, z, q);
  echo_weights(r, h1, h2, z, q);
  r.finalize();
  return r;
}

IdentityReport check_parts_feynman(const CylinderFunctional& F, const CylinderFunctional& G,
                                   const WeightFn& h1, const WeightFn& h2, const L2Fn& z, double q,
                                   bool corrupt) {
  IdentityReport r;
  r.name = "parts_feynman";
  r.tol = kExactTol;
  r.lhs = parts_lhs(F, G, h1, h2, z, q);
  r.rhs = Cx{0.0, -q} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(F, G), h1, h2, z, q);
  echo_weights(r, h1, h2, z, q);
  r.finalize();
  return r;
}

IdentityReport check_parts_self(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                                const L2Fn& z, double q, bool corrupt) {
  IdentityReport r;
  r.name = "parts_self";
  r.tol = kExactTol;
  const VariationDirection dir = VariationDirection::w_zh(z, h1);
  CylinderFunctional Fr = F.rebased(h1);
  CylinderFunctional dF = variation_functional(F, h1, h2, dir);
  CylinderFunctional lhs_fn(Fr.base_set(), Fr.kernel() * dF.kernel());
  r.lhs = feynman_integral(lhs_fn, unit_for(lhs_fn), q);
  r.rhs = Cx{0.0, -q / 2.0} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(F, F), h1, h2, z, q);
  echo_weights(r, h1, h2, z, q);
  r.finalize();
  return r;
}

IdentityReport check_parts_transforms(const CylinderFunctional& F, const CylinderFunctional& G,
                                      const WeightFn& k1, const WeightFn& k2, const WeightFn& h1,
                                      const WeightFn& h2, const L2Fn& z, double q1, double q2,
                                      double q3, RhsWeightReading reading, bool corrupt) {
  IdentityReport r;
  r.name = reading == RhsWeightReading::AsPrinted ? "parts_transforms/as_printed"
                                                  : "parts_transforms/symmetric";
  r.tol = kExactTol;
  CylinderFunctional tF = gfft(F, k1, q1, 2.0).functional;
  CylinderFunctional tG = gfft(G, k2, q2, 2.0).functional;
  r.lhs = parts_lhs(tF, tG, h1, h2, z, q3);
  const WeightFn& rhs_weight = reading == RhsWeightReading::AsPrinted ? k1 : k2;
  CylinderFunctional tG_rhs = gfft(G, rhs_weight, q2, 2.0).functional;
  r.rhs = Cx{0.0, -q3} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(tF, tG_rhs), h1, h2, z, q3);
  echo_weights(r, h1, h2, z, q3);
  r.params.emplace_back("k1", k1.label());
  r.params.emplace_back("k2", k2.label());
  r.params.emplace_back("q1", fmt_num(q1));
  r.params.emplace_back("q2", fmt_num(q2));
  r.finalize();
  return r;
}

IdentityReport check_parts_gfft_pair(const CylinderFunctional& F, const CylinderFunctional& G,
                                     const WeightFn& k, const WeightFn& h1, const WeightFn& h2,
                                     const L2Fn& z, double q1, double q2, double q3, bool corrupt) {
  IdentityReport r;
  r.name = "parts_gfft_pair";
  r.tol = kExactTol;
  const WeightFn kh1 = WeightFn::checked(k.fn() * h1.fn());
  CylinderFunctional tF = gfft(F, kh1, q1, 2.0).functional;
  CylinderFunctional tG = gfft(G, kh1, q2, 2.0).functional;
  r.lhs = parts_lhs(tF, tG, h1, h2, z, q3);
  r.rhs = Cx{0.0, -q3} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(tF, tG), h1, h2, z, q3);
  echo_weights(r, h1, h2, z, q3);
  r.params.emplace_back("k", k.label());
  r.params.emplace_back("q1", fmt_num(q1));
  r.params.emplace_back("q2", fmt_num(q2));
  r.finalize();
  return r;
}

IdentityReport check_parts_gfft_self(const CylinderFunctional& F, const WeightFn& k,
                                     const WeightFn& h1, const WeightFn& h2, const L2Fn& z, double q1,
                                     double q3, bool corrupt) {
  IdentityReport r;
  r.name = "parts_gfft_self";
  r.tol = kExactTol;
  const WeightFn kh1 = WeightFn::checked(k.fn() * h1.fn());
  CylinderFunctional tF = gfft(F, kh1, q1, 2.0).functional;
  const VariationDirection dir = VariationDirection::w_zh(z, h1);
  CylinderFunctional tFr = tF.rebased(h1);
  CylinderFunctional dtF = variation_functional(tF, h1, h2, dir);
  CylinderFunctional lhs_fn(tFr.base_set(), tFr.kernel() * dtF.kernel());
  r.lhs = feynman_integral(lhs_fn, unit_for(lhs_fn), q3);
  r.rhs = Cx{0.0, -q3 / 2.0} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(tF, tF), h1, h2, z, q3);
  echo_weights(r, h1, h2, z, q3);
  r.params.emplace_back("k", k.label());
  r.params.emplace_back("q1", fmt_num(q1));
  r.finalize();
  return r;
}

IdentityReport check_parts_mixed(const CylinderFunctional& F, const CylinderFunctional& G,
                                 const WeightFn& k, const WeightFn& h1, const WeightFn& h2,
                                 const L2Fn& z, double q1, double q2, double p, bool corrupt) {
  IdentityReport r;
  r.name = "parts_mixed";
  r.tol = kExactTol;
  const WeightFn kh1 = WeightFn::checked(k.fn() * h1.fn());
  CylinderFunctional tG = gfft(G, kh1, q1, p).functional;
  r.lhs = parts_lhs(F, tG, h1, h2, z, q2);
  r.rhs = Cx{0.0, -q2} * corrupt_factor(corrupt) *
          feynman_linear_weighted(product(F, tG), h1, h2, z, q2);
  echo_weights(r, h1, h2, z, q2);
  r.params.emplace_back("k", k.label());
  r.params.emplace_back("q1", fmt_num(q1));
  r.params.emplace_back("p", fmt_num(p));
  r.finalize();
  return r;
}

IdentityReport check_parts_mixed_self(const CylinderFunctional& F, const WeightFn& k,
                                      const WeightFn& h1, const WeightFn& h2, const L2Fn& z,
                                      double q1, double q2, double p, bool corrupt) {
  IdentityReport r = check_parts_mixed(F, F, k, h1, h2, z, q1, q2, p, corrupt);
  r.name = "parts_mixed_self";
  r.finalize();
  return r;
}

IdentityReport check_transform_variation(const CylinderFunctional& F, const WeightFn& h1,
                                         const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                         double q, double p, bool corrupt) {
  IdentityReport r;
  r.name = "transform_variation_commutation";
  r.tol = kKernelCoeffTol;
  CylinderFunctional route_a = transform_of_variation(F, h1, h2, k, z, q, p);
  CylinderFunctional route_b = variation_of_transform(F, h1, h2, k, z, q, p);
  if (corrupt)
    route_b = route_b.with_kernel(route_b.kernel().scaled({2.0, 0.0}), route_b.smoothness());
  KernelDiff diff = compare_kernels(route_a.kernel(), route_b.kernel());
  // probe evaluation gives the report a concrete value pair
  std::vector<double> probe(route_a.arity());
  for (std::size_t j = 0; j < probe.size(); ++j) probe[j] = 0.3 - 0.15 * double(j);
  r.lhs = route_a.eval_args(probe);
  r.rhs = route_b.eval_args(probe);
  r.abs_gap = std::abs(r.lhs - r.rhs);
  r.rel_gap = diff.max_rel_gap;
  r.pass = diff.structurally_equal && diff.max_rel_gap <= r.tol;
  echo_weights(r, h1, h2, z, q);
  r.params.emplace_back("k", k.label());
  r.params.emplace_back("p", fmt_num(p));
  return r;
}

namespace {

struct FunctionLibrary {
  std::vector<L2Fn> general_weights;
  std::vector<L2Fn> symmetric_weights;  // even about T/2
  std::vector<L2Fn> constant_weights;
  std::vector<L2Fn> z_choices;
};

FunctionLibrary library(double T = 1.0) {
  FunctionLibrary lib;
  lib.general_weights = {
      L2Fn::constant(1.0, T),
      L2Fn::polynomial(RPoly({1.0, 0.5}), T, "1+t/2"),
      L2Fn::polynomial(RPoly({2.0, -1.0}), T, "2-t"),
      L2Fn::constant(0.75, T).with_label("0.75"),
  };
  lib.symmetric_weights = {
      L2Fn::constant(1.0, T),
      L2Fn::polynomial(RPoly({0.75, -1.0, 1.0}), T, "0.5+(t-1/2)^2"),
      L2Fn::polynomial(RPoly({1.75, 1.0, -1.0}), T, "2-(t-1/2)^2"),
      L2Fn::constant(1.5, T).with_label("1.5"),
  };
  lib.constant_weights = {
      L2Fn::constant(1.0, T),
      L2Fn::constant(1.5, T).with_label("1.5"),
      L2Fn::constant(0.75, T).with_label("0.75"),
  };
  lib.z_choices = {
      L2Fn::constant(1.0, T),
      L2Fn::polynomial(RPoly({0.0, 1.0}), T, "t"),
      L2Fn::polynomial(RPoly({-0.5, 1.0}), T, "t-1/2"),
  };
  return lib;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Cx random_coeff(std::mt19937_64& rng) { return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}; }

GaussPolyFn random_kernel(std::mt19937_64& rng, std::size_t n) {
  const int n_terms = 1 + int(rng() % 2);
  GaussPolyFn acc(n);
  for (int t = 0; t < n_terms; ++t) {
    std::vector<AxisFactor> axes(n);
    for (std::size_t j = 0; j < n; ++j) {
      const int deg = int(rng() % 4);
      std::vector<Cx> coeffs(deg + 1);
      for (auto& c : coeffs) c = random_coeff(rng);
      if (coeffs.back() == Cx{0.0, 0.0}) coeffs.back() = {1.0, 0.0};
      axes[j].poly = CPoly(std::move(coeffs));
      axes[j].rate = {uniform(rng, 0.3, 2.0), 0.0};
      axes[j].shift = {uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
    }
    acc = acc + GaussPolyFn::term(random_coeff(rng) + Cx{0.5, 0.0}, std::move(axes));
  }
  return acc;
}

double random_q(std::mt19937_64& rng) {
  static const double choices[] = {0.7, 1.0, 2.0, 3.0};
  double q = choices[rng() % 4];
  return (rng() % 2 == 0) ? q : -q;
}

}  // namespace

TheoremConfig draw_config(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double T = 1.0;
  FunctionLibrary lib = library(T);

  // base-set families with matching compatible-weight pools
  const int family = int(rng() % 5);
  std::vector<L2Fn> members;
  const std::vector<L2Fn>* h1_pool = &lib.general_weights;
  std::string family_name;
  switch (family) {
    case 0: {
      family_name = "legendre_n1";
      members = {L2Fn::shifted_legendre(int(rng() % 4), T)};
      h1_pool = &lib.general_weights;
      break;
    }
    case 1: {
      family_name = "symmetric_n2";
      members = {L2Fn::constant(1.0, T), L2Fn::polynomial(RPoly({-0.5, 1.0}), T, "t-1/2")};
      h1_pool = &lib.symmetric_weights;
      break;
    }
    case 2: {
      family_name = "disjoint_n2";
      members = {L2Fn::indicator(0.0, 0.5, T), L2Fn::indicator(0.5, 1.0, T)};
      h1_pool = &lib.general_weights;
      break;
    }
    case 3: {
      family_name = "disjoint_n3";
      members = {L2Fn::indicator(0.0, 1.0 / 3.0, T), L2Fn::indicator(1.0 / 3.0, 2.0 / 3.0, T),
                 L2Fn::indicator(2.0 / 3.0, 1.0, T)};
      h1_pool = &lib.general_weights;
      break;
    }
    default: {
      family_name = "legendre_n3";
      members = {L2Fn::shifted_legendre(0, T), L2Fn::shifted_legendre(1, T),
                 L2Fn::shifted_legendre(2, T)};
      h1_pool = &lib.constant_weights;
      break;
    }
  }
  OrthogonalSet A(members);
  const std::size_t n = A.size();

  const L2Fn& h1_fn = (*h1_pool)[rng() % h1_pool->size()];
  const L2Fn& k_fn = (*h1_pool)[rng() % h1_pool->size()];
  const L2Fn& k2_fn = (*h1_pool)[rng() % h1_pool->size()];
  const L2Fn& h2_fn = lib.general_weights[rng() % 3];
  const L2Fn& z_fn = lib.z_choices[rng() % lib.z_choices.size()];

  TheoremConfig cfg{
      CylinderFunctional(A, random_kernel(rng, n)),
      CylinderFunctional(A, random_kernel(rng, n)),
      WeightFn::checked(h1_fn),
      WeightFn::checked(h2_fn),
      WeightFn::checked(k_fn),
      WeightFn::checked(k2_fn),
      z_fn,
      random_q(rng),
      random_q(rng),
      random_q(rng),
      (rng() % 2 == 0) ? 2.0 : 1.5,
      seed,
      {},
  };
  cfg.params.emplace_back("family", family_name);
  cfg.params.emplace_back("n", std::to_string(n));
  return cfg;
}

namespace {

struct McComplex {
  Cx mean{0.0, 0.0};
  double se = 0.0;
};

McComplex mc_mean(std::span<const Cx> values) {
  McComplex m;
  const double n = double(values.size());
  for (const Cx& v : values) m.mean += v;
  m.mean /= n;
  double var = 0.0;
  for (const Cx& v : values) var += std::norm(v - m.mean);
  m.se = std::sqrt(var / n / n);
  return m;
}

IdentityReport mc_report(const std::string& name, Cx closed, const McComplex& est) {
  IdentityReport r;
  r.name = name;
  r.mc_mode = true;
  r.lhs = closed;
  r.rhs = est.mean;
  r.rhs_se = est.se;
  r.finalize();
  return r;
}

}  // namespace

std::vector<IdentityReport> mc_corroborate(const TheoremConfig& tc, const PathEnsemble& ens) {
  const std::size_t n = tc.F.arity();
  const std::size_t m = ens.n_paths();
  const OrthogonalSet rebased = tc.F.base_set().rebased(tc.h1);

  std::vector<std::vector<double>> args(n);
  for (std::size_t j = 0; j < n; ++j) args[j] = pwz_integral_all(rebased.member(j), ens);
  std::vector<double> zw = pwz_integral_all(tc.z * tc.h2.fn(), ens);

  CylinderFunctional var = variation_functional(tc.F, tc.h1, tc.h2, VariationDirection::w_zh(tc.z, tc.h1));
  const WeightFn kh1 = WeightFn::checked(tc.k.fn() * tc.h1.fn());
  CylinderFunctional transformed = gfft(tc.F, kh1, tc.q1, 2.0).functional;

  std::vector<Cx> v_plain(m), v_weighted(m), v_var(m), v_transform(m);
  std::vector<double> u(n);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t j = 0; j < n; ++j) u[j] = args[j][p];
    const Cx f = tc.F.kernel().eval(std::span<const double>(u));
    v_plain[p] = f;
    v_weighted[p] = zw[p] * f;
    v_var[p] = var.kernel().eval(std::span<const double>(u));
    v_transform[p] = transformed.kernel().eval(std::span<const double>(u));
  }

  const FeynmanParams l1 = FeynmanParams::analytic({1.0, 0.0});
  std::vector<IdentityReport> out;
  out.push_back(mc_report("mc_wiener_l1", generalized_integral(tc.F, tc.h1, l1), mc_mean(v_plain)));
  out.push_back(mc_report("mc_weighted_l1",
                          linear_weighted_integral(tc.F, tc.h1, tc.h2, tc.z, l1), mc_mean(v_weighted)));
  out.push_back(
      mc_report("mc_variation_l1", generalized_integral(var, unit_for(var), l1), mc_mean(v_var)));
  out.push_back(
      mc_report("mc_transform_l1", generalized_integral(transformed, tc.h1, l1), mc_mean(v_transform)));
  return out;
}

std::vector<IdentityReport> run_suite(const SuiteConfig& cfg) {
  std::vector<IdentityReport> reports;

  auto push = [&](IdentityReport r, const TheoremConfig& tc, int index) {
    r.seed = tc.seed;
    r.name += "/" + std::to_string(index);
    for (const auto& kv : tc.params) r.params.push_back(kv);
    if (cfg.corrupt) r.params.emplace_back("corrupt", "1");
    reports.push_back(std::move(r));
  };

  for (int i = 0; i < cfg.configs_per_check; ++i) {
    const std::uint64_t seed = cfg.seed + std::uint64_t(i) * 1000003ULL;
    TheoremConfig tc = draw_config(seed);
    push(check_cameron_storvick(tc.F, tc.h1, tc.h2, tc.z, tc.q1, cfg.corrupt), tc, i);
    push(check_parts_feynman(tc.F, tc.G, tc.h1, tc.h2, tc.z, tc.q1, cfg.corrupt), tc, i);
    push(check_parts_self(tc.F, tc.h1, tc.h2, tc.z, tc.q1, cfg.corrupt), tc, i);
    push(check_parts_transforms(tc.F, tc.G, tc.k, tc.k2, tc.h1, tc.h2, tc.z, tc.q1, tc.q2, tc.q3,
                                RhsWeightReading::Symmetric, cfg.corrupt),
         tc, i);
    push(check_parts_gfft_pair(tc.F, tc.G, tc.k, tc.h1, tc.h2, tc.z, tc.q1, tc.q2, tc.q3, cfg.corrupt),
         tc, i);
    push(check_parts_gfft_self(tc.F, tc.k, tc.h1, tc.h2, tc.z, tc.q1, tc.q3, cfg.corrupt), tc, i);
    push(check_parts_mixed(tc.F, tc.G, tc.k, tc.h1, tc.h2, tc.z, tc.q1, tc.q2, tc.p, cfg.corrupt), tc,
         i);
    push(check_parts_mixed_self(tc.F, tc.k, tc.h1, tc.h2, tc.z, tc.q1, tc.q2, tc.p, cfg.corrupt), tc,
         i);
    push(check_transform_variation(tc.F, tc.h1, tc.h2, tc.k, tc.z, tc.q1, tc.p, cfg.corrupt), tc, i);
  }

  if (cfg.mc_configs > 0) {
    for (int i = 0; i < cfg.mc_configs; ++i) {
      const std::uint64_t seed = cfg.seed + std::uint64_t(i) * 1000003ULL;
      TheoremConfig tc = draw_config(seed);
      PathEnsemble ens = sample_brownian(cfg.mc_grid, cfg.mc_paths, seed ^ 0xABCDEF12345ULL);
      for (auto& r : mc_corroborate(tc, ens)) push(std::move(r), tc, i);
    }
  }
  return reports;
}

}  // namespace gfi
