#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gfi/gfft.hpp"

namespace gfi {

/// Outcome of one two-sided identity evaluation. Exact mode compares at a
/// relative tolerance; MC mode compares against combined standard errors.
struct IdentityReport {
  std::string name;
  Cx lhs{0.0, 0.0};
  Cx rhs{0.0, 0.0};
  double lhs_se = 0.0;  // 0 in exact mode
  double rhs_se = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;  // abs_gap / (1 + max(|lhs|,|rhs|))
  double tol = 0.0;
  bool mc_mode = false;
  bool pass = false;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;

  void finalize();  // fills gaps and the pass flag
};

/// Which weight the RHS of the two-transform corollary carries for G: the
/// printed text uses k₁ (mismatched with the LHS), the symmetric reading k₂.
enum class RhsWeightReading { AsPrinted, Symmetric };

inline constexpr double kExactTol = 1e-10;
inline constexpr double kKernelCoeffTol = 1e-12;

/// Generalized Cameron–Storvick: ∫^{anf_q} δF(Z_{h₁}|Z_{h₂}(w_{zh₁})) dm
/// against −iq ∫^{anf_q} ⟨z,Z_{h₂}⟩ F(Z_{h₁}) dm.
IdentityReport check_cameron_storvick(const CylinderFunctional& F, const WeightFn& h1,
                                      const WeightFn& h2, const L2Fn& z, double q,
                                      bool corrupt = false);

/// Parts formula: ∫^{anf_q}[FδG + δF·G](Z_{h₁}) dm = −iq ∫^{anf_q}⟨z,Z_{h₂}⟩FG dm.
IdentityReport check_parts_feynman(const CylinderFunctional& F, const CylinderFunctional& G,
                                   const WeightFn& h1, const WeightFn& h2, const L2Fn& z, double q,
                                   bool corrupt = false);

/// F = G self case: ∫^{anf_q} F δF dm = −(iq/2) ∫^{anf_q} ⟨z,Z_{h₂}⟩ F² dm.
IdentityReport check_parts_self(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                                const L2Fn& z, double q, bool corrupt = false);

/// Parts formula for a pair of transforms T^{(2)}_{q₁,k₁}(F), T^{(2)}_{q₂,k₂}(G).
IdentityReport check_parts_transforms(const CylinderFunctional& F, const CylinderFunctional& G,
                                      const WeightFn& k1, const WeightFn& k2, const WeightFn& h1,
                                      const WeightFn& h2, const L2Fn& z, double q1, double q2,
                                      double q3, RhsWeightReading reading, bool corrupt = false);

/// Parts formula for T^{(2)}_{q₁,kh₁}(F), T^{(2)}_{q₂,kh₁}(G) at parameter q₃.
IdentityReport check_parts_gfft_pair(const CylinderFunctional& F, const CylinderFunctional& G,
                                     const WeightFn& k, const WeightFn& h1, const WeightFn& h2,
                                     const L2Fn& z, double q1, double q2, double q3,
                                     bool corrupt = false);

/// F = G case of the transform-pair formula (−iq₃/2 against the square).
IdentityReport check_parts_gfft_self(const CylinderFunctional& F, const WeightFn& k,
                                     const WeightFn& h1, const WeightFn& h2, const L2Fn& z, double q1,
                                     double q3, bool corrupt = false);

/// Mixed parts formula: F untransformed against T^{(p)}_{q₁,kh₁}(G).
IdentityReport check_parts_mixed(const CylinderFunctional& F, const CylinderFunctional& G,
                                 const WeightFn& k, const WeightFn& h1, const WeightFn& h2,
                                 const L2Fn& z, double q1, double q2, double p, bool corrupt = false);

/// F = G case of the mixed formula.
IdentityReport check_parts_mixed_self(const CylinderFunctional& F, const WeightFn& k,
                                      const WeightFn& h1, const WeightFn& h2, const L2Fn& z,
                                      double q1, double q2, double p, bool corrupt = false);

/// Transform/variation commutation: kernel-coefficient comparison of
/// T_{q,k}(δ_{h₁,h₂}F(·|w_z)) against δ_{h₁,h₂}T_{q,kh₁}(F)(·|w_z).
IdentityReport check_transform_variation(const CylinderFunctional& F, const WeightFn& h1,
                                         const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                         double q, double p, bool corrupt = false);

/// One randomized configuration drawn from the fixed function library.
struct TheoremConfig {
  CylinderFunctional F;
  CylinderFunctional G;
  WeightFn h1, h2, k, k2;
  L2Fn z;
  double q1, q2, q3, p;
  std::uint64_t seed;
  std::vector<std::pair<std::string, std::string>> params;
};

TheoremConfig draw_config(std::uint64_t seed);

/// Real-λ (λ = 1) corroboration of the closed forms behind a configuration:
/// the generalized Wiener integral, the linearly weighted integral, the
/// variation functional, and a transformed kernel, each compared against a
/// Monte Carlo estimate over the ensemble at 3 standard errors.
std::vector<IdentityReport> mc_corroborate(const TheoremConfig& tc, const PathEnsemble& ens);

struct SuiteConfig {
  std::uint64_t seed = 20250809;
  int configs_per_check = 25;
  bool corrupt = false;
  double tol = kExactTol;
  // optional MC corroboration of the closed forms at λ = 1
  int mc_configs = 0;
  std::size_t mc_paths = 20000;
  std::size_t mc_grid = 256;
};

std::vector<IdentityReport> run_suite(const SuiteConfig& cfg);

}  // namespace gfi
