#pragma once

#include "gfi/cylinder.hpp"

namespace gfi {

/// Integration parameter: either an analytic λ with Re(λ) > 0 or the
/// Feynman limit λ = −iq for a nonzero real q.
class FeynmanParams {
 public:
  static FeynmanParams analytic(Cx lambda);
  static FeynmanParams feynman(double q);

  bool q_mode() const { return q_mode_; }
  double q() const { return q_; }
  Cx effective_lambda() const { return q_mode_ ? Cx{0.0, -q_} : lambda_; }

 private:
  FeynmanParams() = default;
  bool q_mode_ = false;
  double q_ = 0.0;
  Cx lambda_{1.0, 0.0};
};

/// Variances σ_j² = ‖α_j h‖₂² of the rebased PWZ arguments.
struct ScaleVector {
  std::vector<double> sigma_sq;
  static ScaleVector for_set(const OrthogonalSet& A);
  static ScaleVector for_set(const OrthogonalSet& A, const WeightFn& h);
};

/// ∏_j (λ/(2πσ_j²))^{1/2} ∫ f(u) exp{−(λ/2)Σ u_j²/σ_j²} du with per-axis
/// principal square roots; the analytic core shared by every integral here.
Cx weighted_gauss_integral(const GaussPolyFn& f, std::span<const double> sigma_sq, Cx lambda);

/// Wiener Integration Theorem reduction: ∫ f(ρ⟨g₁,x⟩,…) dm as the scaled
/// n-dimensional Gaussian integral over the orthogonal set of F.
Cx gaussian_reduction(const CylinderFunctional& F, double rho);

/// J*(h;λ) for Re(λ) > 0; validates h ∈ O_Supp∞(A).
Cx analytic_wiener_integral(const CylinderFunctional& F, const WeightFn& h, Cx lambda);

/// Generalized analytic Feynman integral at λ = −iq (closed form).
Cx feynman_integral(const CylinderFunctional& F, const WeightFn& h, double q);

/// ∫^{anf_q} ⟨z, Z_{h₂}(x,·)⟩ F(Z_{h₁}(x,·)) dm. The component of z·h₂
/// orthogonal to span(A·h₁) integrates to zero (independent, mean zero);
/// the rest augments the kernel with a linear polynomial factor.
Cx feynman_linear_weighted(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                           const L2Fn& z, double q);

/// Same weighted integral at a general parameter (used for real-λ MC checks).
Cx linear_weighted_integral(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                            const L2Fn& z, const FeynmanParams& params);

/// Generalized integral at arbitrary params (λ mode or q mode).
Cx generalized_integral(const CylinderFunctional& F, const WeightFn& h, const FeynmanParams& params);

/// ε-approach diagnostic: Richardson extrapolation of λ = ε − iq along the
/// given ε ladder (descending), compared against the λ → −iq closed form.
Cx feynman_eps_richardson(const CylinderFunctional& F, const WeightFn& h, double q,
                          std::span<const double> eps);

}  // namespace gfi
