#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "gfi/gausspoly.hpp"
#include "gfi/l2.hpp"
#include "gfi/paths.hpp"

namespace gfi {

/// Smoothness order marker for kernels that are C^∞ with all derivatives
/// integrable (every Gaussian-polynomial kernel).
inline constexpr int kSmoothnessUnlimited = std::numeric_limits<int>::max();

using GridKernel = std::function<Cx(std::span<const double>)>;

/// F(x) = f(⟨α₁,x⟩,…,⟨α_n,x⟩) over an orthogonal set A. Exact mode holds a
/// Gaussian-polynomial kernel (closed under variation and transforms);
/// MC-only mode holds an opaque evaluator and supports path evaluation only.
class CylinderFunctional {
 public:
  CylinderFunctional(OrthogonalSet A, GaussPolyFn kernel, int smoothness = kSmoothnessUnlimited);
  CylinderFunctional(OrthogonalSet A, GridKernel kernel);

  bool exact() const { return kernel_.has_value(); }
  int smoothness() const { return smoothness_; }
  std::size_t arity() const { return set_.size(); }
  const OrthogonalSet& base_set() const { return set_; }
  const GaussPolyFn& kernel() const;

  /// PWZ arguments ⟨α_j, x⟩ for a path.
  std::vector<double> arguments(PathView x) const;
  std::vector<double> arguments_on_process(const WeightFn& h, PathView x) const;

  Cx eval_args(std::span<const double> u) const;
  Cx eval(PathView x) const;
  /// F(ρ·Z_h(x,·)) = f(ρ⟨α₁h,x⟩,…); h need not keep A orthogonal.
  Cx eval_on_process(const WeightFn& h, PathView x, double rho = 1.0) const;

  /// The same functional expressed over A·h (requires A·h orthogonal).
  CylinderFunctional rebased(const WeightFn& h) const;

  CylinderFunctional with_kernel(GaussPolyFn k, int smoothness) const;

 private:
  OrthogonalSet set_;
  std::optional<GaussPolyFn> kernel_;
  GridKernel grid_kernel_;
  int smoothness_ = 0;
};

/// Direction data for the first variation: w(t) = ∫₀ᵗ z·g with g the path
/// weight (g ≡ 1 recovers w_z; g = h₁ recovers w_{zh₁}).
class VariationDirection {
 public:
  static VariationDirection w_z(L2Fn z);
  static VariationDirection w_zh(L2Fn z, const WeightFn& h1);

  const L2Fn& z() const { return z_; }
  /// Derivative of w, i.e. z·g ∈ L2[0,T].
  const L2Fn& w_derivative() const { return dw_; }
  double w(double t) const { return dw_.integral_prefix(t); }

 private:
  VariationDirection(L2Fn z, L2Fn dw) : z_(std::move(z)), dw_(std::move(dw)) {}
  L2Fn z_;
  L2Fn dw_;
};

/// Coefficients (α_j h₂, Dw)₂ of the first variation along Z_{h₂}(w,·).
std::vector<double> variation_coefficients(const CylinderFunctional& F, const WeightFn& h2,
                                           const VariationDirection& dir);

/// δ_{h₁,h₂}F(x|w) = Σ_j (α_j h₂, Dw)₂ · f_j(⟨α₁h₁,x⟩,…,⟨α_nh₁,x⟩).
Cx first_variation(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                   const VariationDirection& dir, PathView x);

/// The variation as a functional over A·h₁ with kernel Σ_j c_j f_j; the
/// smoothness order drops by one.
CylinderFunctional variation_functional(const CylinderFunctional& F, const WeightFn& h1,
                                        const WeightFn& h2, const VariationDirection& dir);

/// Pointwise product R = F·G over a shared base set; smoothness min(m_F, m_G).
CylinderFunctional product(const CylinderFunctional& F, const CylinderFunctional& G);

}  // namespace gfi
