#pragma once

#include "gfi/feynman.hpp"

namespace gfi {

/// The L_p analytic GFFT of a cylinder functional: a functional over the
/// same base set whose kernel is the complex-Gaussian convolution of the
/// input kernel. p is provenance only; the limiting closed form is shared
/// across p ∈ [1,2].
struct TransformResult {
  CylinderFunctional functional;
  double q;
  double p;
  std::string weight_label;
};

TransformResult gfft(const CylinderFunctional& F, const WeightFn& k, double q, double p);

/// T_{q,k}(δ_{h₁,h₂}F(·|w_z)): variation first (over A·h₁), transform second.
CylinderFunctional transform_of_variation(const CylinderFunctional& F, const WeightFn& h1,
                                          const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                          double q, double p);

/// δ_{h₁,h₂}T_{q,kh₁}(F)(y|w_z): transform first (weight k·h₁), variation
/// second. Equal to transform_of_variation as a kernel identity.
CylinderFunctional variation_of_transform(const CylinderFunctional& F, const WeightFn& h1,
                                          const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                          double q, double p);

}  // namespace gfi
