#include "gfi/gfft.hpp"

#include <numbers>

namespace gfi {

namespace {

GaussPolyFn convolved_kernel(const GaussPolyFn& f, std::span<const double> sigma_sq, double q) {
  Cx prefactor{1.0, 0.0};
  for (double s2 : sigma_sq)
    prefactor *= principal_sqrt(Cx{0.0, -q} / (2.0 * std::numbers::pi * s2));
  std::vector<GpTerm> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    GpTerm nt;
    nt.coeff = t.coeff * prefactor;
    nt.axes.resize(t.axes.size());
    for (std::size_t j = 0; j < t.axes.size(); ++j) {
      const Cx gamma = Cx{0.0, q / (2.0 * sigma_sq[j])};
      AxisConv conv = convolve_axis(t.axes[j], gamma);
      nt.axes[j] = std::move(conv.factor);
      nt.coeff *= conv.scale;
    }
    out.push_back(std::move(nt));
  }
  return GaussPolyFn(f.arity(), std::move(out));
}

}  // namespace

TransformResult gfft(const CylinderFunctional& F, const WeightFn& k, double q, double p) {
  if (q == 0.0) throw Error("GFFT requires q != 0");
  if (!(p >= 1.0 && p <= 2.0)) throw Error("GFFT requires p in [1,2]");
  if (!F.exact()) throw Error("GFFT needs an exact kernel");
  if (!F.kernel().has_gaussian_decay())
    throw Error("kernel lacks Gaussian decay on some axis; GFFT undefined on the exact family");
  // fail fast on incompatible weights: rebasing validates A·k orthogonality
  ScaleVector s = ScaleVector::for_set(F.base_set().rebased(k));
  GaussPolyFn kernel = convolved_kernel(F.kernel(), s.sigma_sq, q);
  return TransformResult{CylinderFunctional(F.base_set(), std::move(kernel), F.smoothness()), q, p,
                         k.label()};
}

CylinderFunctional transform_of_variation(const CylinderFunctional& F, const WeightFn& h1,
                                          const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                          double q, double p) {
  CylinderFunctional var = variation_functional(F, h1, h2, VariationDirection::w_z(z));
  return gfft(var, k, q, p).functional;
}

CylinderFunctional variation_of_transform(const CylinderFunctional& F, const WeightFn& h1,
                                          const WeightFn& h2, const WeightFn& k, const L2Fn& z,
                                          double q, double p) {
  if (!F.exact()) throw Error("variation_of_transform needs an exact kernel");
  bool derivative_free = true;
  for (std::size_t j = 0; j < F.arity() && derivative_free; ++j)
    derivative_free = F.kernel().derivative(j).empty();
  if (derivative_free) {
    // constant kernels: the variation vanishes before or after transforming
    return CylinderFunctional(F.base_set().rebased(h1), GaussPolyFn(F.arity()));
  }
  const WeightFn kh1 = WeightFn::checked(k.fn() * h1.fn());
  CylinderFunctional transformed = gfft(F, kh1, q, p).functional;
  return variation_functional(transformed, h1, h2, VariationDirection::w_z(z));
}

}  // namespace gfi
