#include "gfi/cylinder.hpp"

namespace gfi {

CylinderFunctional::CylinderFunctional(OrthogonalSet A, GaussPolyFn kernel, int smoothness)
    : set_(std::move(A)), kernel_(std::move(kernel)), smoothness_(smoothness) {
  if (kernel_->arity() != set_.size()) throw Error("kernel arity does not match |A|");
}

CylinderFunctional::CylinderFunctional(OrthogonalSet A, GridKernel kernel)
    : set_(std::move(A)), grid_kernel_(std::move(kernel)), smoothness_(0) {
  if (!grid_kernel_) throw Error("null grid kernel");
}

const GaussPolyFn& CylinderFunctional::kernel() const {
  if (!kernel_) throw Error("MC-only kernel has no exact representation");
  return *kernel_;
}

std::vector<double> CylinderFunctional::arguments(PathView x) const {
  std::vector<double> u(set_.size());
  for (std::size_t j = 0; j < set_.size(); ++j) u[j] = pwz_integral(set_.member(j), x);
  return u;
}

std::vector<double> CylinderFunctional::arguments_on_process(const WeightFn& h, PathView x) const {
  std::vector<double> u(set_.size());
  for (std::size_t j = 0; j < set_.size(); ++j) u[j] = pwz_integral(set_.member(j) * h.fn(), x);
  return u;
}

Cx CylinderFunctional::eval_args(std::span<const double> u) const {
  if (u.size() != set_.size()) throw Error("argument arity mismatch");
  if (kernel_) return kernel_->eval(u);
  return grid_kernel_(u);
}

Cx CylinderFunctional::eval(PathView x) const { return eval_args(arguments(x)); }

Cx CylinderFunctional::eval_on_process(const WeightFn& h, PathView x, double rho) const {
  std::vector<double> u = arguments_on_process(h, x);
  for (auto& v : u) v *= rho;
  return eval_args(u);
}

CylinderFunctional CylinderFunctional::rebased(const WeightFn& h) const {
  if (!kernel_) {
    GridKernel gk = grid_kernel_;
    return CylinderFunctional(set_.rebased(h), std::move(gk));
  }
  return CylinderFunctional(set_.rebased(h), *kernel_, smoothness_);
}

CylinderFunctional CylinderFunctional::with_kernel(GaussPolyFn k, int smoothness) const {
  return CylinderFunctional(set_, std::move(k), smoothness);
}

VariationDirection VariationDirection::w_z(L2Fn z) {
  L2Fn dw = z;
  return VariationDirection(std::move(z), std::move(dw));
}

VariationDirection VariationDirection::w_zh(L2Fn z, const WeightFn& h1) {
  L2Fn dw = z * h1.fn();
  return VariationDirection(std::move(z), std::move(dw));
}

std::vector<double> variation_coefficients(const CylinderFunctional& F, const WeightFn& h2,
                                           const VariationDirection& dir) {
  std::vector<double> c(F.arity());
  for (std::size_t j = 0; j < F.arity(); ++j)
    c[j] = inner_product(F.base_set().member(j) * h2.fn(), dir.w_derivative());
  return c;
}

namespace {

GaussPolyFn variation_kernel(const CylinderFunctional& F, const std::vector<double>& coeffs) {
  if (!F.exact()) throw Error("first variation needs an exact kernel");
  if (F.smoothness() < 1) throw Error("first variation needs smoothness order m >= 1");
  GaussPolyFn acc(F.arity());
  for (std::size_t j = 0; j < F.arity(); ++j) {
    if (coeffs[j] == 0.0) continue;
    acc = acc + F.kernel().derivative(j).scaled({coeffs[j], 0.0});
  }
  return acc;
}

int drop_smoothness(int m) { return m == kSmoothnessUnlimited ? m : m - 1; }

}  // namespace

Cx first_variation(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                   const VariationDirection& dir, PathView x) {
  const std::vector<double> coeffs = variation_coefficients(F, h2, dir);
  GaussPolyFn dk = variation_kernel(F, coeffs);
  std::vector<double> u = F.arguments_on_process(h1, x);
  return dk.eval(u);
}

CylinderFunctional variation_functional(const CylinderFunctional& F, const WeightFn& h1,
                                        const WeightFn& h2, const VariationDirection& dir) {
  const std::vector<double> coeffs = variation_coefficients(F, h2, dir);
  GaussPolyFn dk = variation_kernel(F, coeffs);
  return CylinderFunctional(F.base_set().rebased(h1), std::move(dk), drop_smoothness(F.smoothness()));
}

CylinderFunctional product(const CylinderFunctional& F, const CylinderFunctional& G) {
  if (!F.base_set().same_set(G.base_set())) throw Error("product requires a shared base set");
  if (!F.exact() || !G.exact()) throw Error("product needs exact kernels");
  return CylinderFunctional(F.base_set(), F.kernel() * G.kernel(),
                            std::min(F.smoothness(), G.smoothness()));
}

}  // namespace gfi
