#include "gfi/feynman.hpp"

#include <cmath>
#include <numbers>

namespace gfi {

FeynmanParams FeynmanParams::analytic(Cx lambda) {
  if (!(lambda.real() > 0.0)) throw Error("analytic mode requires Re(lambda) > 0");
  FeynmanParams p;
  p.q_mode_ = false;
  p.lambda_ = lambda;
  return p;
}

FeynmanParams FeynmanParams::feynman(double q) {
  if (q == 0.0) throw Error("Feynman mode requires q != 0");
  FeynmanParams p;
  p.q_mode_ = true;
  p.q_ = q;
  return p;
}

ScaleVector ScaleVector::for_set(const OrthogonalSet& A) {
  ScaleVector s;
  s.sigma_sq.resize(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) {
    double n = norm(A.member(j));
    if (!(n > 0.0)) throw Error("zero norm in orthogonal set");
    s.sigma_sq[j] = n * n;
  }
  return s;
}

ScaleVector ScaleVector::for_set(const OrthogonalSet& A, const WeightFn& h) {
  return for_set(A.rebased(h));
}

Cx weighted_gauss_integral(const GaussPolyFn& f, std::span<const double> sigma_sq, Cx lambda) {
  if (f.arity() != sigma_sq.size()) throw Error("scale vector arity mismatch");
  Cx prefactor{1.0, 0.0};
  for (double s2 : sigma_sq) prefactor *= principal_sqrt(lambda / (2.0 * std::numbers::pi * s2));
  Cx acc{0.0, 0.0};
  for (const auto& t : f.terms()) {
    Cx v = t.coeff;
    for (std::size_t j = 0; j < f.arity(); ++j) {
      const auto& ax = t.axes[j];
      v *= gauss_integral(ax.poly, ax.rate + lambda / (2.0 * sigma_sq[j]), ax.shift);
    }
    acc += v;
  }
  return prefactor * acc;
}

namespace {

void require_exact_decaying(const CylinderFunctional& F) {
  if (!F.exact()) throw Error("closed-form integration needs an exact kernel");
  if (!F.kernel().has_gaussian_decay())
    throw Error("kernel lacks Gaussian decay on some axis; not integrable at lambda = -iq");
}

ScaleVector rebased_scales(const CylinderFunctional& F, const WeightFn& h) {
  // rebasing validates h ∈ O_Supp∞(A) and yields the norms in one pass
  return ScaleVector::for_set(F.base_set().rebased(h));
}

}  // namespace

Cx gaussian_reduction(const CylinderFunctional& F, double rho) {
  if (!(rho > 0.0)) throw Error("rho must be positive");
  require_exact_decaying(F);
  ScaleVector s = ScaleVector::for_set(F.base_set());
  return weighted_gauss_integral(F.kernel(), s.sigma_sq, Cx{1.0 / (rho * rho), 0.0});
}

Cx generalized_integral(const CylinderFunctional& F, const WeightFn& h, const FeynmanParams& params) {
  require_exact_decaying(F);
  ScaleVector s = rebased_scales(F, h);
  return weighted_gauss_integral(F.kernel(), s.sigma_sq, params.effective_lambda());
}

Cx analytic_wiener_integral(const CylinderFunctional& F, const WeightFn& h, Cx lambda) {
  return generalized_integral(F, h, FeynmanParams::analytic(lambda));
}

Cx feynman_integral(const CylinderFunctional& F, const WeightFn& h, double q) {
  return generalized_integral(F, h, FeynmanParams::feynman(q));
}

Cx linear_weighted_integral(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                            const L2Fn& z, const FeynmanParams& params) {
  require_exact_decaying(F);
  const OrthogonalSet rebased = F.base_set().rebased(h1);
  ScaleVector s = ScaleVector::for_set(rebased);
  const L2Fn zh2 = z * h2.fn();
  GaussPolyFn linear(F.arity());
  for (std::size_t j = 0; j < F.arity(); ++j) {
    double cj = inner_product(zh2, rebased.member(j));
    if (cj == 0.0) continue;
    linear = linear + GaussPolyFn::coordinate(j, F.arity()).scaled({cj / s.sigma_sq[j], 0.0});
  }
  if (linear.empty()) return {0.0, 0.0};
  return weighted_gauss_integral(linear * F.kernel(), s.sigma_sq, params.effective_lambda());
}

Cx feynman_linear_weighted(const CylinderFunctional& F, const WeightFn& h1, const WeightFn& h2,
                           const L2Fn& z, double q) {
  return linear_weighted_integral(F, h1, h2, z, FeynmanParams::feynman(q));
}

Cx feynman_eps_richardson(const CylinderFunctional& F, const WeightFn& h, double q,
                          std::span<const double> eps) {
  if (eps.size() < 2) throw Error("Richardson ladder needs at least 2 epsilon values");
  std::vector<Cx> row(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || (i > 0 && !(eps[i] < eps[i - 1])))
      throw Error("epsilon ladder must be positive and strictly decreasing");
    row[i] = analytic_wiener_integral(F, h, Cx{eps[i], -q});
  }
  // Neville polynomial extrapolation to eps = 0
  for (std::size_t j = 1; j < eps.size(); ++j) {
    for (std::size_t i = eps.size(); i-- > j;) {
      row[i] = (eps[i - j] * row[i] - eps[i] * row[i - 1]) / (eps[i - j] - eps[i]);
    }
  }
  return row.back();
}

}  // namespace gfi
