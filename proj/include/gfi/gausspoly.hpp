#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "gfi/poly.hpp"

namespace gfi {

using Cx = std::complex<double>;

/// Principal square root, exp(½ Log z); the branch with positive real part.
Cx principal_sqrt(Cx z);

/// ∫_R P(x) exp(−A x² + B x) dx for Re(A) > 0, via the Gaussian moment
/// recursion M_k = μ M_{k−1} + (k−1) s² M_{k−2} with μ = B/(2A), s² = 1/(2A).
Cx gauss_integral(const CPoly& p, Cx rate, Cx shift);

/// One axis of a term: P(u) · exp(−rate·u² + shift·u).
struct AxisFactor {
  CPoly poly = CPoly::constant(Cx{1.0, 0.0});
  Cx rate{0.0, 0.0};
  Cx shift{0.0, 0.0};
};

struct GpTerm {
  Cx coeff{0.0, 0.0};
  std::vector<AxisFactor> axes;
};

/// Finite sum of terms c·∏_j P_j(u_j)·exp(−a_j u_j² + b_j u_j) on ℝⁿ.
/// Closed under products, partial derivatives, argument shifts, and
/// complex-Gaussian-weighted integration; rate-zero axes are admitted as
/// degenerate constants for algebra only (they carry no L_p membership).
class GaussPolyFn {
 public:
  explicit GaussPolyFn(std::size_t arity) : arity_(arity) {}
  GaussPolyFn(std::size_t arity, std::vector<GpTerm> terms);

  static GaussPolyFn constant(Cx c, std::size_t arity);
  /// The coordinate monomial u_axis (degenerate, decay-free).
  static GaussPolyFn coordinate(std::size_t axis, std::size_t arity);
  /// Single term c·∏ P_j e^{−a_j u² + b_j u}.
  static GaussPolyFn term(Cx coeff, std::vector<AxisFactor> axes);

  std::size_t arity() const { return arity_; }
  const std::vector<GpTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Cx eval(std::span<const double> u) const;
  Cx eval(std::span<const Cx> u) const;

  GaussPolyFn operator+(const GaussPolyFn& o) const;
  GaussPolyFn operator-(const GaussPolyFn& o) const;
  GaussPolyFn operator*(const GaussPolyFn& o) const;
  GaussPolyFn scaled(Cx s) const;

  GaussPolyFn derivative(std::size_t axis) const;
  /// u_j ↦ u_j + s_j for every axis.
  GaussPolyFn shifted(std::span<const Cx> s) const;

  /// True when every term decays on every axis (Re rate > 0), i.e. the
  /// function and all its derivatives lie in L_p(ℝⁿ) ∩ C₀(ℝⁿ).
  bool has_gaussian_decay() const;

  /// Largest coefficient magnitude after monomial expansion; scale for
  /// relative comparisons.
  double coefficient_scale() const;

 private:
  std::size_t arity_ = 0;
  std::vector<GpTerm> terms_;
};

/// Result of integrating one axis factor against exp(γ(u−v)²) over u;
/// the output is a function of the shift v: scale · Q(v) e^{−rate v² + shift v}.
struct AxisConv {
  AxisFactor factor;
  Cx scale;
};

/// ∫_R P(x) e^{−a x² + b x} e^{γ (x−v)²} dx as a function of v, for
/// Re(a − γ) > 0. The Gaussian rate of the result keeps a positive real
/// part whenever Re(a) > 0 and γ is purely imaginary.
AxisConv convolve_axis(const AxisFactor& axis, Cx gamma);

/// Integrates one axis against exp(−weight_rate·u²): the result is a kernel
/// of arity n−1 (a scalar constant when n = 1). Requires a positive combined
/// real rate on the integrated axis of every term.
GaussPolyFn integrate_axis(const GaussPolyFn& f, std::size_t axis, Cx weight_rate);

/// Canonical expansion: per exponential signature (rates and shifts on all
/// axes), the multivariate monomial coefficients.
struct CanonicalGroup {
  std::vector<std::pair<Cx, Cx>> signature;  // (rate, shift) per axis
  std::map<std::vector<int>, Cx> monomials;
};

std::vector<CanonicalGroup> canonicalize(const GaussPolyFn& f, double merge_tol = 1e-9);

struct KernelDiff {
  double max_rel_gap = 0.0;
  bool structurally_equal = true;
};

/// Termwise coefficient comparison of two kernels after canonicalization.
KernelDiff compare_kernels(const GaussPolyFn& a, const GaussPolyFn& b, double merge_tol = 1e-9);

}  // namespace gfi
