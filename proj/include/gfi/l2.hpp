#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gfi/poly.hpp"

namespace gfi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default uniform grid resolution for sampled functions and quadrature.
inline constexpr std::size_t kDefaultGridN = 1024;

/// Pairwise orthogonality tolerances (relative to the norm product).
inline constexpr double kOrthoTolExact = 1e-12;
inline constexpr double kOrthoTolGrid = 1e-8;

/// One polynomial piece of an exact-form function, active on [lo, hi).
struct Piece {
  RPoly poly;
  double lo = 0.0;
  double hi = 0.0;
};

/// An element of L2[0,T]. Exact form: a finite list of disjoint polynomial
/// pieces (the function is zero off their union). Grid form: N+1 uniform
/// samples with linear interpolation between nodes.
///
/// Exact-form inner products and norms are computed symbolically; anything
/// involving a grid form falls back to trapezoid quadrature on the grid.
class L2Fn {
 public:
  static L2Fn from_pieces(double domain_end, std::vector<Piece> pieces, std::string label = "");
  static L2Fn from_grid(double domain_end, std::vector<double> samples, std::string label = "");
  static L2Fn constant(double c, double domain_end = 1.0);
  static L2Fn polynomial(RPoly p, double domain_end = 1.0, std::string label = "");
  static L2Fn indicator(double a, double b, double domain_end = 1.0);
  /// Legendre polynomial of degree k shifted to [0, domain_end]; the family
  /// {shifted_legendre(0), ..., shifted_legendre(k)} is exactly orthogonal.
  static L2Fn shifted_legendre(int k, double domain_end = 1.0);
  /// From a callable, sampled on the default grid.
  static L2Fn sampled(double domain_end, std::size_t n, const std::function<double(double)>& fn,
                      std::string label = "");

  bool exact() const { return exact_; }
  double domain_end() const { return domain_end_; }
  const std::string& label() const { return label_; }
  L2Fn with_label(std::string label) const;

  double operator()(double t) const;

  L2Fn operator*(const L2Fn& o) const;
  L2Fn operator+(const L2Fn& o) const;
  L2Fn operator-(const L2Fn& o) const;
  L2Fn scaled(double s) const;

  /// Values at n+1 uniform grid nodes including both endpoints.
  std::vector<double> sample(std::size_t n) const;

  /// ∫₀ᵗ f(u) du, exact for exact forms.
  double integral_prefix(double t) const;

  /// Lebesgue measure of {t : |f(t)| ≤ zero_tol}. Exact forms: pieces that
  /// are identically zero plus uncovered gaps (isolated roots carry no
  /// measure). Grid forms: node-count fraction times the domain length.
  double zero_set_measure(double zero_tol) const;

  /// Largest |f| over the representation (exact: coefficient-based bound).
  double sup_bound() const;

  const std::vector<Piece>& pieces() const;
  const std::vector<double>& samples() const;

 private:
  L2Fn() = default;

  bool exact_ = true;
  double domain_end_ = 1.0;
  std::vector<Piece> pieces_;    // exact form, sorted, disjoint
  std::vector<double> samples_;  // grid form
  std::string label_;

  friend double inner_product(const L2Fn&, const L2Fn&);
};

/// (u,v)₂ = ∫₀ᵀ u v dt. Exact when both operands are exact-form.
double inner_product(const L2Fn& u, const L2Fn& v);
double norm(const L2Fn& v);

/// Membership test for Supp∞[0,T]: bounded and nonzero off a null set.
bool is_supp_inf(const L2Fn& h, double zero_tol);
bool is_supp_inf(const L2Fn& h);  // zero_tol = 1e-12·max|h|

bool is_orthogonal_set(std::span<const L2Fn> members, double tau);

/// A weight validated to lie in Supp∞[0,T].
class WeightFn {
 public:
  static WeightFn checked(L2Fn h);
  static WeightFn checked(L2Fn h, double zero_tol);
  /// h ≡ 1 on [0, domain_end].
  static WeightFn unit(double domain_end = 1.0);

  const L2Fn& fn() const { return h_; }
  const std::string& label() const { return h_.label(); }
  WeightFn negated() const;

 private:
  explicit WeightFn(L2Fn h) : h_(std::move(h)) {}
  L2Fn h_;
};

/// An orthogonal set {α₁,...,α_n} of nonzero functions; the constructor
/// validates pairwise orthogonality against the tolerance.
class OrthogonalSet {
 public:
  OrthogonalSet(std::vector<L2Fn> members, double tol);
  explicit OrthogonalSet(std::vector<L2Fn> members);  // tolerance from form

  std::size_t size() const { return members_->size(); }
  const L2Fn& member(std::size_t j) const { return (*members_)[j]; }
  std::span<const L2Fn> members() const { return *members_; }
  double tolerance() const { return tol_; }

  /// The set {α₁h,...,α_nh}; throws if it fails the orthogonality test.
  OrthogonalSet rebased(const WeightFn& h) const;

  bool same_set(const OrthogonalSet& o, double tol = 1e-10) const;

 private:
  std::shared_ptr<const std::vector<L2Fn>> members_;
  double tol_ = kOrthoTolExact;
};

/// First candidate h whose rebasing keeps A orthogonal (membership in
/// O_Supp∞(A)). The P_Supp∞ sufficient condition (α_iα_j, h²)₂ = 0 is tried
/// first; throws when no candidate is accepted.
WeightFn compatible_weight(const OrthogonalSet& A, std::span<const WeightFn> candidates);

}  // namespace gfi
