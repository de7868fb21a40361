#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gfi {

/// Dense univariate polynomial with coefficients in ascending degree order.
/// Shared between the real piecewise-function layer (T = double) and the
/// complex kernel algebra (T = std::complex<double>).
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial identity() { return Polynomial(std::vector<T>{T{0}, T{1}}); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{0}; }

  template <typename U>
  auto eval(U t) const {
    using R = decltype(T{} * U{});
    R acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<double>(k));
    return Polynomial(std::move(d));
  }

  Polynomial antiderivative() const {
    if (coeffs_.empty()) return Polynomial{};
    std::vector<T> a(coeffs_.size() + 1, T{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / T(static_cast<double>(k + 1));
    return Polynomial(std::move(a));
  }

  /// Definite integral over [lo, hi].
  T integrate(double lo, double hi) const {
    const Polynomial a = antiderivative();
    return a.eval(hi) - a.eval(lo);
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> s(std::max(coeffs_.size(), o.coeffs_.size()), T{0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) s[k] += o.coeffs_[k];
    return Polynomial(std::move(s));
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (o * T(-1.0)); }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial{};
    std::vector<T> p(coeffs_.size() + o.coeffs_.size() - 1, T{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(p));
  }

  Polynomial operator*(T s) const {
    std::vector<T> p = coeffs_;
    for (auto& c : p) c *= s;
    return Polynomial(std::move(p));
  }

  /// p(a·t + b) as a polynomial in t.
  Polynomial compose_linear(T a, T b) const {
    Polynomial lin(std::vector<T>{b, a});
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + constant(coeffs_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{0}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RPoly = Polynomial<double>;
using CPoly = Polynomial<std::complex<double>>;

}  // namespace gfi
