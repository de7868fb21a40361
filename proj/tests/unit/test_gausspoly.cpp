#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "gfi/gausspoly.hpp"
#include "gfi/l2.hpp"

using namespace gfi;

namespace {

// test-side oracle: composite Simpson over a truncated real line
Cx simpson_line(const std::function<Cx(double)>& f, double lo, double hi, int n) {
  if (n % 2 != 0) ++n;
  const double h = (hi - lo) / n;
  Cx acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) acc += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

Cx quad_gauss_integral(const CPoly& p, Cx a, Cx b) {
  const double spread = 11.5 / std::sqrt(a.real());
  const double center = (b / (2.0 * a)).real();
  return simpson_line(
      [&](double x) { return p.eval(Cx{x, 0.0}) * std::exp(-a * x * x + b * x); },
      center - spread, center + spread, 100000);
}

std::mt19937_64 g_rng(42);

double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_rng); }

CPoly random_cpoly(int max_deg) {
  std::vector<Cx> c(1 + g_rng() % (max_deg + 1));
  for (auto& x : c) x = Cx{uni(-1, 1), uni(-1, 1)};
  if (c.back() == Cx{0.0, 0.0}) c.back() = {1.0, 0.0};
  return CPoly(std::move(c));
}

AxisFactor random_axis(int max_deg = 3) {
  AxisFactor ax;
  ax.poly = random_cpoly(max_deg);
  ax.rate = {uni(0.3, 2.0), uni(-0.8, 0.8)};
  ax.shift = {uni(-1.0, 1.0), uni(-1.0, 1.0)};
  return ax;
}

GaussPolyFn random_fn(std::size_t arity, int n_terms = 2) {
  GaussPolyFn acc(arity);
  for (int t = 0; t < n_terms; ++t) {
    std::vector<AxisFactor> axes;
    for (std::size_t j = 0; j < arity; ++j) axes.push_back(random_axis());
    acc = acc + GaussPolyFn::term(Cx{uni(-1, 1), uni(-1, 1)} + Cx{0.4, 0.0}, std::move(axes));
  }
  return acc;
}

}  // namespace

TEST_CASE("principal square root") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(principal_sqrt({0.0, 1.0}) - Cx{inv_sqrt2, inv_sqrt2}) < 1e-15);
  CHECK(std::abs(principal_sqrt({0.0, -1.0}) - Cx{inv_sqrt2, -inv_sqrt2}) < 1e-15);
  for (int i = 0; i < 50; ++i) {
    Cx z{uni(-3, 3), uni(-3, 3)};
    if (std::abs(z) < 1e-3) continue;
    Cx r = principal_sqrt(z);
    CHECK(r.real() >= 0.0);
    CHECK(std::abs(r * r - z) < 1e-13 * (1.0 + std::abs(z)));
  }
}

TEST_CASE("gauss_integral closed values") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(std::abs(gauss_integral(CPoly::constant({1.0, 0.0}), {1.0, 0.0}, {0.0, 0.0}) -
                 Cx{sqrt_pi, 0.0}) < 1e-14);
  // second moment of exp(-x^2): sqrt(pi)/2
  CHECK(std::abs(gauss_integral(CPoly({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}), {1.0, 0.0},
                                {0.0, 0.0}) -
                 Cx{sqrt_pi / 2.0, 0.0}) < 1e-14);
  // odd moments vanish
  CHECK(std::abs(gauss_integral(CPoly({{0.0, 0.0}, {1.0, 0.0}}), {1.0, 0.0}, {0.0, 0.0})) < 1e-16);
  CHECK_THROWS_AS((void)gauss_integral(CPoly::constant({1.0, 0.0}), {0.0, 1.0}, {0.0, 0.0}), Error);
}

TEST_CASE("gauss_integral against quadrature, degrees through 8") {
  for (int i = 0; i < 20; ++i) {
    CPoly p = random_cpoly(i < 10 ? 4 : 8);
    Cx a{uni(0.3, 2.0), uni(-1.0, 1.0)};
    Cx b{uni(-1.0, 1.0), uni(-1.0, 1.0)};
    Cx impl = gauss_integral(p, a, b);
    Cx quad = quad_gauss_integral(p, a, b);
    CHECK(std::abs(impl - quad) < 1e-7 * (1.0 + std::abs(impl)));
  }
}

TEST_CASE("product, derivative, shift agree with pointwise oracles") {
  for (int rep = 0; rep < 10; ++rep) {
    GaussPolyFn f = random_fn(2);
    GaussPolyFn g = random_fn(2);
    GaussPolyFn fg = f * g;
    GaussPolyFn df = f.derivative(0);
    std::vector<Cx> s{{uni(-1, 1), uni(-0.3, 0.3)}, {uni(-1, 1), uni(-0.3, 0.3)}};
    GaussPolyFn fs = f.shifted(s);
    for (int pt = 0; pt < 10; ++pt) {
      std::vector<Cx> u{{uni(-2, 2), 0.0}, {uni(-2, 2), 0.0}};
      CHECK(std::abs(fg.eval(u) - f.eval(u) * g.eval(u)) < 1e-12 * (1.0 + std::abs(f.eval(u) * g.eval(u))));

      const double step = 1e-5;
      std::vector<Cx> up = u, um = u;
      up[0] += step;
      um[0] -= step;
      Cx fd = (f.eval(up) - f.eval(um)) / (2.0 * step);
      CHECK(std::abs(df.eval(u) - fd) < 1e-7 * (1.0 + std::abs(fd)));

      std::vector<Cx> us{u[0] + s[0], u[1] + s[1]};
      CHECK(std::abs(fs.eval(u) - f.eval(us)) < 1e-12 * (1.0 + std::abs(f.eval(us))));
    }
  }
}

TEST_CASE("decay bookkeeping") {
  CHECK(random_fn(2).has_gaussian_decay());
  CHECK(GaussPolyFn(2).has_gaussian_decay());  // zero function
  CHECK_FALSE(GaussPolyFn::constant({1.0, 0.0}, 2).has_gaussian_decay());
  CHECK_FALSE(GaussPolyFn::coordinate(0, 2).has_gaussian_decay());
  // a single degenerate term poisons the sum
  GaussPolyFn mixed = random_fn(2) + GaussPolyFn::constant({0.5, 0.0}, 2);
  CHECK_FALSE(mixed.has_gaussian_decay());
  // degenerate factors are admitted for algebra and regain decay in products
  CHECK((GaussPolyFn::coordinate(0, 2) * random_fn(2)).has_gaussian_decay());

  std::vector<AxisFactor> bad{AxisFactor{CPoly::constant({1.0, 0.0}), {-0.1, 0.0}, {0.0, 0.0}}};
  CHECK_THROWS_AS((void)GaussPolyFn::term({1.0, 0.0}, std::move(bad)), Error);
}

TEST_CASE("convolve_axis matches quadrature and keeps decay") {
  for (int rep = 0; rep < 12; ++rep) {
    AxisFactor ax = random_axis();
    ax.rate = {uni(0.3, 2.0), uni(-0.5, 0.5)};
    const double q = (rep % 2 == 0 ? 1.0 : -1.0) * uni(0.5, 3.0);
    const double sigma_sq = uni(0.4, 2.0);
    const Cx gamma{0.0, q / (2.0 * sigma_sq)};
    AxisConv conv = convolve_axis(ax, gamma);
    CHECK(conv.factor.rate.real() > 0.0);
    for (double v : {-1.3, -0.2, 0.0, 0.8, 2.1}) {
      Cx impl = conv.scale * conv.factor.poly.eval(Cx{v, 0.0}) *
                std::exp(-conv.factor.rate * v * v + conv.factor.shift * v);
      const double spread = 11.5 / std::sqrt(ax.rate.real());
      Cx quad = simpson_line(
          [&](double x) {
            return ax.poly.eval(Cx{x, 0.0}) *
                   std::exp(-ax.rate * x * x + ax.shift * x + gamma * (x - v) * (x - v));
          },
          -spread - std::abs(v), spread + std::abs(v), 200000);
      CHECK(std::abs(impl - quad) < 1e-7 * (1.0 + std::abs(impl)));
    }
  }
}

TEST_CASE("axis-by-axis integration closes in the family") {
  // iterating integrate_axis over every axis reproduces the joint integral
  for (int rep = 0; rep < 8; ++rep) {
    GaussPolyFn f = random_fn(3);
    const Cx lambda{uni(0.2, 1.5), uni(-2.0, 2.0)};
    std::vector<double> sigma_sq{uni(0.4, 2.0), uni(0.4, 2.0), uni(0.4, 2.0)};
    Cx joint{0.0, 0.0};
    for (const auto& t : f.terms()) {
      Cx v = t.coeff;
      for (std::size_t j = 0; j < 3; ++j)
        v *= gauss_integral(t.axes[j].poly, t.axes[j].rate + lambda / (2.0 * sigma_sq[j]),
                            t.axes[j].shift);
      joint += v;
    }
    GaussPolyFn partial = integrate_axis(f, 1, lambda / (2.0 * sigma_sq[1]));
    CHECK(partial.arity() == 2);
    CHECK(partial.has_gaussian_decay());
    partial = integrate_axis(partial, 1, lambda / (2.0 * sigma_sq[2]));
    partial = integrate_axis(partial, 0, lambda / (2.0 * sigma_sq[0]));
    CHECK(partial.arity() == 0);
    Cx iterated = partial.eval(std::span<const double>{});
    CHECK(std::abs(iterated - joint) < 1e-12 * (1.0 + std::abs(joint)));
  }
  CHECK_THROWS_AS((void)integrate_axis(random_fn(2), 5, Cx{0.1, 0.0}), Error);
  // losing the combined decay is an error
  CHECK_THROWS_AS((void)integrate_axis(GaussPolyFn::coordinate(0, 1), 0, Cx{0.0, 1.0}), Error);
}

TEST_CASE("canonical comparison") {
  GaussPolyFn f = random_fn(2, 3);
  // reordering terms leaves the canonical form unchanged
  std::vector<GpTerm> rev(f.terms().rbegin(), f.terms().rend());
  GaussPolyFn g(2, std::move(rev));
  KernelDiff same = compare_kernels(f, g);
  CHECK(same.structurally_equal);
  CHECK(same.max_rel_gap < 1e-15);

  KernelDiff scaled = compare_kernels(f, f.scaled({1.0 + 1e-6, 0.0}));
  CHECK(scaled.max_rel_gap > 5e-7);
  CHECK(scaled.max_rel_gap < 2e-6);

  GaussPolyFn extra = f + GaussPolyFn::term({0.3, 0.0}, {random_axis(), random_axis()});
  CHECK_FALSE(compare_kernels(f, extra).structurally_equal);

  // adding an insignificant term is still equal
  GaussPolyFn eps = f + GaussPolyFn::term({1e-18, 0.0}, {random_axis(), random_axis()});
  CHECK(compare_kernels(f, eps).structurally_equal);
}
