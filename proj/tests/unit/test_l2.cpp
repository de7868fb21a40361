#include <doctest.h>

#include <cmath>
#include <random>

#include "gfi/l2.hpp"

using namespace gfi;

namespace {

RPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(1 + rng() % (max_deg + 1));
  for (auto& x : c) x = u(rng);
  if (c.back() == 0.0) c.back() = 1.0;
  return RPoly(std::move(c));
}

}  // namespace

TEST_CASE("inner products on exact forms") {
  const L2Fn one = L2Fn::constant(1.0);
  CHECK(inner_product(one, one) == doctest::Approx(1.0).epsilon(1e-15));

  const L2Fn left = L2Fn::indicator(0.0, 0.5);
  const L2Fn right = L2Fn::indicator(0.5, 1.0);
  CHECK(inner_product(left, right) == 0.0);

  const L2Fn t = L2Fn::polynomial(RPoly({0.0, 1.0}));
  CHECK(inner_product(t, t) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const L2Fn other_domain = L2Fn::constant(1.0, 2.0);
  CHECK_THROWS_AS((void)inner_product(one, other_domain), Error);
}

TEST_CASE("inner product symmetry and bilinearity on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    L2Fn u = L2Fn::polynomial(random_poly(rng, 4));
    L2Fn v = L2Fn::polynomial(random_poly(rng, 4));
    L2Fn w = L2Fn::polynomial(random_poly(rng, 4));
    double a = coef(rng), b = coef(rng);
    CHECK(inner_product(u, v) == doctest::Approx(inner_product(v, u)).epsilon(1e-14));
    double lhs = inner_product(u.scaled(a) + w.scaled(b), v);
    double rhs = a * inner_product(u, v) + b * inner_product(w, v);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("grid inner products converge at second order") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    L2Fn u = L2Fn::polynomial(random_poly(rng, 4));
    L2Fn v = L2Fn::polynomial(random_poly(rng, 4));
    const double exact = inner_product(u, v);
    auto grid_err = [&](std::size_t n) {
      L2Fn ug = L2Fn::from_grid(1.0, u.sample(n));
      L2Fn vg = L2Fn::from_grid(1.0, v.sample(n));
      return std::abs(inner_product(ug, vg) - exact);
    };
    const double e128 = grid_err(128), e256 = grid_err(256), e512 = grid_err(512);
    const double c_est = 1.5 * (e128 * 128.0 * 128.0 + 1e-12);
    CHECK(e256 <= c_est / (256.0 * 256.0) + 1e-13);
    CHECK(e512 <= c_est / (512.0 * 512.0) + 1e-13);
  }
}

TEST_CASE("supp-inf membership") {
  CHECK(is_supp_inf(L2Fn::constant(1.0)));
  CHECK_FALSE(is_supp_inf(L2Fn::indicator(0.0, 0.5)));  // vanishes on half the interval
  CHECK(is_supp_inf(L2Fn::polynomial(RPoly({0.0, 1.0}))));  // single root at t = 0

  // grid forms: node-count fraction decides
  L2Fn ramp = L2Fn::sampled(1.0, 512, [](double t) { return t; });
  CHECK(is_supp_inf(ramp));
  L2Fn half = L2Fn::sampled(1.0, 512, [](double t) { return t < 0.5 ? 0.0 : 1.0; });
  CHECK_FALSE(is_supp_inf(half));

  CHECK_THROWS_AS((void)WeightFn::checked(L2Fn::indicator(0.0, 0.5)), Error);
}

TEST_CASE("orthogonality tests") {
  const L2Fn one = L2Fn::constant(1.0);
  const L2Fn t = L2Fn::polynomial(RPoly({0.0, 1.0}));
  const L2Fn centered = L2Fn::polynomial(RPoly({-0.5, 1.0}));

  std::vector<L2Fn> disjoint{L2Fn::indicator(0.0, 0.5), L2Fn::indicator(0.5, 1.0)};
  CHECK(is_orthogonal_set(disjoint, kOrthoTolExact));

  std::vector<L2Fn> skew{one, t};  // (1,t) = 1/2
  CHECK_FALSE(is_orthogonal_set(skew, kOrthoTolExact));

  std::vector<L2Fn> ok{one, centered};  // (1, t-1/2) = 0
  CHECK(is_orthogonal_set(ok, kOrthoTolExact));

  std::vector<L2Fn> with_zero{one, L2Fn::constant(0.0)};
  CHECK_FALSE(is_orthogonal_set(with_zero, kOrthoTolExact));

  CHECK_THROWS_AS((void)OrthogonalSet{skew}, Error);
}

TEST_CASE("shifted Legendre family is exactly orthogonal") {
  std::vector<L2Fn> fam;
  for (int k = 0; k < 4; ++k) fam.push_back(L2Fn::shifted_legendre(k));
  CHECK(is_orthogonal_set(fam, kOrthoTolExact));
  for (int k = 0; k < 4; ++k) {
    double n2 = inner_product(fam[k], fam[k]);
    CHECK(n2 == doctest::Approx(1.0 / (2.0 * k + 1.0)).epsilon(1e-13));
  }
  // endpoint values pin the normalization
  CHECK(fam[2](1.0) == doctest::Approx(1.0));
  CHECK(fam[2](0.0) == doctest::Approx(1.0));
  CHECK(fam[1](0.0) == doctest::Approx(-1.0));
}

TEST_CASE("compatible_weight validates candidates in order") {
  OrthogonalSet A({L2Fn::constant(1.0), L2Fn::polynomial(RPoly({-0.5, 1.0}), 1.0, "t-1/2")});

  // any nonzero constant is accepted for every A
  WeightFn c = compatible_weight(A, std::vector<WeightFn>{WeightFn::checked(L2Fn::constant(2.5))});
  CHECK(c.fn()(0.3) == doctest::Approx(2.5));

  // symmetric weight: h^2 is even about 1/2, so (alpha_1 alpha_2, h^2) = 0
  WeightFn sym = WeightFn::checked(L2Fn::polynomial(RPoly({1.25, -1.0, 1.0}), 1.0, "1+(t-1/2)^2"));
  WeightFn bad = WeightFn::checked(L2Fn::polynomial(RPoly({1.0, 1.0}), 1.0, "1+t"));
  std::vector<WeightFn> candidates{bad, sym};
  WeightFn picked = compatible_weight(A, candidates);
  CHECK(picked.label() == "1+(t-1/2)^2");

  // Gram-Schmidt projection oracle: h^2 has no component along alpha_1 alpha_2
  const L2Fn prod = A.member(0) * A.member(1);
  const L2Fn h2 = picked.fn() * picked.fn();
  double proj = inner_product(h2, prod) / inner_product(prod, prod);
  CHECK(std::abs(proj) <= 1e-13);
  // while the rejected candidate projects visibly onto it
  const L2Fn bad2 = bad.fn() * bad.fn();
  CHECK(std::abs(inner_product(bad2, prod) / inner_product(prod, prod)) > 1e-3);

  // output contract: the rebased family stays orthogonal and the weight valid
  CHECK(is_supp_inf(picked.fn()));
  CHECK_NOTHROW((void)A.rebased(picked));

  CHECK_THROWS_WITH_AS(compatible_weight(A, std::vector<WeightFn>{bad}),
                       "no compatible weight found", Error);
}

TEST_CASE("disjoint supports accept any weight") {
  OrthogonalSet A({L2Fn::indicator(0.0, 0.5), L2Fn::indicator(0.5, 1.0)});
  std::vector<WeightFn> cands{WeightFn::checked(L2Fn::polynomial(RPoly({1.0, 1.0}), 1.0, "1+t"))};
  CHECK_NOTHROW((void)compatible_weight(A, cands));
}

TEST_CASE("exact form plumbing") {
  const L2Fn t = L2Fn::polynomial(RPoly({0.0, 1.0}));
  CHECK(t.integral_prefix(0.5) == doctest::Approx(0.125).epsilon(1e-15));
  const L2Fn prod = t * L2Fn::indicator(0.25, 0.75);
  CHECK(prod(0.5) == doctest::Approx(0.5));
  CHECK(prod(0.1) == 0.0);
  CHECK(inner_product(prod, L2Fn::constant(1.0)) ==
        doctest::Approx(0.5 * (0.75 * 0.75 - 0.25 * 0.25)).epsilon(1e-14));

  // uncovered gaps count as zero set
  CHECK(L2Fn::indicator(0.25, 0.75).zero_set_measure(1e-14) == doctest::Approx(0.5));
  CHECK(t.zero_set_measure(1e-14) == doctest::Approx(0.0));
}
