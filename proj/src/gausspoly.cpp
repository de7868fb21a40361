#include "gfi/gausspoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gfi/l2.hpp"

namespace gfi {

Cx principal_sqrt(Cx z) { return std::exp(0.5 * std::log(z)); }

Cx gauss_integral(const CPoly& p, Cx rate, Cx shift) {
  if (!(rate.real() > 0.0))
    throw Error("gauss_integral: integrand lacks Gaussian decay (Re rate <= 0)");
  if (p.is_zero()) return {0.0, 0.0};
  const Cx mu = shift / (2.0 * rate);
  const Cx s2 = 1.0 / (2.0 * rate);
  Cx mk_prev{1.0, 0.0};  // M_0
  Cx mk = mu;            // M_1
  Cx acc = p.coeff(0);
  if (p.degree() >= 1) acc += p.coeff(1) * mk;
  for (std::size_t k = 2; k <= p.degree(); ++k) {
    Cx next = mu * mk + double(k - 1) * s2 * mk_prev;
    mk_prev = mk;
    mk = next;
    acc += p.coeff(k) * mk;
  }
  return principal_sqrt(std::numbers::pi / rate) * std::exp(shift * shift / (4.0 * rate)) * acc;
}

GaussPolyFn::GaussPolyFn(std::size_t arity, std::vector<GpTerm> terms)
    : arity_(arity), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.axes.size() != arity_) throw Error("term arity mismatch");
    for (auto& ax : t.axes)
      if (ax.rate != Cx{0.0, 0.0} && !(ax.rate.real() > 0.0))
        throw Error("Gaussian rate must have positive real part (or be exactly zero)");
  }
  std::erase_if(terms_, [](const GpTerm& t) {
    if (t.coeff == Cx{0.0, 0.0}) return true;
    for (const auto& ax : t.axes)
      if (ax.poly.is_zero()) return true;
    return false;
  });
}

GaussPolyFn GaussPolyFn::constant(Cx c, std::size_t arity) {
  GpTerm t;
  t.coeff = c;
  t.axes.assign(arity, AxisFactor{});
  return GaussPolyFn(arity, {std::move(t)});
}

GaussPolyFn GaussPolyFn::coordinate(std::size_t axis, std::size_t arity) {
  if (axis >= arity) throw Error("coordinate axis out of range");
  GpTerm t;
  t.coeff = {1.0, 0.0};
  t.axes.assign(arity, AxisFactor{});
  t.axes[axis].poly = CPoly::identity();
  return GaussPolyFn(arity, {std::move(t)});
}

GaussPolyFn GaussPolyFn::term(Cx coeff, std::vector<AxisFactor> axes) {
  GpTerm t;
  t.coeff = coeff;
  const std::size_t n = axes.size();
  t.axes = std::move(axes);
  return GaussPolyFn(n, {std::move(t)});
}

Cx GaussPolyFn::eval(std::span<const double> u) const {
  std::vector<Cx> cu(u.begin(), u.end());
  return eval(std::span<const Cx>(cu));
}

Cx GaussPolyFn::eval(std::span<const Cx> u) const {
  if (u.size() != arity_) throw Error("eval arity mismatch");
  Cx acc{0.0, 0.0};
  for (const auto& t : terms_) {
    Cx v = t.coeff;
    for (std::size_t j = 0; j < arity_; ++j) {
      const auto& ax = t.axes[j];
      v *= ax.poly.eval(u[j]) * std::exp(-ax.rate * u[j] * u[j] + ax.shift * u[j]);
    }
    acc += v;
  }
  return acc;
}

GaussPolyFn GaussPolyFn::operator+(const GaussPolyFn& o) const {
  if (arity_ != o.arity_) throw Error("arity mismatch");
  std::vector<GpTerm> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return GaussPolyFn(arity_, std::move(ts));
}

GaussPolyFn GaussPolyFn::operator-(const GaussPolyFn& o) const { return *this + o.scaled({-1.0, 0.0}); }

GaussPolyFn GaussPolyFn::operator*(const GaussPolyFn& o) const {
  if (arity_ != o.arity_) throw Error("arity mismatch");
  std::vector<GpTerm> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      GpTerm t;
      t.coeff = a.coeff * b.coeff;
      t.axes.resize(arity_);
      for (std::size_t j = 0; j < arity_; ++j) {
        t.axes[j].poly = a.axes[j].poly * b.axes[j].poly;
        t.axes[j].rate = a.axes[j].rate + b.axes[j].rate;
        t.axes[j].shift = a.axes[j].shift + b.axes[j].shift;
      }
      ts.push_back(std::move(t));
    }
  }
  return GaussPolyFn(arity_, std::move(ts));
}

GaussPolyFn GaussPolyFn::scaled(Cx s) const {
  std::vector<GpTerm> ts = terms_;
  for (auto& t : ts) t.coeff *= s;
  return GaussPolyFn(arity_, std::move(ts));
}

GaussPolyFn GaussPolyFn::derivative(std::size_t axis) const {
  if (axis >= arity_) throw Error("derivative axis out of range");
  std::vector<GpTerm> ts;
  for (const auto& t : terms_) {
    // d/du [P e^{−au²+bu}] = (P' + (b − 2au)·P) e^{−au²+bu}
    GpTerm d = t;
    const auto& ax = t.axes[axis];
    CPoly linear(std::vector<Cx>{ax.shift, -2.0 * ax.rate});
    d.axes[axis].poly = ax.poly.derivative() + linear * ax.poly;
    if (!d.axes[axis].poly.is_zero()) ts.push_back(std::move(d));
  }
  return GaussPolyFn(arity_, std::move(ts));
}

GaussPolyFn GaussPolyFn::shifted(std::span<const Cx> s) const {
  if (s.size() != arity_) throw Error("shift arity mismatch");
  std::vector<GpTerm> ts;
  for (const auto& t : terms_) {
    GpTerm out = t;
    for (std::size_t j = 0; j < arity_; ++j) {
      const auto& ax = t.axes[j];
      // e^{−a(u+s)² + b(u+s)} = e^{−as² + bs} · e^{−au² + (b−2as)u}
      out.coeff *= std::exp(-ax.rate * s[j] * s[j] + ax.shift * s[j]);
      out.axes[j].poly = ax.poly.compose_linear({1.0, 0.0}, s[j]);
      out.axes[j].shift = ax.shift - 2.0 * ax.rate * s[j];
    }
    ts.push_back(std::move(out));
  }
  return GaussPolyFn(arity_, std::move(ts));
}

bool GaussPolyFn::has_gaussian_decay() const {
  // the zero function (no terms) trivially decays
  for (const auto& t : terms_)
    for (const auto& ax : t.axes)
      if (!(ax.rate.real() > 0.0)) return false;
  return true;
}

double GaussPolyFn::coefficient_scale() const {
  double m = 0.0;
  for (const auto& g : canonicalize(*this))
    for (const auto& [mono, c] : g.monomials) m = std::max(m, std::abs(c));
  return m;
}

AxisConv convolve_axis(const AxisFactor& axis, Cx gamma) {
  const Cx a = axis.rate, b = axis.shift;
  const Cx big_a = a - gamma;
  if (!(big_a.real() > 0.0))
    throw Error("convolve_axis: combined exponent lacks Gaussian decay");
  // ∫P(x) e^{−Ax² + B(v)x} dx with B(v) = b − 2γv; moment polynomials in v
  const CPoly mu(std::vector<Cx>{b / (2.0 * big_a), -gamma / big_a});
  const Cx s2 = 1.0 / (2.0 * big_a);
  std::vector<CPoly> moments{CPoly::constant({1.0, 0.0}), mu};
  for (std::size_t k = 2; k <= axis.poly.degree(); ++k)
    moments.push_back(mu * moments[k - 1] + moments[k - 2] * (double(k - 1) * s2));
  CPoly q;
  for (std::size_t k = 0; k <= axis.poly.degree(); ++k)
    q = q + moments[k] * axis.poly.coeff(k);

  AxisConv out;
  out.factor.poly = std::move(q);
  out.factor.rate = -gamma * a / big_a;
  out.factor.shift = -gamma * b / big_a;
  out.scale = principal_sqrt(std::numbers::pi / big_a) * std::exp(b * b / (4.0 * big_a));
  if (axis.rate.real() > 0.0 && !(out.factor.rate.real() > 0.0))
    throw Error("convolve_axis: transformed rate lost Gaussian decay");
  return out;
}

GaussPolyFn integrate_axis(const GaussPolyFn& f, std::size_t axis, Cx weight_rate) {
  if (axis >= f.arity()) throw Error("integrate_axis: axis out of range");
  std::vector<GpTerm> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const auto& ax = t.axes[axis];
    GpTerm nt;
    nt.coeff = t.coeff * gauss_integral(ax.poly, ax.rate + weight_rate, ax.shift);
    nt.axes.reserve(t.axes.size() - 1);
    for (std::size_t j = 0; j < t.axes.size(); ++j)
      if (j != axis) nt.axes.push_back(t.axes[j]);
    out.push_back(std::move(nt));
  }
  return GaussPolyFn(f.arity() - 1, std::move(out));
}

namespace {

void expand_term(const GpTerm& t, std::map<std::vector<int>, Cx>& into) {
  const std::size_t n = t.axes.size();
  std::vector<std::vector<int>> stack{std::vector<int>(n, 0)};
  std::vector<Cx> coefs{t.coeff};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<int>> next_stack;
    std::vector<Cx> next_coefs;
    const auto& p = t.axes[j].poly.coeffs();
    for (std::size_t s = 0; s < stack.size(); ++s) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == Cx{0.0, 0.0}) continue;
        auto idx = stack[s];
        idx[j] = int(k);
        next_stack.push_back(std::move(idx));
        next_coefs.push_back(coefs[s] * p[k]);
      }
    }
    stack = std::move(next_stack);
    coefs = std::move(next_coefs);
  }
  for (std::size_t s = 0; s < stack.size(); ++s) into[stack[s]] += coefs[s];
}

bool signature_close(const std::vector<std::pair<Cx, Cx>>& a, const std::vector<std::pair<Cx, Cx>>& b,
                     double tol) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j].first - b[j].first) > tol * (1.0 + std::abs(a[j].first))) return false;
    if (std::abs(a[j].second - b[j].second) > tol * (1.0 + std::abs(a[j].second))) return false;
  }
  return true;
}

bool signature_less(const std::vector<std::pair<Cx, Cx>>& a, const std::vector<std::pair<Cx, Cx>>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto key = [](const std::pair<Cx, Cx>& p) {
      return std::array<double, 4>{p.first.real(), p.first.imag(), p.second.real(), p.second.imag()};
    };
    auto ka = key(a[j]), kb = key(b[j]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

}  // namespace

std::vector<CanonicalGroup> canonicalize(const GaussPolyFn& f, double merge_tol) {
  std::vector<CanonicalGroup> groups;
  for (const auto& t : f.terms()) {
    CanonicalGroup g;
    for (const auto& ax : t.axes) g.signature.emplace_back(ax.rate, ax.shift);
    expand_term(t, g.monomials);
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const CanonicalGroup& a, const CanonicalGroup& b) { return signature_less(a.signature, b.signature); });
  std::vector<CanonicalGroup> merged;
  for (auto& g : groups) {
    if (!merged.empty() && signature_close(merged.back().signature, g.signature, merge_tol)) {
      for (const auto& [mono, c] : g.monomials) merged.back().monomials[mono] += c;
    } else {
      merged.push_back(std::move(g));
    }
  }
  return merged;
}

KernelDiff compare_kernels(const GaussPolyFn& a, const GaussPolyFn& b, double merge_tol) {
  KernelDiff diff;
  auto ga = canonicalize(a, merge_tol);
  auto gb = canonicalize(b, merge_tol);
  double scale = std::max(a.coefficient_scale(), b.coefficient_scale());
  if (scale == 0.0) return diff;
  const double floor = 1e-14 * scale;

  auto significant = [&](const CanonicalGroup& g) {
    for (const auto& [mono, c] : g.monomials)
      if (std::abs(c) > floor) return true;
    return false;
  };

  std::size_t ia = 0, ib = 0;
  while (ia < ga.size() || ib < gb.size()) {
    if (ia < ga.size() && ib < gb.size() && signature_close(ga[ia].signature, gb[ib].signature, merge_tol)) {
      std::map<std::vector<int>, std::pair<Cx, Cx>> joint;
      for (const auto& [mono, c] : ga[ia].monomials) joint[mono].first = c;
      for (const auto& [mono, c] : gb[ib].monomials) joint[mono].second = c;
      for (const auto& [mono, cc] : joint) {
        double gap = std::abs(cc.first - cc.second);
        double denom = std::max({std::abs(cc.first), std::abs(cc.second), floor});
        diff.max_rel_gap = std::max(diff.max_rel_gap, gap / denom);
      }
      ++ia;
      ++ib;
    } else if (ib >= gb.size() || (ia < ga.size() && signature_less(ga[ia].signature, gb[ib].signature))) {
      if (significant(ga[ia])) diff.structurally_equal = false;
      ++ia;
    } else {
      if (significant(gb[ib])) diff.structurally_equal = false;
      ++ib;
    }
  }
  return diff;
}

}  // namespace gfi
