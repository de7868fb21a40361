#include "gfi/l2.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gfi {

namespace {

constexpr double kZeroMeasureFrac = 0.01;  // grid zero-set measure cutoff, fraction of T

void check_domains(const L2Fn& u, const L2Fn& v) {
  if (std::abs(u.domain_end() - v.domain_end()) > 1e-14 * (1.0 + u.domain_end()))
    throw Error("L2 operands live on different domains [0,T]");
}

std::vector<double> merged_breakpoints(const L2Fn& u, const L2Fn& v) {
  std::set<double> pts{0.0, u.domain_end()};
  for (const auto& p : u.pieces()) {
    pts.insert(p.lo);
    pts.insert(p.hi);
  }
  for (const auto& p : v.pieces()) {
    pts.insert(p.lo);
    pts.insert(p.hi);
  }
  std::vector<double> out(pts.begin(), pts.end());
  std::erase_if(out, [&](double t) { return t < -1e-15 || t > u.domain_end() + 1e-15; });
  return out;
}

const RPoly* piece_at(const std::vector<Piece>& pieces, double t) {
  for (const auto& p : pieces)
    if (t >= p.lo && t < p.hi) return &p.poly;
  return nullptr;
}

double trapezoid(std::span<const double> f, std::span<const double> g, double dt) {
  double acc = 0.0;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i + 1 < n; ++i) acc += 0.5 * (f[i] * g[i] + f[i + 1] * g[i + 1]);
  return acc * dt;
}

}  // namespace

L2Fn L2Fn::from_pieces(double domain_end, std::vector<Piece> pieces, std::string label) {
  if (domain_end <= 0.0) throw Error("domain_end must be positive");
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].hi <= pieces[i].lo) throw Error("empty piece interval");
    if (i + 1 < pieces.size() && pieces[i].hi > pieces[i + 1].lo + 1e-15)
      throw Error("overlapping piece intervals");
  }
  L2Fn f;
  f.exact_ = true;
  f.domain_end_ = domain_end;
  f.pieces_ = std::move(pieces);
  f.label_ = std::move(label);
  return f;
}

L2Fn L2Fn::from_grid(double domain_end, std::vector<double> samples, std::string label) {
  if (domain_end <= 0.0) throw Error("domain_end must be positive");
  if (samples.size() < 2) throw Error("grid form needs at least 2 samples");
  L2Fn f;
  f.exact_ = false;
  f.domain_end_ = domain_end;
  f.samples_ = std::move(samples);
  f.label_ = std::move(label);
  return f;
}

L2Fn L2Fn::constant(double c, double domain_end) {
  return from_pieces(domain_end, {{RPoly::constant(c), 0.0, domain_end}},
                     c == 1.0 ? "1" : "const(" + std::to_string(c) + ")");
}

L2Fn L2Fn::polynomial(RPoly p, double domain_end, std::string label) {
  return from_pieces(domain_end, {{std::move(p), 0.0, domain_end}}, std::move(label));
}

L2Fn L2Fn::indicator(double a, double b, double domain_end) {
  if (!(a < b)) throw Error("indicator requires a < b");
  return from_pieces(domain_end, {{RPoly::constant(1.0), a, b}},
                     "indicator(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

L2Fn L2Fn::shifted_legendre(int k, double domain_end) {
  if (k < 0) throw Error("negative Legendre degree");
  RPoly pm1 = RPoly::constant(1.0);
  RPoly p = RPoly::identity();
  if (k == 0) p = pm1;
  for (int j = 1; j < k; ++j) {
    // Bonnet: (j+1) P_{j+1} = (2j+1) x P_j − j P_{j−1}
    RPoly next = (RPoly::identity() * p) * (double(2 * j + 1) / double(j + 1)) -
                 pm1 * (double(j) / double(j + 1));
    pm1 = p;
    p = next;
  }
  // x = 2t/T − 1 maps [0,T] onto [−1,1]
  RPoly shifted = p.compose_linear(2.0 / domain_end, -1.0);
  return polynomial(std::move(shifted), domain_end, "legendre(" + std::to_string(k) + ")");
}

L2Fn L2Fn::sampled(double domain_end, std::size_t n, const std::function<double(double)>& fn,
                   std::string label) {
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = fn(domain_end * double(i) / double(n));
  return from_grid(domain_end, std::move(vals), std::move(label));
}

L2Fn L2Fn::with_label(std::string label) const {
  L2Fn f = *this;
  f.label_ = std::move(label);
  return f;
}

double L2Fn::operator()(double t) const {
  if (exact_) {
    for (const auto& p : pieces_) {
      if (t >= p.lo && (t < p.hi || (t == p.hi && t >= domain_end_))) return p.poly.eval(t);
    }
    return 0.0;
  }
  const std::size_t n = samples_.size() - 1;
  double s = std::clamp(t / domain_end_, 0.0, 1.0) * double(n);
  std::size_t i = std::min(static_cast<std::size_t>(s), n - 1);
  double w = s - double(i);
  return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
}

const std::vector<Piece>& L2Fn::pieces() const {
  if (!exact_) throw Error("grid-form function has no exact pieces");
  return pieces_;
}

const std::vector<double>& L2Fn::samples() const {
  if (exact_) throw Error("exact-form function has no stored samples");
  return samples_;
}

std::vector<double> L2Fn::sample(std::size_t n) const {
  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = (*this)(domain_end_ * double(i) / double(n));
  return out;
}

L2Fn L2Fn::operator*(const L2Fn& o) const {
  check_domains(*this, o);
  std::string lab = label_.empty() || o.label_.empty() ? "" : label_ + "*" + o.label_;
  if (exact_ && o.exact_) {
    std::vector<Piece> out;
    auto bps = merged_breakpoints(*this, o);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      double mid = 0.5 * (bps[i] + bps[i + 1]);
      const RPoly* pu = piece_at(pieces_, mid);
      const RPoly* pv = piece_at(o.pieces_, mid);
      if (pu && pv) {
        RPoly prod = (*pu) * (*pv);
        if (!prod.is_zero()) out.push_back({std::move(prod), bps[i], bps[i + 1]});
      }
    }
    return from_pieces(domain_end_, std::move(out), std::move(lab));
  }
  const std::size_t n = std::max({exact_ ? kDefaultGridN : samples_.size() - 1,
                                  o.exact_ ? kDefaultGridN : o.samples_.size() - 1});
  std::vector<double> a = sample(n), b = o.sample(n);
  for (std::size_t i = 0; i <= n; ++i) a[i] *= b[i];
  return from_grid(domain_end_, std::move(a), std::move(lab));
}

L2Fn L2Fn::operator+(const L2Fn& o) const {
  check_domains(*this, o);
  if (exact_ && o.exact_) {
    std::vector<Piece> out;
    auto bps = merged_breakpoints(*this, o);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      double mid = 0.5 * (bps[i] + bps[i + 1]);
      const RPoly* pu = piece_at(pieces_, mid);
      const RPoly* pv = piece_at(o.pieces_, mid);
      RPoly s;
      if (pu) s = s + *pu;
      if (pv) s = s + *pv;
      if (!s.is_zero()) out.push_back({std::move(s), bps[i], bps[i + 1]});
    }
    return from_pieces(domain_end_, std::move(out));
  }
  const std::size_t n = std::max({exact_ ? kDefaultGridN : samples_.size() - 1,
                                  o.exact_ ? kDefaultGridN : o.samples_.size() - 1});
  std::vector<double> a = sample(n), b = o.sample(n);
  for (std::size_t i = 0; i <= n; ++i) a[i] += b[i];
  return from_grid(domain_end_, std::move(a));
}

L2Fn L2Fn::operator-(const L2Fn& o) const { return *this + o.scaled(-1.0); }

L2Fn L2Fn::scaled(double s) const {
  L2Fn f = *this;
  if (exact_) {
    for (auto& p : f.pieces_) p.poly = p.poly * s;
  } else {
    for (auto& v : f.samples_) v *= s;
  }
  return f;
}

double L2Fn::integral_prefix(double t) const {
  t = std::clamp(t, 0.0, domain_end_);
  if (exact_) {
    double acc = 0.0;
    for (const auto& p : pieces_) {
      if (t <= p.lo) break;
      acc += p.poly.integrate(p.lo, std::min(t, p.hi));
    }
    return acc;
  }
  const std::size_t n = samples_.size() - 1;
  const double dt = domain_end_ / double(n);
  double s = t / dt;
  std::size_t full = std::min(static_cast<std::size_t>(s), n);
  double acc = 0.0;
  for (std::size_t i = 0; i < full; ++i) acc += 0.5 * (samples_[i] + samples_[i + 1]) * dt;
  if (full < n) {
    double frac = s - double(full);
    double a = samples_[full];
    double b = a + (samples_[full + 1] - a) * frac;
    acc += 0.5 * (a + b) * frac * dt;
  }
  return acc;
}

double L2Fn::sup_bound() const {
  double m = 0.0;
  if (exact_) {
    for (const auto& p : pieces_) {
      // coefficient bound on |poly| over the piece; adequate for scale-setting
      double scale = std::max(1.0, std::max(std::abs(p.lo), std::abs(p.hi)));
      double b = 0.0, pw = 1.0;
      for (double c : p.poly.coeffs()) {
        b += std::abs(c) * pw;
        pw *= scale;
      }
      m = std::max(m, b);
    }
  } else {
    for (double v : samples_) m = std::max(m, std::abs(v));
  }
  return m;
}

double L2Fn::zero_set_measure(double zero_tol) const {
  if (exact_) {
    double covered_nonzero = 0.0;
    for (const auto& p : pieces_) {
      bool zero = true;
      for (double c : p.poly.coeffs())
        if (std::abs(c) > zero_tol) zero = false;
      double lo = std::max(p.lo, 0.0), hi = std::min(p.hi, domain_end_);
      if (!zero && hi > lo) covered_nonzero += hi - lo;  // nonzero polynomial: root set is null
    }
    return std::max(0.0, domain_end_ - covered_nonzero);
  }
  std::size_t z = 0;
  for (double v : samples_)
    if (std::abs(v) <= zero_tol) ++z;
  return domain_end_ * double(z) / double(samples_.size());
}

double inner_product(const L2Fn& u, const L2Fn& v) {
  check_domains(u, v);
  if (u.exact_ && v.exact_) {
    double acc = 0.0;
    auto bps = merged_breakpoints(u, v);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      double mid = 0.5 * (bps[i] + bps[i + 1]);
      const RPoly* pu = piece_at(u.pieces_, mid);
      const RPoly* pv = piece_at(v.pieces_, mid);
      if (pu && pv) acc += ((*pu) * (*pv)).integrate(bps[i], bps[i + 1]);
    }
    return acc;
  }
  const std::size_t n = std::max({u.exact_ ? kDefaultGridN : u.samples_.size() - 1,
                                  v.exact_ ? kDefaultGridN : v.samples_.size() - 1});
  return trapezoid(u.sample(n), v.sample(n), u.domain_end() / double(n));
}

double norm(const L2Fn& v) { return std::sqrt(std::max(0.0, inner_product(v, v))); }

bool is_supp_inf(const L2Fn& h, double zero_tol) {
  if (!h.exact()) {
    return h.zero_set_measure(zero_tol) <= kZeroMeasureFrac * h.domain_end();
  }
  // exact piecewise polynomials on [0,T] are bounded; only the null-set test matters
  return h.zero_set_measure(zero_tol) <= 1e-12 * h.domain_end();
}

bool is_supp_inf(const L2Fn& h) { return is_supp_inf(h, 1e-12 * h.sup_bound()); }

bool is_orthogonal_set(std::span<const L2Fn> members, double tau) {
  if (members.empty()) return false;
  std::vector<double> norms(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    norms[i] = norm(members[i]);
    if (!(norms[i] > 0.0)) return false;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (std::abs(inner_product(members[i], members[j])) > tau * norms[i] * norms[j]) return false;
  return true;
}

WeightFn WeightFn::checked(L2Fn h) {
  if (!is_supp_inf(h)) throw Error("weight is not in Supp_inf[0,T]: " + h.label());
  return WeightFn(std::move(h));
}

WeightFn WeightFn::checked(L2Fn h, double zero_tol) {
  if (!is_supp_inf(h, zero_tol)) throw Error("weight is not in Supp_inf[0,T]: " + h.label());
  return WeightFn(std::move(h));
}

WeightFn WeightFn::unit(double domain_end) { return WeightFn(L2Fn::constant(1.0, domain_end)); }

WeightFn WeightFn::negated() const {
  L2Fn neg = h_.scaled(-1.0);
  return WeightFn(neg.with_label("-" + (h_.label().empty() ? std::string("h") : h_.label())));
}

namespace {
double default_tolerance(std::span<const L2Fn> members) {
  for (const auto& m : members)
    if (!m.exact()) return kOrthoTolGrid;
  return kOrthoTolExact;
}
}  // namespace

OrthogonalSet::OrthogonalSet(std::vector<L2Fn> members, double tol) : tol_(tol) {
  if (members.empty()) throw Error("orthogonal set must be nonempty");
  if (!is_orthogonal_set(members, tol))
    throw Error("set fails the orthogonality test at tolerance " + std::to_string(tol));
  members_ = std::make_shared<const std::vector<L2Fn>>(std::move(members));
}

OrthogonalSet::OrthogonalSet(std::vector<L2Fn> members) {
  if (members.empty()) throw Error("orthogonal set must be nonempty");
  tol_ = default_tolerance(members);
  if (!is_orthogonal_set(members, tol_))
    throw Error("set fails the orthogonality test at tolerance " + std::to_string(tol_));
  members_ = std::make_shared<const std::vector<L2Fn>>(std::move(members));
}

OrthogonalSet OrthogonalSet::rebased(const WeightFn& h) const {
  std::vector<L2Fn> out;
  out.reserve(size());
  for (const auto& a : *members_) out.push_back(a * h.fn());
  return OrthogonalSet(std::move(out), tol_);
}

bool OrthogonalSet::same_set(const OrthogonalSet& o, double tol) const {
  if (members_ == o.members_) return true;
  if (size() != o.size()) return false;
  for (std::size_t j = 0; j < size(); ++j)
    if (norm(member(j) - o.member(j)) > tol * (1.0 + norm(member(j)))) return false;
  return true;
}

WeightFn compatible_weight(const OrthogonalSet& A, std::span<const WeightFn> candidates) {
  if (candidates.empty()) throw Error("no weight candidates supplied");
  for (const auto& h : candidates) {
    const L2Fn h2 = h.fn() * h.fn();
    bool fast_ok = true;
    for (std::size_t i = 0; i < A.size() && fast_ok; ++i) {
      for (std::size_t j = i + 1; j < A.size() && fast_ok; ++j) {
        const L2Fn prod = A.member(i) * A.member(j);
        double bound = A.tolerance() * (norm(prod) + 1e-300) * (norm(h2) + 1e-300);
        if (std::abs(inner_product(prod, h2)) > std::max(bound, 1e-14)) fast_ok = false;
      }
    }
    bool norms_ok = true;
    for (std::size_t j = 0; j < A.size(); ++j)
      if (!(norm(A.member(j) * h.fn()) > 0.0)) norms_ok = false;
    if (fast_ok && norms_ok) return h;
    // full check: rebased set orthogonality
    std::vector<L2Fn> rebased;
    for (std::size_t j = 0; j < A.size(); ++j) rebased.push_back(A.member(j) * h.fn());
    if (is_orthogonal_set(rebased, A.tolerance())) return h;
  }
  throw Error("no compatible weight found");
}

}  // namespace gfi
