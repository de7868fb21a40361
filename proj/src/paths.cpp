#include "gfi/paths.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <thread>

namespace gfi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t path_stream_key(std::uint64_t seed, std::uint64_t path_index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(path_index + 1));
}

}  // namespace

PathEnsemble::PathEnsemble(double domain_end, std::size_t n_steps, std::size_t n_paths,
                           std::uint64_t seed)
    : domain_end_(domain_end), n_steps_(n_steps), n_paths_(n_paths), seed_(seed) {
  if (n_steps < 2) throw Error("ensemble needs at least 2 steps");
  if (n_paths < 1) throw Error("ensemble needs at least 1 path");
  grid_.resize(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) grid_[i] = domain_end * double(i) / double(n_steps);
  values_.assign(n_paths * (n_steps + 1), 0.0);
}

PathView PathEnsemble::path(std::size_t p) const {
  return {std::span<const double>(grid_),
          std::span<const double>(values_).subspan(p * (n_steps_ + 1), n_steps_ + 1)};
}

std::span<double> PathEnsemble::mutable_path(std::size_t p) {
  return std::span<double>(values_).subspan(p * (n_steps_ + 1), n_steps_ + 1);
}

std::size_t PathEnsemble::grid_index(double t) const {
  double s = t / dt();
  auto i = static_cast<std::size_t>(std::llround(s));
  if (i > n_steps_ || std::abs(s - double(i)) > 1e-9)
    throw Error("time " + std::to_string(t) + " is not a grid node");
  return i;
}

PathEnsemble sample_brownian(std::size_t n_steps, std::size_t n_paths, std::uint64_t seed,
                             double domain_end, unsigned workers) {
  PathEnsemble ens(domain_end, n_steps, n_paths, seed);
  const double sqrt_dt = std::sqrt(ens.dt());
  auto fill_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      std::mt19937_64 eng(path_stream_key(seed, p));
      std::normal_distribution<double> normal(0.0, 1.0);
      auto x = ens.mutable_path(p);
      x[0] = 0.0;
      for (std::size_t i = 0; i < n_steps; ++i) x[i + 1] = x[i] + sqrt_dt * normal(eng);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, n_paths);
  if (workers <= 1) {
    fill_range(0, n_paths);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_paths + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk, hi = std::min(n_paths, lo + chunk);
      if (lo < hi) pool.emplace_back(fill_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return ens;
}

PathEnsemble path_from_function(const std::function<double(double)>& fn, std::size_t n_steps,
                                double domain_end) {
  PathEnsemble ens(domain_end, n_steps, 1, 0);
  auto x = ens.mutable_path(0);
  for (std::size_t i = 0; i <= n_steps; ++i) x[i] = fn(ens.grid()[i]);
  if (x[0] != 0.0) throw Error("paths must start at 0");
  return ens;
}

double pwz_integral(const L2Fn& v, PathView x) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < x.grid.size(); ++i)
    acc += v(x.grid[i]) * (x.values[i + 1] - x.values[i]);
  return acc;
}

std::vector<double> pwz_integral_all(const L2Fn& v, const PathEnsemble& ens) {
  const std::size_t n = ens.n_steps();
  std::vector<double> vg(n);
  for (std::size_t i = 0; i < n; ++i) vg[i] = v(ens.grid()[i]);
  std::vector<double> out(ens.n_paths());
  for (std::size_t p = 0; p < ens.n_paths(); ++p) {
    auto x = ens.path(p).values;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += vg[i] * (x[i + 1] - x[i]);
    out[p] = acc;
  }
  return out;
}

ProcessSpec::ProcessSpec(WeightFn h) : h_(std::move(h)), h_sq_(h_.fn() * h_.fn()) {}

double gaussian_process(const ProcessSpec& spec, PathView x, double t) {
  const L2Fn& h = spec.weight().fn();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < x.grid.size() && x.grid[i] < t - 1e-15; ++i)
    acc += h(x.grid[i]) * (x.values[i + 1] - x.values[i]);
  return acc;
}

std::vector<double> gaussian_process_path(const ProcessSpec& spec, PathView x) {
  const L2Fn& h = spec.weight().fn();
  std::vector<double> z(x.grid.size());
  z[0] = 0.0;
  for (std::size_t i = 0; i + 1 < x.grid.size(); ++i)
    z[i + 1] = z[i] + h(x.grid[i]) * (x.values[i + 1] - x.values[i]);
  return z;
}

McEstimate cross_covariance(const WeightFn& h1, const WeightFn& h2, const PathEnsemble& ens, double s,
                            double t) {
  const std::size_t is = ens.grid_index(s), it = ens.grid_index(t);
  const std::size_t top = std::max(is, it);
  std::vector<double> g1(top), g2(top);
  for (std::size_t i = 0; i < top; ++i) {
    g1[i] = h1.fn()(ens.grid()[i]);
    g2[i] = h2.fn()(ens.grid()[i]);
  }
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t p = 0; p < ens.n_paths(); ++p) {
    auto x = ens.path(p).values;
    double z1 = 0.0, z2 = 0.0;
    for (std::size_t i = 0; i < top; ++i) {
      double dx = x[i + 1] - x[i];
      if (i < is) z1 += g1[i] * dx;
      if (i < it) z2 += g2[i] * dx;
    }
    double prod = z1 * z2;
    sum += prod;
    sumsq += prod * prod;
  }
  const double n = double(ens.n_paths());
  McEstimate est;
  est.n = ens.n_paths();
  est.value = sum / n;
  double var = std::max(0.0, sumsq / n - est.value * est.value);
  est.se = std::sqrt(var / n);
  return est;
}

RelationCheck pwz_relation_check(const L2Fn& v, const WeightFn& h, PathView x, std::size_t stride) {
  if (stride < 1) throw Error("stride must be >= 1");
  ProcessSpec spec(h);
  std::vector<double> z = gaussian_process_path(spec, x);
  RelationCheck rc;
  const std::size_t n = x.grid.size() - 1;
  for (std::size_t i = 0; i < n; i += stride) {
    std::size_t next = std::min(i + stride, n);
    rc.lhs += v(x.grid[i]) * (z[next] - z[i]);
  }
  rc.rhs = pwz_integral(v * h.fn(), x);
  rc.gap = std::abs(rc.lhs - rc.rhs);
  return rc;
}

namespace {
constexpr char kMagic[8] = {'G', 'F', 'I', 'P', 'A', 'T', 'H', '1'};
}

void dump_ensemble(const PathEnsemble& ens, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  std::uint64_t n = ens.n_steps(), m = ens.n_paths(), seed = ens.seed();
  out.write(kMagic, 8);
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(&m), 8);
  out.write(reinterpret_cast<const char*>(&seed), 8);
  for (std::size_t p = 0; p < ens.n_paths(); ++p) {
    auto x = ens.path(p).values;
    out.write(reinterpret_cast<const char*>(x.data()), std::streamsize(x.size() * sizeof(double)));
  }
  if (!out) throw Error("short write to " + file.string());
}

PathEnsemble load_ensemble(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  char magic[8];
  std::uint64_t n = 0, m = 0, seed = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&n), 8);
  in.read(reinterpret_cast<char*>(&m), 8);
  in.read(reinterpret_cast<char*>(&seed), 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) throw Error("bad ensemble header in " + file.string());
  PathEnsemble ens(1.0, n, m, seed);
  for (std::size_t p = 0; p < m; ++p) {
    auto x = ens.mutable_path(p);
    in.read(reinterpret_cast<char*>(x.data()), std::streamsize(x.size() * sizeof(double)));
  }
  if (!in) throw Error("truncated ensemble file " + file.string());
  return ens;
}

}  // namespace gfi
