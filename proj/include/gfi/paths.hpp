#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gfi/l2.hpp"

namespace gfi {

/// One path on the ensemble grid.
struct PathView {
  std::span<const double> grid;    // N+1 nodes, grid[0] = 0
  std::span<const double> values;  // x(t_i), values[0] = 0
};

/// M discretized Brownian paths on an (N+1)-node uniform grid.
/// Generation is keyed per path by (seed, path index), so the ensemble is
/// bit-identical for a fixed (seed, N, M) regardless of worker count.
class PathEnsemble {
 public:
  PathEnsemble(double domain_end, std::size_t n_steps, std::size_t n_paths, std::uint64_t seed);

  double domain_end() const { return domain_end_; }
  std::size_t n_steps() const { return n_steps_; }
  std::size_t n_paths() const { return n_paths_; }
  std::uint64_t seed() const { return seed_; }
  double dt() const { return domain_end_ / double(n_steps_); }

  std::span<const double> grid() const { return grid_; }
  PathView path(std::size_t p) const;
  std::span<double> mutable_path(std::size_t p);

  /// Index of the grid node at time t (must lie on the grid).
  std::size_t grid_index(double t) const;

 private:
  double domain_end_;
  std::size_t n_steps_, n_paths_;
  std::uint64_t seed_;
  std::vector<double> grid_;
  std::vector<double> values_;  // path-major
};

/// Independent Gaussian increments with variance dt per step.
/// workers = 0 picks hardware concurrency; the result does not depend on it.
PathEnsemble sample_brownian(std::size_t n_steps, std::size_t n_paths, std::uint64_t seed,
                             double domain_end = 1.0, unsigned workers = 0);

/// Deterministic single-path ensemble with x(t_i) = fn(t_i) (fn(0) must be 0).
PathEnsemble path_from_function(const std::function<double(double)>& fn, std::size_t n_steps,
                                double domain_end = 1.0);

/// Left-endpoint Riemann–Stieltjes sum Σ v(t_i)(x(t_{i+1}) − x(t_i)).
double pwz_integral(const L2Fn& v, PathView x);

/// v sampled once, then applied across all ensemble paths.
std::vector<double> pwz_integral_all(const L2Fn& v, const PathEnsemble& ens);

/// The weight h with its accumulated variance β_h(t) = ∫₀ᵗ h².
class ProcessSpec {
 public:
  explicit ProcessSpec(WeightFn h);
  const WeightFn& weight() const { return h_; }
  double beta(double t) const { return h_sq_.integral_prefix(t); }

 private:
  WeightFn h_;
  L2Fn h_sq_;
};

/// Z_h(x,t) = ⟨h·χ_[0,t], x⟩ for a grid time t.
double gaussian_process(const ProcessSpec& spec, PathView x, double t);

/// The whole Z_h path on the grid (prefix Stieltjes sums).
std::vector<double> gaussian_process_path(const ProcessSpec& spec, PathView x);

struct McEstimate {
  double value = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

/// MC estimate of E[Z_{h1}(·,s) Z_{h2}(·,t)] over the ensemble.
McEstimate cross_covariance(const WeightFn& h1, const WeightFn& h2, const PathEnsemble& ens, double s,
                            double t);

struct RelationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// Checks ⟨v, Z_h(x,·)⟩ = ⟨vh, x⟩: lhs is the Stieltjes sum of v against the
/// realized Z_h path on every stride-th node, rhs is ⟨vh, x⟩ on the full grid.
/// With stride 1 the two sums coincide up to rounding.
RelationCheck pwz_relation_check(const L2Fn& v, const WeightFn& h, PathView x, std::size_t stride = 1);

/// Binary ensemble dump: 32-byte header (magic "GFIPATH1", u64 N, M, seed)
/// followed by the value matrix, one path after another (column-major for
/// the (N+1)×M matrix whose columns are paths).
void dump_ensemble(const PathEnsemble& ens, const std::filesystem::path& file);
PathEnsemble load_ensemble(const std::filesystem::path& file);

}  // namespace gfi
