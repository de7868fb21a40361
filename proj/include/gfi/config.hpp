#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gfi/l2.hpp"

namespace gfi {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Run configuration, parsed from a flat key-value file with [section]
/// headers (see docs/config_format.md). Function-valued entries hold
/// expressions in the l2/kernel grammar and are parsed on use.
struct RunConfig {
  double domain_end = 1.0;
  std::size_t grid = 256;
  std::size_t paths = 100000;
  std::uint64_t seed = 12345;

  // covariance
  std::string covariance_h = "poly(0,1)";
  std::vector<double> covariance_times = {0.25, 0.5, 0.75, 1.0};
  std::string dump_ensemble_path;  // optional binary dump

  // feynman
  std::string feynman_basis = "poly(1)";  // semicolon-separated member expressions
  std::string feynman_h = "poly(1)";
  std::string feynman_kernel = "term(1, [poly(1); 0.5; 0])";
  std::vector<double> q_values = {1.0, 2.0, -1.0};
  std::vector<double> lambda_values = {0.5, 1.0, 2.0};
  std::size_t feynman_mc_paths = 20000;

  // gfft
  std::string gfft_k = "poly(1)";
  double gfft_q = 1.0;
  double gfft_p = 2.0;
  std::vector<double> gfft_shifts = {-1.0, -0.5, 0.0, 0.5, 1.0};

  // verify
  int verify_configs = 25;
  double verify_tol = 1e-10;
  int verify_mc_configs = 0;
  std::size_t verify_mc_paths = 20000;

  void validate() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& file);

/// Orthogonal-set helper: parse a semicolon-separated member list.
std::vector<L2Fn> parse_basis_list(const std::string& text, double domain_end);

}  // namespace gfi
