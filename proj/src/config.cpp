#include "gfi/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gfi/expr.hpp"

namespace gfi {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    unsigned long long u = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return u;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + v + "'");
  }
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  if (out.empty()) throw ConfigError("empty list for " + key);
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(domain_end > 0.0)) throw ConfigError("run.T must be positive");
  if (grid < 2) throw ConfigError("run.grid must be >= 2");
  if (paths < 1) throw ConfigError("run.paths must be >= 1");
  for (double q : q_values)
    if (q == 0.0) throw ConfigError("feynman.q_values entries must be nonzero");
  if (gfft_q == 0.0) throw ConfigError("gfft.q must be nonzero");
  for (double l : lambda_values)
    if (!(l > 0.0)) throw ConfigError("feynman.lambda_values entries must have Re > 0");
  if (!(gfft_p >= 1.0 && gfft_p <= 2.0)) throw ConfigError("gfft.p must lie in [1,2]");
  if (verify_configs < 1) throw ConfigError("verify.configs must be >= 1");
  // expression entries must parse under the grammar
  try {
    parse_l2(covariance_h, domain_end);
    auto basis = parse_basis_list(feynman_basis, domain_end);
    parse_kernel(feynman_kernel, basis.size());
    parse_l2(feynman_h, domain_end);
    parse_l2(gfft_k, domain_end);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("bad function expression: ") + e.what());
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    std::string full = section.empty() ? key : section + "." + key;

    if (full == "run.T") cfg.domain_end = to_double(full, value);
    else if (full == "run.grid") cfg.grid = to_u64(full, value);
    else if (full == "run.paths") cfg.paths = to_u64(full, value);
    else if (full == "run.seed") cfg.seed = to_u64(full, value);
    else if (full == "covariance.h") cfg.covariance_h = value;
    else if (full == "covariance.times") cfg.covariance_times = to_list(full, value);
    else if (full == "covariance.dump") cfg.dump_ensemble_path = value;
    else if (full == "feynman.basis") cfg.feynman_basis = value;
    else if (full == "feynman.h") cfg.feynman_h = value;
    else if (full == "feynman.kernel") cfg.feynman_kernel = value;
    else if (full == "feynman.q_values") cfg.q_values = to_list(full, value);
    else if (full == "feynman.lambda_values") cfg.lambda_values = to_list(full, value);
    else if (full == "feynman.mc_paths") cfg.feynman_mc_paths = to_u64(full, value);
    else if (full == "gfft.k") cfg.gfft_k = value;
    else if (full == "gfft.q") cfg.gfft_q = to_double(full, value);
    else if (full == "gfft.p") cfg.gfft_p = to_double(full, value);
    else if (full == "gfft.shifts") cfg.gfft_shifts = to_list(full, value);
    else if (full == "verify.configs") cfg.verify_configs = int(to_u64(full, value));
    else if (full == "verify.tol") cfg.verify_tol = to_double(full, value);
    else if (full == "verify.mc_configs") cfg.verify_mc_configs = int(to_u64(full, value));
    else if (full == "verify.mc_paths") cfg.verify_mc_paths = to_u64(full, value);
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + full + "'");
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::vector<L2Fn> parse_basis_list(const std::string& text, double domain_end) {
  std::vector<L2Fn> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_l2(item, domain_end));
  }
  if (out.empty()) throw ConfigError("empty basis list");
  return out;
}

}  // namespace gfi
