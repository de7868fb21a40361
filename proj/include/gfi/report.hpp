#pragma once

#include <string>

#include "gfi/theorems.hpp"

namespace gfi {

/// Doubles formatted with 17 significant digits; the writers emit fields in
/// a fixed order so identical inputs give byte-identical documents.
std::string fmt_g17(double v);

std::string reports_to_json(std::span<const IdentityReport> reports);
std::string reports_to_csv(std::span<const IdentityReport> reports);

struct CovarianceCell {
  double s = 0.0, t = 0.0;
  double empirical = 0.0;
  double exact = 0.0;
  double se = 0.0;
  bool pass = false;
};

std::string covariance_to_csv(std::span<const CovarianceCell> cells);
std::string covariance_to_json(std::span<const CovarianceCell> cells);

}  // namespace gfi
