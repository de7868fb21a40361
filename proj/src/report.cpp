#include "gfi/report.hpp"

#include <cstdio>
#include <sstream>

namespace gfi {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_report_json(std::string& out, const IdentityReport& r) {
  out += "{\"name\":\"" + json_escape(r.name) + "\"";
  out += ",\"lhs_re\":" + fmt_g17(r.lhs.real());
  out += ",\"lhs_im\":" + fmt_g17(r.lhs.imag());
  out += ",\"rhs_re\":" + fmt_g17(r.rhs.real());
  out += ",\"rhs_im\":" + fmt_g17(r.rhs.imag());
  out += ",\"abs_gap\":" + fmt_g17(r.abs_gap);
  out += ",\"rel_gap\":" + fmt_g17(r.rel_gap);
  out += ",\"tol\":" + fmt_g17(r.tol);
  out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"params\":{";
  bool first = true;
  if (r.mc_mode) {
    out += "\"mc\":\"1\",\"lhs_se\":\"" + fmt_g17(r.lhs_se) + "\",\"rhs_se\":\"" + fmt_g17(r.rhs_se) +
           "\"";
    first = false;
  }
  for (const auto& [k, v] : r.params) {
    if (!first) out += ",";
    out += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
    first = false;
  }
  out += "}}";
}

}  // namespace

std::string reports_to_json(std::span<const IdentityReport> reports) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += "  ";
    append_report_json(out, reports[i]);
    if (i + 1 < reports.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

std::string reports_to_csv(std::span<const IdentityReport> reports) {
  std::string out = "name,lhs_re,lhs_im,rhs_re,rhs_im,lhs_se,rhs_se,abs_gap,rel_gap,tol,pass,seed\n";
  for (const auto& r : reports) {
    out += r.name + "," + fmt_g17(r.lhs.real()) + "," + fmt_g17(r.lhs.imag()) + "," +
           fmt_g17(r.rhs.real()) + "," + fmt_g17(r.rhs.imag()) + "," + fmt_g17(r.lhs_se) + "," +
           fmt_g17(r.rhs_se) + "," + fmt_g17(r.abs_gap) + "," + fmt_g17(r.rel_gap) + "," +
           fmt_g17(r.tol) + "," + (r.pass ? "1" : "0") + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

std::string covariance_to_csv(std::span<const CovarianceCell> cells) {
  std::string out = "s,t,empirical,exact,se,pass\n";
  for (const auto& c : cells) {
    out += fmt_g17(c.s) + "," + fmt_g17(c.t) + "," + fmt_g17(c.empirical) + "," + fmt_g17(c.exact) +
           "," + fmt_g17(c.se) + "," + (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

std::string covariance_to_json(std::span<const CovarianceCell> cells) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    out += "  {\"s\":" + fmt_g17(c.s) + ",\"t\":" + fmt_g17(c.t) +
           ",\"empirical\":" + fmt_g17(c.empirical) + ",\"exact\":" + fmt_g17(c.exact) +
           ",\"se\":" + fmt_g17(c.se) + ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    if (i + 1 < cells.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

}  // namespace gfi
