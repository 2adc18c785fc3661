#pragma once

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cotzeta/fourier.hpp"
#include "cotzeta/grid.hpp"
#include "cotzeta/inequality.hpp"
#include "cotzeta/replicative.hpp"

namespace cotzeta {

/// Numbers in reports are serialized with 17 significant digits so a report
/// round-trips the exact doubles it was built from.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Command-independent tabular report: echoed config, a verdict, scalar
/// summary fields, and uniform numeric rows.  Every CLI command funnels
/// through this so JSON and CSV stay byte-deterministic for a fixed config.
struct ReportTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;   // key, preformatted value
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> summary;  // key, preformatted value
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
};

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (const char c : s) {
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

// config/summary values are preformatted: numbers go through fmt17,
// anything else is emitted as a JSON string.
inline bool looks_numeric(const std::string& v) {
  if (v.empty()) return false;
  char* end = nullptr;
  std::strtod(v.c_str(), &end);
  return end == v.c_str() + v.size();
}

inline void write_kv_json(std::ostream& os, const std::pair<std::string, std::string>& kv) {
  os << '"' << json_escape(kv.first) << "\": ";
  if (looks_numeric(kv.second)) {
    os << kv.second;
  } else {
    os << '"' << json_escape(kv.second) << '"';
  }
}

}  // namespace detail

inline void write_json(std::ostream& os, const ReportTable& t) {
  os << "{\n  \"command\": \"" << detail::json_escape(t.command) << "\",\n";
  os << "  \"config\": {";
  for (std::size_t i = 0; i < t.config.size(); ++i) {
    os << (i ? ", " : "");
    detail::write_kv_json(os, t.config[i]);
  }
  os << "},\n  \"verdict\": \"" << detail::json_escape(t.verdict) << "\"";
  for (const auto& kv : t.summary) {
    os << ",\n  ";
    detail::write_kv_json(os, kv);
  }
  if (!t.notes.empty()) {
    os << ",\n  \"notes\": [";
    for (std::size_t i = 0; i < t.notes.size(); ++i) {
      os << (i ? ", " : "") << '"' << detail::json_escape(t.notes[i]) << '"';
    }
    os << "]";
  }
  os << ",\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? ", " : "") << '"' << detail::json_escape(t.columns[i]) << '"';
  }
  os << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "    [";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      os << (c ? ", " : "") << fmt17(t.rows[r][c]);
    }
    os << (r + 1 < t.rows.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
}

inline void write_csv(std::ostream& os, const ReportTable& t) {
  os << "# command=" << t.command << "\n";
  for (const auto& kv : t.config) os << "# " << kv.first << "=" << kv.second << "\n";
  os << "# verdict=" << t.verdict << "\n";
  for (const auto& kv : t.summary) os << "# " << kv.first << "=" << kv.second << "\n";
  for (const auto& n : t.notes) os << "# note: " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << fmt17(row[c]);
    }
    os << "\n";
  }
}

/// Column layouts for the library report types.

inline ReportTable to_table(const MarginReport& r) {
  ReportTable t;
  t.verdict = r.pass ? "pass" : "fail";
  t.summary = {{"inequality_id", r.inequality_id},
               {"min_margin", fmt17(r.min_margin)},
               {"argmin", fmt17(r.argmin)},
               {"eval_err_max", fmt17(r.eval_err_max)}};
  t.columns = {"x", "lhs", "rhs", "margin", "err"};
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    t.rows.push_back({r.points[i], r.lhs[i], r.rhs[i], r.margins[i], r.errs[i]});
  }
  return t;
}

inline ReportTable to_table(const CertificateReport& r) {
  ReportTable t;
  t.verdict = r.all_certified ? "pass" : "fail";
  t.summary = {{"epsilon", fmt17(r.epsilon)},
               {"subintervals", fmt17(static_cast<double>(r.subintervals.size()))}};
  t.notes = {r.analytic_edge_note};
  t.columns = {"a", "b", "Z_lower", "log_upper", "err", "certified"};
  for (const auto& iv : r.subintervals) {
    t.rows.push_back({iv.a, iv.b, iv.z_lower, iv.log_upper, iv.err, iv.certified ? 1.0 : 0.0});
  }
  return t;
}

inline ReportTable to_table(const ReplicativeReport& r) {
  ReportTable t;
  t.verdict = r.pass ? "pass" : "fail";
  t.summary = {{"candidate", r.candidate},
               {"weight", fmt17(r.weight)},
               {"max_residual", fmt17(r.max_residual)},
               {"tolerance", fmt17(r.tolerance)},
               {"singular_cells", fmt17(static_cast<double>(r.failures.size()))}};
  t.columns = {"p", "x", "residual"};
  for (std::size_t pi = 0; pi < r.multipliers.size(); ++pi) {
    for (std::size_t gi = 0; gi < r.points.size(); ++gi) {
      t.rows.push_back({static_cast<double>(r.multipliers[pi]), r.points[gi],
                        r.residuals[pi][gi]});
    }
  }
  return t;
}

inline ReportTable to_table(const FourierReport& r) {
  ReportTable t;
  t.summary = {{"function", r.function_name},
               {"quadrature_points", fmt17(static_cast<double>(r.quadrature_points))},
               {"quadrature_error_estimate", fmt17(r.quadrature_error_estimate)}};
  t.columns = {"n", "re_a_n", "im_a_n", "abs_a_n"};
  for (std::size_t n = 0; n < r.coefficients.size(); ++n) {
    const auto& a = r.coefficients[n];
    t.rows.push_back({static_cast<double>(n), a.real(), a.imag(), std::abs(a)});
  }
  return t;
}

}  // namespace cotzeta
