#include "ncosc/report.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncosc/errors.hpp"

namespace ncosc {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string render_corrections_csv(const std::vector<CorrectionRow>& rows) {
  std::ostringstream os;
  os << "n_rho,mu,n_z,E0,dE_pt,dE_fd,dE_paper,dE_derived,res_paper,res_derived,res_fd,"
        "degenerate\n";
  for (const auto& r : rows) {
    os << r.qn.n_rho << ',' << r.qn.mu << ',' << r.qn.n_z << ',' << format_double(r.E0) << ','
       << format_double(r.dE_pt) << ',' << format_double(r.dE_fd) << ','
       << format_double(r.dE_paper) << ',' << format_double(r.dE_derived) << ','
       << format_double(r.res_paper) << ',' << format_double(r.res_derived) << ','
       << format_double(r.res_fd) << ',' << (r.degenerate ? 1 : 0) << '\n';
  }
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  return os.str();
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

void append_corrections_array(std::ostringstream& os, const std::vector<CorrectionRow>& rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "    {\"n_rho\": " << r.qn.n_rho << ", \"mu\": " << r.qn.mu << ", \"n_z\": " << r.qn.n_z
       << ", \"E0\": " << json_number(r.E0) << ", \"dE_pt\": " << json_number(r.dE_pt)
       << ", \"dE_fd\": " << json_number(r.dE_fd) << ", \"dE_paper\": " << json_number(r.dE_paper)
       << ", \"dE_derived\": " << json_number(r.dE_derived)
       << ", \"res_paper\": " << json_number(r.res_paper)
       << ", \"res_derived\": " << json_number(r.res_derived)
       << ", \"res_fd\": " << json_number(r.res_fd)
       << ", \"degenerate\": " << (r.degenerate ? "true" : "false") << "}"
       << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "  ]";
}

}  // namespace

std::string render_report_json(const VerifyReport& report) {
  std::ostringstream os;
  os << "{\n  \"identities\": [\n";
  for (std::size_t i = 0; i < report.identities.size(); ++i) {
    const auto& c = report.identities[i];
    os << "    {\"name\": \"" << json_escape(c.name) << "\", \"status\": \"" << c.status
       << "\", \"residual_terms\": [";
    for (std::size_t t = 0; t < c.residual_terms.size(); ++t) {
      if (t) os << ", ";
      os << '"' << json_escape(c.residual_terms[t]) << '"';
    }
    os << "]}" << (i + 1 < report.identities.size() ? "," : "") << '\n';
  }
  os << "  ],\n  \"corrections\": ";
  append_corrections_array(os, report.corrections);
  os << ",\n  \"conventions\": {\n";
  for (std::size_t i = 0; i < report.conventions.size(); ++i) {
    os << "    \"" << json_escape(report.conventions[i].first) << "\": \""
       << json_escape(report.conventions[i].second) << "\""
       << (i + 1 < report.conventions.size() ? "," : "") << '\n';
  }
  os << "  }\n}\n";
  return os.str();
}

std::string render_corrections_json(const std::vector<CorrectionRow>& rows) {
  std::ostringstream os;
  os << "{\n  \"corrections\": ";
  append_corrections_array(os, rows);
  os << "\n}\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename to " + target.string() + " failed: " + ec.message());
  }
}

}  // namespace ncosc
