#include "asep/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace asep {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string tv_curve_csv(const std::vector<TvEstimate>& rows) {
  std::string out = "c,t,lower,lower_se,upper,upper_se,exact,predicted\n";
  for (const TvEstimate& r : rows) {
    out += format_double(r.c) + ',' + format_double(r.t) + ',' +
           format_double(r.lower) + ',' + format_double(r.lower_se) + ',' +
           format_double(r.upper) + ',' + format_double(r.upper_se) + ',';
    if (r.exact) out += format_double(*r.exact);
    out += ',' + format_double(r.predicted) + '\n';
  }
  return out;
}

std::string profile_csv(const std::vector<ProfilePoint>& rows) {
  std::string out = "c,empirical,se,predicted,gap\n";
  for (const ProfilePoint& r : rows)
    out += format_double(r.c) + ',' + format_double(r.empirical) + ',' +
           format_double(r.se) + ',' + format_double(r.predicted) + ',' +
           format_double(r.gap) + '\n';
  return out;
}

std::string event_b_csv(const std::vector<EventBEstimate>& rows) {
  std::string out = "c,t,estimate,se,predicted\n";
  for (const EventBEstimate& r : rows)
    out += format_double(r.c) + ',' + format_double(r.t) + ',' +
           format_double(r.estimate) + ',' + format_double(r.se) + ',' +
           format_double(r.predicted) + '\n';
  return out;
}

std::string identity_csv(const IdentityMcEstimate& row) {
  std::string out = "lhs,lhs_se,rhs,rhs_se\n";
  out += format_double(row.lhs) + ',' + format_double(row.lhs_se) + ',' +
         format_double(row.rhs) + ',' + format_double(row.rhs_se) + '\n';
  return out;
}

std::string hitting_csv(const std::vector<HittingSample>& rows) {
  std::string out = "rep,time,censored\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out += std::to_string(i) + ',' + format_double(rows[i].time) + ',' +
           (rows[i].censored ? "1" : "0") + '\n';
  return out;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string run_manifest_json(
    const std::string& subcommand,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    std::uint64_t seed, const std::string& version) {
  std::string out = "{\n  \"subcommand\": " + json_quote(subcommand) +
                    ",\n  \"version\": " + json_quote(version) +
                    ",\n  \"seed\": " + std::to_string(seed) +
                    ",\n  \"parameters\": {";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += json_quote(parameters[i].first) + ": " + parameters[i].second;
  }
  out += parameters.empty() ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace asep
