#include "canon/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace canon {

double elapsed_ms(const EnumerationReport& report) {
  const double ms = std::chrono::duration<double, std::milli>(report.elapsed).count();
  return std::round(ms * 1000.0) / 1000.0;
}

namespace {

double shown_ms(const EnumerationReport& report, ReportFormat format) { return format.timing ? elapsed_ms(report) : 0.0; }

}  // namespace

std::string report_to_json(const EnumerationReport& report, ReportFormat format) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["A"] = report.rhythm.elements();
  doc["method"] = std::string(to_string(report.method));
  doc["class_count"] = report.class_count();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& b : report.classes) classes.push_back(b.elements());
  doc["classes"] = std::move(classes);
  doc["raw_solution_count"] = report.raw_solution_count;
  doc["elapsed_ms"] = shown_ms(report, format);
  doc["solver_calls"] = report.solver_calls;
  doc["aperiodic"] = report.aperiodic;
  doc["complete"] = report.complete;
  return doc.dump();
}

std::string report_csv_header() {
  return "n,A,method,aperiodic,class_count,raw_solution_count,elapsed_ms,solver_calls,complete";
}

std::string report_to_csv_row(const EnumerationReport& report, ReportFormat format) {
  std::ostringstream out;
  out << report.n << ",\"" << report.rhythm.to_string() << "\"," << to_string(report.method) << ','
      << (report.aperiodic ? 1 : 0) << ',' << report.class_count() << ',' << report.raw_solution_count << ','
      << shown_ms(report, format) << ',' << report.solver_calls << ',' << (report.complete ? 1 : 0);
  return out.str();
}

std::string report_to_text(const EnumerationReport& report, ReportFormat format) {
  std::ostringstream out;
  out << "n = " << report.n << ", A = {" << report.rhythm.to_string() << "}, method " << to_string(report.method)
      << (report.aperiodic ? ", aperiodic complements" : ", all complements") << '\n';
  out << "classes: " << report.class_count() << " (raw " << report.raw_solution_count << ", calls "
      << report.solver_calls << ", " << shown_ms(report, format) << " ms)" << (report.complete ? "" : " INCOMPLETE")
      << '\n';
  for (const auto& b : report.classes) out << b.to_string() << '\n';
  return out.str();
}

}  // namespace canon
