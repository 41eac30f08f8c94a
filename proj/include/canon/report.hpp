#pragma once

#include <string>

#include "canon/enumerate.hpp"

namespace canon {

struct ReportFormat {
  /// When false, elapsed_ms is written as 0 so that repeated runs are byte-identical.
  bool timing = true;
};

/// {"n":..,"A":[..],"method":"SAT","class_count":..,"classes":[[..]],"raw_solution_count":..,
///  "elapsed_ms":..,"solver_calls":..,"aperiodic":..,"complete":..}
std::string report_to_json(const EnumerationReport& report, ReportFormat format = {});

std::string report_csv_header();
std::string report_to_csv_row(const EnumerationReport& report, ReportFormat format = {});

/// Human-readable summary followed by one class per line.
std::string report_to_text(const EnumerationReport& report, ReportFormat format = {});

double elapsed_ms(const EnumerationReport& report);

}  // namespace canon
