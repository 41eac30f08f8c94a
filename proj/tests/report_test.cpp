#include <gtest/gtest.h>

#include <json.hpp>

#include "canon/report.hpp"

namespace canon {
namespace {

EnumerationReport sample() {
  EnumerationReport r;
  r.n = 9;
  r.rhythm = Rhythm(9, {0, 1, 5});
  r.method = Method::sat;
  r.aperiodic = false;
  r.classes = {Rhythm(9, {0, 3, 6})};
  r.raw_solution_count = 3;
  r.elapsed = std::chrono::microseconds(1500);
  r.solver_calls = 2;
  return r;
}

TEST(ReportTest, JsonFieldsInOrder) {
  EXPECT_EQ(report_to_json(sample(), {false}),
            R"({"n":9,"A":[0,1,5],"method":"SAT","class_count":1,"classes":[[0,3,6]],"raw_solution_count":3,)"
            R"("elapsed_ms":0.0,"solver_calls":2,"aperiodic":false,"complete":true})");
  const auto doc = nlohmann::json::parse(report_to_json(sample()));
  EXPECT_DOUBLE_EQ(doc["elapsed_ms"].get<double>(), 1.5);
}

TEST(ReportTest, Csv) {
  EXPECT_EQ(report_csv_header(), "n,A,method,aperiodic,class_count,raw_solution_count,elapsed_ms,solver_calls,complete");
  EXPECT_EQ(report_to_csv_row(sample(), {false}), R"(9,"0,1,5",SAT,0,1,3,0,2,1)");
  EXPECT_EQ(report_to_csv_row(sample()), R"(9,"0,1,5",SAT,0,1,3,1.5,2,1)");
}

TEST(ReportTest, Text) {
  const std::string text = report_to_text(sample(), {false});
  EXPECT_NE(text.find("classes: 1"), std::string::npos);
  EXPECT_NE(text.find("\n0,3,6\n"), std::string::npos);
  auto incomplete = sample();
  incomplete.complete = false;
  EXPECT_NE(report_to_text(incomplete).find("INCOMPLETE"), std::string::npos);
}

}  // namespace
}  // namespace canon
