#include <gtest/gtest.h>

#include "json.hpp"
#include "qrook/verify.hpp"

using namespace qrook;

TEST(Verify, SuitesPassOnSmallBounds) {
  for (const std::string& suite : suite_names()) {
    VerifyOptions options;
    options.n_max = 3;
    options.s_max = 3;
    const VerifyReport report = run_suite(suite, options);
    EXPECT_FALSE(report.cells.empty()) << suite;
    EXPECT_TRUE(report.all_ok()) << suite << ": " << report.to_json();
  }
}

TEST(Verify, ReportShape) {
  VerifyOptions options;
  options.n_max = 2;
  options.s_max = 1;
  options.timing = false;
  const auto report = nlohmann::json::parse(run_suite("conjecture", options).to_json());
  ASSERT_EQ(report.size(), 4U);
  const auto& first = report[0];
  EXPECT_EQ(first["n"], 1);
  EXPECT_EQ(first["s"], 0);
  EXPECT_EQ(first["status"], "ok");
  EXPECT_EQ(first["lhs"], nlohmann::json::parse(R"({"0":"1"})"));
  EXPECT_EQ(first["rhs"], first["lhs"]);
  EXPECT_EQ(first["millis"], 0);
}

TEST(Verify, OutputIndependentOfJobs) {
  VerifyOptions options;
  options.n_max = 5;
  options.s_max = 4;
  options.timing = false;
  const std::string sequential = run_suite("recurrence", options).to_json();
  options.jobs = 4;
  EXPECT_EQ(run_suite("recurrence", options).to_json(), sequential);
}

TEST(Verify, RejectsBadArguments) {
  VerifyOptions options;
  EXPECT_THROW(run_suite("nonsense", options), std::invalid_argument);
  options.jobs = 0;
  EXPECT_THROW(run_suite("conjecture", options), std::invalid_argument);
}
