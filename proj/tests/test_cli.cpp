#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "skewcoh/report.hpp"

using namespace skewcoh;
using nlohmann::json;

namespace {

const std::string kCli = SKEWCOH_CLI_PATH;
const std::string kJobs = SKEWCOH_JOBS_DIR;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

JobSpec job(const std::string& text) { return parse_job(json::parse(text)); }

ErrorCode parse_error(const std::string& text) {
  try {
    job(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST(JobSpec, Parses) {
  const JobSpec t = job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]]})");
  EXPECT_EQ(t.field, FieldSpec::prime(3));
  EXPECT_EQ(t.generator, Matrix::from_ints(FieldSpec::prime(3), {{1, 1}, {0, 1}}));
  EXPECT_FALSE(t.deformation.has_value());
  const JobSpec r = job(R"({"field": {"type": "rational"}, "generator": [["1/2", 0], [0, "-3"]], "deformation": "zero"})");
  EXPECT_EQ(r.generator(0, 0), Scalar::parse(FieldSpec::rational(), "1/2"));
  EXPECT_EQ(r.deformation, std::optional<std::string>("zero"));
  EXPECT_EQ(job(R"({"field": {"type": "prime", "p": 5}, "generator": [[7]]})").generator(0, 0).residue(), 2);
}

TEST(JobSpec, RejectsBadInput) {
  EXPECT_EQ(parse_error(R"([])"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"generator": [[1]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"field": {"type": "complex"}, "generator": [[1]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"field": {"type": "prime", "p": 2}, "generator": [[1]]})"), ErrorCode::CharTwo);
  EXPECT_EQ(parse_error(R"({"field": {"type": "prime", "p": 4}, "generator": [[1]]})"), ErrorCode::InvalidField);
  EXPECT_EQ(parse_error(R"({"field": {"type": "rational"}, "generator": [[1, 0], [0]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"field": {"type": "rational"}, "generator": [[1.5]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"field": {"type": "prime", "p": 3}, "generator": [["1/3"]]})"), ErrorCode::DivisionByZero);
  EXPECT_EQ(parse_error(R"({"field": {"type": "rational"}, "generator": []})"), ErrorCode::InvalidInput);
}

TEST(Commands, ReportContents) {
  RunOptions options;
  options.nonmodular_check = true;
  const JobSpec t = job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]]})");
  const Report analyze = cmd_analyze(t, options);
  EXPECT_EQ(analyze.formula->total_dim, 6u);
  EXPECT_EQ(analyze.crosscheck->reflections, "not-applicable");
  EXPECT_TRUE(analyze.ok());

  const Report compare = cmd_compare(job(R"({"field": {"type": "prime", "p": 5}, "generator": [[1, 0], [0, -1]]})"), options);
  EXPECT_TRUE(compare.comparison->passed);
  EXPECT_TRUE(compare.oracle->assembled_checked);
  EXPECT_EQ(compare.oracle->total_dim, 1u);
  EXPECT_EQ(compare.crosscheck->reflections, "pass");

  const Report gl4 = cmd_compare(
      job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1,1,0,0],[0,1,1,0],[0,0,1,0],[0,0,0,-1]]})"), options);
  EXPECT_TRUE(gl4.comparison->passed);
  EXPECT_GT(gl4.group->transfer_image_dim, 0u);

  const Report reps = cmd_reps(t, options);
  ASSERT_EQ(reps.representatives->size(), 3u);
  for (const auto& set : *reps.representatives) EXPECT_EQ(set.basis.size(), 2u);
  EXPECT_EQ((*reps.representatives)[1].alpha_tag, "g");
  EXPECT_EQ((*reps.representatives)[1].lambda_tag, "g^2");

  const Report deform_zero = cmd_deform(
      job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]], "deformation": "zero"})"), options);
  EXPECT_TRUE(deform_zero.ok());
  EXPECT_EQ(deform_zero.deformation->hilbert_count, 45u);

  const Report adversarial = cmd_deform(
      job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]], "deformation": "adversarial"})"), options);
  EXPECT_FALSE(adversarial.ok());
  EXPECT_EQ(adversarial.deformation->witness->word, "g v2 v1");
  EXPECT_FALSE(adversarial.deformation->hilbert_run);

  RunOptions five = options;
  five.deform_prime = 5;
  EXPECT_EQ(cmd_deform(t, five).deformation->prime, 5);
  EXPECT_THROW(cmd_deform(job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]], "deformation": "nope"})"), options), Error);
}

TEST(Commands, JsonRoundTrips) {
  RunOptions options;
  options.nonmodular_check = true;
  const JobSpec t = job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]]})");
  const JobSpec q = job(R"({"field": {"type": "rational"}, "generator": [[0, -1], [1, 0]]})");
  const JobSpec adv = job(R"({"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]], "deformation": "adversarial"})");
  for (const Report& r : {cmd_analyze(t, options), cmd_compare(q, options), cmd_reps(t, options), cmd_reps(q, options),
                          cmd_deform(t, options), cmd_deform(adv, options)}) {
    const json emitted = to_json(r);
    EXPECT_EQ(report_from_json(json::parse(emitted.dump())), r) << r.command;
    EXPECT_FALSE(render_text(r).empty());
  }
  EXPECT_THROW(report_from_json(json::parse(R"({"formula": 3})")), Error);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("analyze " + kJobs + "/transvection_f3.json"), 0);
  EXPECT_EQ(run("analyze " + kJobs + "/transvection_f3.json --json"), 0);
  EXPECT_EQ(run("compare " + kJobs + "/gl4_f3.json --nonmodular-check"), 0);
  EXPECT_EQ(run("compare " + kJobs + "/diag23_f5.json --nonmodular-check --json"), 0);
  EXPECT_EQ(run("reps " + kJobs + "/order8_f3.json"), 0);
  EXPECT_EQ(run("deform " + kJobs + "/deform_zero_f3.json"), 0);
  EXPECT_EQ(run("deform " + kJobs + "/deform_adversarial_f3.json"), 1);
  EXPECT_EQ(run("analyze " + kJobs + "/infinite_order_q.json"), 2);
  EXPECT_EQ(run("analyze " + kJobs + "/transvection_f7.json --max-order 5"), 2);
  EXPECT_EQ(run("analyze " + kJobs + "/does_not_exist.json"), 2);
  EXPECT_EQ(run("frobnicate " + kJobs + "/transvection_f3.json"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST(Cli, MaxOrderEnvironmentAndFlag) {
  const std::string job7 = kJobs + "/transvection_f7.json";
  EXPECT_EQ(std::system(("SKEWCOH_MAX_ORDER=5 " + kCli + " analyze " + job7 + " > /dev/null 2>&1").c_str()) >> 8, 2);
  EXPECT_EQ(std::system(("SKEWCOH_MAX_ORDER=5 " + kCli + " analyze " + job7 + " --max-order 7 > /dev/null 2>&1").c_str()) >> 8, 0);
  EXPECT_EQ(std::system(("SKEWCOH_MAX_ORDER=abc " + kCli + " analyze " + job7 + " > /dev/null 2>&1").c_str()) >> 8, 2);
}
