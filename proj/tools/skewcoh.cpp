// skewcoh: degree -1 Hochschild cohomology of S(V) x| G for cyclic G.
//
//   skewcoh analyze|compare|reps|deform <job.json> [--json] [--nonmodular-check]
//           [--max-order K] [--deform-prime p] [--degree d]
//
// Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skewcoh/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

int exit_code_for(skewcoh::ErrorCode code) {
  using skewcoh::ErrorCode;
  switch (code) {
    case ErrorCode::NotACocycle:
    case ErrorCode::PrerequisiteFailed:
    case ErrorCode::InternalInvariant:
      return kExitVerification;
    default:
      return kExitInput;
  }
}

std::optional<std::size_t> env_max_order() {
  const char* raw = std::getenv("SKEWCOH_MAX_ORDER");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw skewcoh::Error(skewcoh::ErrorCode::InvalidInput, std::string("bad SKEWCOH_MAX_ORDER '") + raw + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree -1 Hochschild cohomology of skew group algebras of cyclic groups"};
  app.require_subcommand(1);

  std::string job_path;
  bool as_json = false;
  bool nonmodular = false;
  std::size_t max_order = 0;
  std::int64_t deform_prime = 0;
  std::size_t degree = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("job", job_path, "job file (JSON)")->required();
    sub->add_flag("--json", as_json, "print the report as JSON");
    sub->add_flag("--nonmodular-check", nonmodular, "run the coprime-order cross-check");
    sub->add_option("--max-order", max_order, "cap on the group order (overrides SKEWCOH_MAX_ORDER)")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* analyze = app.add_subcommand("analyze", "closed-form dimension, element by element");
  CLI::App* compare = app.add_subcommand("compare", "closed form against the cochain oracle");
  CLI::App* reps = app.add_subcommand("reps", "distinguished representative cocycles");
  CLI::App* deform = app.add_subcommand("deform", "square bracket, confluence and Hilbert count");
  for (auto* sub : {analyze, compare, reps, deform}) add_common(sub);
  deform->add_option("--deform-prime", deform_prime, "prime for the builtin transvection parameters")
      ->check(CLI::PositiveNumber);
  deform->add_option("--degree", degree, "degree bound for the Hilbert count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kExitOk : kExitInput;
  }

  try {
    skewcoh::RunOptions options;
    if (auto env = env_max_order()) options.max_order = *env;
    if (max_order > 0) options.max_order = max_order;
    options.nonmodular_check = nonmodular;
    if (deform_prime > 0) options.deform_prime = deform_prime;
    options.hilbert_degree = degree;

    const skewcoh::JobSpec job = skewcoh::load_job(job_path);
    skewcoh::Report report;
    if (analyze->parsed()) {
      report = skewcoh::cmd_analyze(job, options);
    } else if (compare->parsed()) {
      report = skewcoh::cmd_compare(job, options);
    } else if (reps->parsed()) {
      report = skewcoh::cmd_reps(job, options);
    } else {
      report = skewcoh::cmd_deform(job, options);
    }

    if (as_json) {
      std::cout << skewcoh::to_json(report).dump(2) << "\n";
    } else {
      std::cout << skewcoh::render_text(report);
    }
    return report.ok() ? kExitOk : kExitVerification;
  } catch (const skewcoh::Error& e) {
    std::cerr << "skewcoh: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
