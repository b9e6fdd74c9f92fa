#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewcoh/group.hpp"

namespace skewcoh {

/// {"field": {"type": "prime", "p": 3} | {"type": "rational"},
///  "generator": [[1, 1], [0, 1]], "deformation": "builtin"}
/// Entries are integers or "a/b" strings.
struct JobSpec {
  FieldSpec field;
  Matrix generator;
  std::optional<std::string> deformation;
};

/// Throws Error(InvalidInput) on malformed documents and the field errors of
/// FieldSpec / Scalar on bad values.
JobSpec parse_job(const nlohmann::json& doc);
JobSpec load_job(const std::string& path);

struct RunOptions {
  std::size_t max_order = CyclicGroup::kDefaultMaxOrder;
  bool nonmodular_check = false;
  std::optional<std::int64_t> deform_prime;
  std::size_t hilbert_degree = 4;
};

struct ElementSummary {
  std::size_t index = 0;
  std::size_t codim = 0;
  std::string chi;
  bool reflection = false;
  bool nondiagonalizable_reflection = false;
  bool operator==(const ElementSummary&) const = default;
};

struct GroupSummary {
  std::string field;
  std::size_t n = 0;
  std::size_t order = 0;
  std::vector<ElementSummary> elements;
  std::size_t transfer_image_dim = 0;
  std::vector<std::vector<std::string>> transfer_image_basis;
  bool operator==(const GroupSummary&) const = default;
};

struct PieceEntry {
  std::string name;
  std::size_t dim = 0;
  bool operator==(const PieceEntry&) const = default;
};

struct FormulaEntry {
  std::size_t index = 0;
  std::string summand_case;
  std::vector<PieceEntry> pieces;
  std::size_t total = 0;
  bool operator==(const FormulaEntry&) const = default;
};

struct FormulaSection {
  std::vector<FormulaEntry> per_element;
  std::size_t total_dim = 0;
  bool operator==(const FormulaSection&) const = default;
};

struct OracleEntry {
  std::size_t index = 0;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::size_t hh_dim = 0;
  bool operator==(const OracleEntry&) const = default;
};

struct OracleSection {
  std::vector<OracleEntry> per_element;
  std::size_t total_dim = 0;
  /// The assembled complex is only built when it is small enough.
  bool assembled_checked = false;
  std::size_t assembled_z_dim = 0;
  std::size_t assembled_b_dim = 0;
  bool operator==(const OracleSection&) const = default;
};

struct ComparisonSection {
  bool passed = false;
  std::vector<std::size_t> mismatched_elements;
  bool assembled_agrees = false;
  bool operator==(const ComparisonSection&) const = default;
};

struct CrosscheckSection {
  std::string reflections;
  std::string determinant;
  std::vector<std::string> violations;
  bool operator==(const CrosscheckSection&) const = default;
};

struct CochainEntry {
  std::vector<std::string> lambda;
  /// alpha[r][p]: component r of alpha on the p-th pair a < b.
  std::vector<std::vector<std::string>> alpha;
  bool operator==(const CochainEntry&) const = default;
};

struct RepresentativeSet {
  std::size_t index = 0;
  std::string alpha_tag;   // h
  std::string lambda_tag;  // hg
  std::vector<CochainEntry> basis;
  bool operator==(const RepresentativeSet&) const = default;
};

struct WitnessEntry {
  std::string word;
  std::size_t first_position = 0;
  std::size_t second_position = 0;
  std::string first_result;
  std::string second_result;
  bool operator==(const WitnessEntry&) const = default;
};

struct DeformationSection {
  std::string preset;
  std::int64_t prime = 0;
  std::vector<std::string> bracket;  // one rendered FG element per i
  bool bracket_zero = false;
  bool confluent = false;
  std::size_t words_checked = 0;
  std::optional<WitnessEntry> witness;
  bool hilbert_run = false;
  std::size_t hilbert_degree = 0;
  std::size_t hilbert_count = 0;
  std::size_t hilbert_expected = 0;
  bool hilbert_passed = false;
  std::string note;
  bool operator==(const DeformationSection&) const = default;
};

struct Report {
  std::string command;
  std::optional<GroupSummary> group;
  std::optional<FormulaSection> formula;
  std::optional<OracleSection> oracle;
  std::optional<ComparisonSection> comparison;
  std::optional<CrosscheckSection> crosscheck;
  std::optional<std::vector<RepresentativeSet>> representatives;
  std::optional<DeformationSection> deformation;
  bool operator==(const Report&) const = default;

  /// False when any verification in the report failed.
  bool ok() const;
};

Report cmd_analyze(const JobSpec& job, const RunOptions& options);
Report cmd_compare(const JobSpec& job, const RunOptions& options);
Report cmd_reps(const JobSpec& job, const RunOptions& options);
Report cmd_deform(const JobSpec& job, const RunOptions& options);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);
std::string render_text(const Report& report);

}  // namespace skewcoh
