#include "skewcoh/report.hpp"

#include <fstream>
#include <sstream>

#include "skewcoh/deformation.hpp"
#include "skewcoh/formula.hpp"
#include "skewcoh/oracle.hpp"

namespace skewcoh {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxAssembledWidth = 600;

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string power_name(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "g";
  return "g^" + std::to_string(k);
}

std::string render_group_element(FieldSpec field, const GroupAlgebraElement& x) {
  AlgebraElement e(field);
  for (std::size_t k = 0; k < x.size(); ++k) e.add(Monomial{0, 0, k}, x[k]);
  return e.to_string();
}

Scalar parse_entry(FieldSpec field, const json& entry) {
  if (entry.is_number_integer()) return Scalar(field, entry.get<std::int64_t>());
  if (entry.is_string()) return Scalar::parse(field, entry.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "matrix entries must be integers or \"a/b\" strings");
}

CyclicGroup make_group(const JobSpec& job, const RunOptions& options) {
  return CyclicGroup::from_generator(job.generator, options.max_order);
}

GroupSummary summarize(const CyclicGroup& group) {
  GroupSummary out;
  out.field = group.field().name();
  out.n = group.dim();
  out.order = group.order();
  for (const auto& data : all_element_data(group)) {
    out.elements.push_back({data.index, data.codim, data.chi_of_generator.to_string(), is_reflection(data),
                            is_nondiagonalizable_reflection(group, data.index)});
  }
  const TransferData t = transfer(group);
  out.transfer_image_dim = t.image.dim();
  for (const auto& v : t.image.basis_vectors()) out.transfer_image_basis.push_back(strings(v));
  return out;
}

FormulaSection formula_section(const CohomologyReport& report) {
  FormulaSection out;
  for (const auto& s : report.per_element) {
    FormulaEntry e{s.element_index, to_string(s.summand_case), {}, s.total};
    for (const auto& [name, dim] : s.pieces) e.pieces.push_back({name, dim});
    out.per_element.push_back(std::move(e));
  }
  out.total_dim = report.total_dim;
  return out;
}

CrosscheckSection crosscheck_section(const CrosscheckReport& r) {
  return {to_string(r.reflections), to_string(r.determinant), r.violations};
}

DeformationParams deformation_params(const JobSpec& job, const RunOptions& options, std::string& preset,
                                     std::int64_t& prime) {
  preset = job.deformation.value_or("builtin");
  if (preset == "zero") {
    const CyclicGroup group = make_group(job, options);
    prime = group.field().characteristic();
    return zero_params(group);
  }
  if (preset != "builtin" && preset != "adversarial") {
    throw Error(ErrorCode::InvalidInput, "unknown deformation preset '" + preset + "'");
  }
  prime = options.deform_prime.value_or(job.field.is_prime() ? job.field.characteristic() : 3);
  return preset == "builtin" ? builtin_transvection_gamma(prime) : adversarial_params(prime);
}

// json helpers

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ElementSummary, index, codim, chi, reflection, nondiagonalizable_reflection)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupSummary, field, n, order, elements, transfer_image_dim, transfer_image_basis)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PieceEntry, name, dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FormulaEntry, index, summand_case, pieces, total)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FormulaSection, per_element, total_dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleEntry, index, z_dim, b_dim, hh_dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleSection, per_element, total_dim, assembled_checked, assembled_z_dim,
                                   assembled_b_dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComparisonSection, passed, mismatched_elements, assembled_agrees)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CrosscheckSection, reflections, determinant, violations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CochainEntry, lambda, alpha)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepresentativeSet, index, alpha_tag, lambda_tag, basis)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WitnessEntry, word, first_position, second_position, first_result, second_result)

void to_json(json& j, const DeformationSection& d) {
  j = json{{"preset", d.preset},
           {"prime", d.prime},
           {"bracket", d.bracket},
           {"bracket_zero", d.bracket_zero},
           {"confluent", d.confluent},
           {"words_checked", d.words_checked},
           {"hilbert_run", d.hilbert_run},
           {"hilbert_degree", d.hilbert_degree},
           {"hilbert_count", d.hilbert_count},
           {"hilbert_expected", d.hilbert_expected},
           {"hilbert_passed", d.hilbert_passed},
           {"note", d.note}};
  put_optional(j, "witness", d.witness);
}

void from_json(const json& j, DeformationSection& d) {
  j.at("preset").get_to(d.preset);
  j.at("prime").get_to(d.prime);
  j.at("bracket").get_to(d.bracket);
  j.at("bracket_zero").get_to(d.bracket_zero);
  j.at("confluent").get_to(d.confluent);
  j.at("words_checked").get_to(d.words_checked);
  j.at("hilbert_run").get_to(d.hilbert_run);
  j.at("hilbert_degree").get_to(d.hilbert_degree);
  j.at("hilbert_count").get_to(d.hilbert_count);
  j.at("hilbert_expected").get_to(d.hilbert_expected);
  j.at("hilbert_passed").get_to(d.hilbert_passed);
  j.at("note").get_to(d.note);
  d.witness = get_optional<WitnessEntry>(j, "witness");
}

JobSpec parse_job(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "job must be a JSON object");
  if (!doc.contains("field") || !doc.at("field").is_object()) throw Error(ErrorCode::InvalidInput, "missing \"field\"");
  const json& f = doc.at("field");
  const std::string type = f.value("type", "");
  std::optional<FieldSpec> field;
  if (type == "prime") {
    if (!f.contains("p") || !f.at("p").is_number_integer()) throw Error(ErrorCode::InvalidInput, "prime field needs integer \"p\"");
    field = FieldSpec::prime(f.at("p").get<std::int64_t>());
  } else if (type == "rational") {
    field = FieldSpec::rational();
  } else {
    throw Error(ErrorCode::InvalidInput, "field type must be \"prime\" or \"rational\"");
  }

  if (!doc.contains("generator") || !doc.at("generator").is_array() || doc.at("generator").empty()) {
    throw Error(ErrorCode::InvalidInput, "missing \"generator\" matrix");
  }
  const json& rows = doc.at("generator");
  const std::size_t n = rows.size();
  Matrix generator(*field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw Error(ErrorCode::InvalidInput, "generator must be square");
    for (std::size_t c = 0; c < n; ++c) generator(r, c) = parse_entry(*field, rows[r][c]);
  }

  std::optional<std::string> deformation;
  if (doc.contains("deformation")) {
    if (!doc.at("deformation").is_string()) throw Error(ErrorCode::InvalidInput, "\"deformation\" must be a string");
    deformation = doc.at("deformation").get<std::string>();
  }
  return JobSpec{*field, std::move(generator), std::move(deformation)};
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return parse_job(doc);
}

bool Report::ok() const {
  if (comparison && !comparison->passed) return false;
  if (crosscheck && (crosscheck->reflections == "fail" || crosscheck->determinant == "fail")) return false;
  if (deformation) {
    const auto& d = *deformation;
    if (!d.bracket_zero || !d.confluent || !d.hilbert_run || !d.hilbert_passed) return false;
  }
  return true;
}

Report cmd_analyze(const JobSpec& job, const RunOptions& options) {
  const CyclicGroup group = make_group(job, options);
  const CohomologyReport formula = full_report(group);
  Report out;
  out.command = "analyze";
  out.group = summarize(group);
  out.formula = formula_section(formula);
  if (options.nonmodular_check) out.crosscheck = crosscheck_section(nonmodular_crosscheck(group, formula));
  return out;
}

Report cmd_compare(const JobSpec& job, const RunOptions& options) {
  const CyclicGroup group = make_group(job, options);
  const CohomologyReport formula = full_report(group);
  Report out;
  out.command = "compare";
  out.group = summarize(group);
  out.formula = formula_section(formula);

  OracleSection oracle;
  ComparisonSection comparison;
  std::size_t z_sum = 0;
  std::size_t b_sum = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const PerElementComplex complex = per_element_cohomology(group, i);
    oracle.per_element.push_back({i, complex.z_dim, complex.b_dim, complex.hh_dim});
    oracle.total_dim += complex.hh_dim;
    z_sum += complex.z_dim;
    b_sum += complex.b_dim;
    if (complex.hh_dim != formula.per_element[i].total) comparison.mismatched_elements.push_back(i);
  }
  if (group.order() * cochain_dim(group.dim()) <= kMaxAssembledWidth) {
    const AssembledComplex assembled = assembled_complex(group);
    oracle.assembled_checked = true;
    oracle.assembled_z_dim = assembled.z_dim;
    oracle.assembled_b_dim = assembled.b_dim;
    comparison.assembled_agrees = assembled.z_dim == z_sum && assembled.b_dim == b_sum;
  }
  comparison.passed = comparison.mismatched_elements.empty() && (!oracle.assembled_checked || comparison.assembled_agrees);
  out.oracle = std::move(oracle);
  out.comparison = std::move(comparison);
  if (options.nonmodular_check) out.crosscheck = crosscheck_section(nonmodular_crosscheck(group, formula));
  return out;
}

Report cmd_reps(const JobSpec& job, const RunOptions& options) {
  const CyclicGroup group = make_group(job, options);
  Report out;
  out.command = "reps";
  out.group = summarize(group);
  out.formula = formula_section(full_report(group));
  std::vector<RepresentativeSet> sets;
  for (std::size_t i = 0; i < group.order(); ++i) {
    RepresentativeSet set{i, power_name(i), power_name((i + 1) % group.order()), {}};
    for (const auto& c : representative_basis(group, i)) {
      CochainEntry entry{strings(c.lambda), {}};
      for (std::size_t r = 0; r < c.alpha.rows(); ++r) entry.alpha.push_back(strings(c.alpha.row(r)));
      set.basis.push_back(std::move(entry));
    }
    sets.push_back(std::move(set));
  }
  out.representatives = std::move(sets);
  return out;
}

Report cmd_deform(const JobSpec& job, const RunOptions& options) {
  DeformationSection d;
  const DeformationParams params = deformation_params(job, options, d.preset, d.prime);
  const FieldSpec field = params.group.field();

  d.bracket_zero = true;
  for (const auto& value : square_bracket_transvection(params)) {
    d.bracket.push_back(render_group_element(field, value));
    if (!is_zero(value)) d.bracket_zero = false;
  }

  const RewriteSystem rs = orbifold_algebra(params);
  const ConfluenceResult confluence = confluence_check(rs);
  d.confluent = confluence.passed;
  d.words_checked = confluence.words_checked;
  if (confluence.witness) {
    const auto& w = *confluence.witness;
    d.witness = WitnessEntry{to_string(w.word), w.first_position, w.second_position, w.first_result.to_string(),
                             w.second_result.to_string()};
  }
  d.hilbert_degree = options.hilbert_degree;
  d.hilbert_expected = params.group.order() * binomial(options.hilbert_degree + 2, 2);
  if (confluence.passed) {
    const HilbertResult h = hilbert_check(rs, options.hilbert_degree);
    d.hilbert_run = true;
    d.hilbert_count = h.count;
    d.hilbert_passed = h.passed;
  } else {
    d.note = "Hilbert count not certified: rewrite system is not confluent";
  }

  Report out;
  out.command = "deform";
  out.group = summarize(params.group);
  out.deformation = std::move(d);
  return out;
}

json to_json(const Report& report) {
  json j{{"command", report.command}};
  put_optional(j, "group", report.group);
  put_optional(j, "formula", report.formula);
  put_optional(j, "oracle", report.oracle);
  put_optional(j, "comparison", report.comparison);
  put_optional(j, "crosscheck", report.crosscheck);
  put_optional(j, "representatives", report.representatives);
  put_optional(j, "deformation", report.deformation);
  j["ok"] = report.ok();
  return j;
}

Report report_from_json(const json& doc) {
  try {
    Report r;
    r.command = doc.at("command").get<std::string>();
    r.group = get_optional<GroupSummary>(doc, "group");
    r.formula = get_optional<FormulaSection>(doc, "formula");
    r.oracle = get_optional<OracleSection>(doc, "oracle");
    r.comparison = get_optional<ComparisonSection>(doc, "comparison");
    r.crosscheck = get_optional<CrosscheckSection>(doc, "crosscheck");
    r.representatives = get_optional<std::vector<RepresentativeSet>>(doc, "representatives");
    r.deformation = get_optional<DeformationSection>(doc, "deformation");
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  if (report.group) {
    const auto& g = *report.group;
    os << "group: order " << g.order << " in GL_" << g.n << "(" << g.field << "), im T of dim "
       << g.transfer_image_dim << "\n";
    for (const auto& e : g.elements) {
      os << "  " << power_name(e.index) << ": codim " << e.codim << ", chi(g) = " << e.chi;
      if (e.nondiagonalizable_reflection) {
        os << ", transvection";
      } else if (e.reflection) {
        os << ", reflection";
      }
      os << "\n";
    }
  }
  if (report.formula) {
    os << "formula: dim HH^2_{-1} = " << report.formula->total_dim << "\n";
    for (const auto& e : report.formula->per_element) {
      os << "  " << power_name(e.index) << " [" << e.summand_case << "] " << e.total;
      if (!e.pieces.empty()) {
        os << " =";
        for (std::size_t k = 0; k < e.pieces.size(); ++k) {
          os << (k ? " + " : " ") << e.pieces[k].dim << " " << e.pieces[k].name;
        }
      }
      os << "\n";
    }
  }
  if (report.oracle) {
    os << "oracle: dim HH^2_{-1} = " << report.oracle->total_dim << "\n";
    for (const auto& e : report.oracle->per_element) {
      os << "  " << power_name(e.index) << ": z " << e.z_dim << ", b " << e.b_dim << ", hh " << e.hh_dim << "\n";
    }
    if (report.oracle->assembled_checked) {
      os << "  assembled complex: z " << report.oracle->assembled_z_dim << ", b " << report.oracle->assembled_b_dim
         << "\n";
    }
  }
  if (report.comparison) {
    os << "comparison: " << (report.comparison->passed ? "pass" : "FAIL");
    for (auto i : report.comparison->mismatched_elements) os << " (mismatch at " << power_name(i) << ")";
    os << "\n";
  }
  if (report.crosscheck) {
    os << "nonmodular check: reflections " << report.crosscheck->reflections << ", det != 1 elements "
       << report.crosscheck->determinant << "\n";
    for (const auto& v : report.crosscheck->violations) os << "  " << v << "\n";
  }
  if (report.representatives) {
    for (const auto& set : *report.representatives) {
      os << "representatives at " << set.alpha_tag << " (lambda tagged " << set.lambda_tag << "): "
         << set.basis.size() << "\n";
      for (const auto& c : set.basis) {
        os << "  lambda = [";
        for (std::size_t k = 0; k < c.lambda.size(); ++k) os << (k ? ", " : "") << c.lambda[k];
        os << "], alpha = [";
        for (std::size_t r = 0; r < c.alpha.size(); ++r) {
          os << (r ? "; " : "");
          for (std::size_t p = 0; p < c.alpha[r].size(); ++p) os << (p ? ", " : "") << c.alpha[r][p];
        }
        os << "]\n";
      }
    }
  }
  if (report.deformation) {
    const auto& d = *report.deformation;
    os << "deformation: " << d.preset << " parameters, p = " << d.prime << "\n";
    os << "  square bracket:";
    for (std::size_t i = 0; i < d.bracket.size(); ++i) os << (i ? ", " : " ") << d.bracket[i];
    os << (d.bracket_zero ? " (zero)" : " (NONZERO)") << "\n";
    os << "  confluence: " << (d.confluent ? "pass" : "FAIL") << " over " << d.words_checked << " words\n";
    if (d.witness) {
      os << "    witness " << d.witness->word << ": rewriting at " << d.witness->first_position << " gives "
         << d.witness->first_result << ", at " << d.witness->second_position << " gives " << d.witness->second_result
         << "\n";
    }
    if (d.hilbert_run) {
      os << "  hilbert (d = " << d.hilbert_degree << "): " << d.hilbert_count << " of " << d.hilbert_expected
         << (d.hilbert_passed ? " pass" : " FAIL") << "\n";
    } else {
      os << "  hilbert (d = " << d.hilbert_degree << "): not run, " << d.note << "\n";
    }
  }
  return os.str();
}

}  // namespace skewcoh
