// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewcoh/deformation.hpp"
#include "skewcoh/formula.hpp"
#include "skewcoh/oracle.hpp"
#include "suite.hpp"

using namespace skewcoh;
using skewcoh::testing::random_scalar;
using skewcoh::testing::regression_suite;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome transvection_dimension() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const CyclicGroup g = CyclicGroup::from_generator(skewcoh::testing::transvection(p));
    const CohomologyReport formula = full_report(g);
    std::size_t oracle_total = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const std::size_t hh = per_element_cohomology(g, i).hh_dim;
      oracle_total += hh;
      if (hh != 2 || formula.per_element[i].total != 2) {
        out.fail("p=" + std::to_string(p) + " element " + std::to_string(i) + " contributes " +
                 std::to_string(formula.per_element[i].total) + "/" + std::to_string(hh));
      }
    }
    const auto want = static_cast<std::size_t>(2 * p);
    if (formula.total_dim != want || oracle_total != want) {
      out.fail("p=" + std::to_string(p) + " totals " + std::to_string(formula.total_dim) + "/" +
               std::to_string(oracle_total));
    }
    if (out.passed) out.detail << "p=" << p << ":" << want << " ";
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.passed) out.detail << "in " << elapsed << " s";
  return out;
}

Outcome formula_oracle_equivalence() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto suite = regression_suite();
  for (const auto& entry : suite) {
    const CyclicGroup g = entry.group();
    const CohomologyReport formula = full_report(g);
    for (std::size_t i = 0; i < g.order(); ++i) {
      const std::size_t hh = per_element_cohomology(g, i).hh_dim;
      if (hh != formula.per_element[i].total) {
        out.fail(entry.name + " element " + std::to_string(i) + ": formula " +
                 std::to_string(formula.per_element[i].total) + ", oracle " + std::to_string(hh));
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.passed) out.detail << suite.size() << " groups in " << elapsed << " s";
  return out;
}

Outcome reflection_vanishing() {
  Outcome out;
  std::size_t with_transvection = 0;
  for (const auto& entry : regression_suite()) {
    const CyclicGroup g = entry.group();
    bool has = false;
    for (std::size_t i = 0; i < g.order(); ++i) has = has || is_nondiagonalizable_reflection(g, i);
    if (!has) continue;
    ++with_transvection;
    if (transfer(g).image.dim() != 0) out.fail(entry.name + " has im T != 0");
  }
  const CyclicGroup gl4 = CyclicGroup::from_generator(
      Matrix::from_ints(FieldSpec::prime(3), {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
  const std::size_t gl4_image = transfer(gl4).image.dim();
  if (gl4_image == 0) out.fail("GL_4(F_3) example has im T = 0");
  if (out.passed) out.detail << with_transvection << " groups with im T = 0; GL_4(F_3) dim im T = " << gl4_image;
  return out;
}

Outcome nonmodular_recovery() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& entry : regression_suite()) {
    const CyclicGroup g = entry.group();
    const CrosscheckReport r = nonmodular_crosscheck(g);
    if (r.determinant != CheckStatus::NotApplicable) ++checked;
    if (r.failed()) {
      for (const auto& v : r.violations) out.fail(entry.name + ": " + v);
    }
  }
  if (checked == 0) out.fail("no suite group was nonmodular with split characteristic polynomial");
  if (out.passed) out.detail << checked << " groups checked";
  return out;
}

Outcome representative_uniqueness() {
  Outcome out;
  std::mt19937_64 rng(20261016);
  std::size_t reductions = 0;
  for (const auto& entry : regression_suite()) {
    const CyclicGroup g = entry.group();
    for (std::size_t i = 0; i < g.order(); ++i) {
      const PerElementComplex c = per_element_cohomology(g, i);
      const std::size_t dim = kernel_basis(vstack(c.cocycle_condition_matrix, c.distinguished_constraints)).dim();
      if (dim != c.hh_dim) {
        out.fail(entry.name + " element " + std::to_string(i) + ": distinguished cocycles " + std::to_string(dim) +
                 ", hh " + std::to_string(c.hh_dim));
        continue;
      }
      const auto z = kernel_basis(c.cocycle_condition_matrix).basis_vectors();
      const std::size_t n = g.dim();
      for (int trial = 0; trial < 100; ++trial) {
        Vector flat = zero_vector(g.field(), cochain_dim(n));
        for (const auto& v : z) flat = flat + random_scalar(g.field(), rng) * v;
        const CochainTwo gamma = CochainTwo::from_flat(i, n, flat);
        const auto [once, f] = reduce_to_representative(g, gamma);
        const auto twice = reduce_to_representative(g, once).first;
        const Vector boundary = c.coboundary_matrix * f.f;
        ++reductions;
        if (!(twice == once) || !is_zero(c.distinguished_constraints * once.to_flat()) ||
            !(gamma.to_flat() - boundary == once.to_flat())) {
          out.fail(entry.name + " element " + std::to_string(i) + " trial " + std::to_string(trial));
          break;
        }
      }
    }
  }
  if (out.passed) out.detail << reductions << " reductions";
  return out;
}

Outcome coboundaries_are_cocycles() {
  Outcome out;
  for (const auto& entry : regression_suite()) {
    const CyclicGroup g = entry.group();
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (!(cocycle_conditions(g, i) * coboundary_matrix(g, i)).is_zero()) {
        out.fail(entry.name + " element " + std::to_string(i));
      }
    }
  }
  if (out.passed) out.detail << "d(B) = 0 on every suite group";
  return out;
}

Outcome deformation_lift() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t p : {3, 5, 7}) {
    const DeformationParams params = builtin_transvection_gamma(p);
    const std::string tag = "p=" + std::to_string(p) + ": ";
    bool bracket_zero = true;
    for (const auto& value : square_bracket_transvection(params)) bracket_zero = bracket_zero && is_zero(value);
    if (!bracket_zero) out.fail(tag + "square bracket nonzero");
    const RewriteSystem rs = orbifold_algebra(params);
    const ConfluenceResult conf = confluence_check(rs, 3);
    if (!conf.passed) {
      const auto& w = *conf.witness;
      out.fail(tag + "bracket " + (bracket_zero ? "zero" : "nonzero") + ", not confluent at \"" + to_string(w.word) +
               "\" (" + w.first_result.to_string() + " vs " + w.second_result.to_string() +
               "), Hilbert count not run");
      continue;
    }
    const HilbertResult h = hilbert_check(rs, 4);
    if (!h.passed) {
      out.fail(tag + "Hilbert count " + std::to_string(h.count) + ", expected " + std::to_string(h.expected));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.passed) out.detail << "bracket zero, confluent, Hilbert 15p for p = 3, 5, 7";
  return out;
}

Outcome negative_control() {
  Outcome out;
  const ConfluenceResult conf = confluence_check(orbifold_algebra(adversarial_params(3)), 3);
  if (conf.passed || !conf.witness) {
    out.fail("adversarial fixture passed confluence");
    return out;
  }
  const auto& w = *conf.witness;
  out.detail << "witness \"" << to_string(w.word) << "\" positions " << w.first_position << "/" << w.second_position
             << ": " << w.first_result.to_string() << " vs " << w.second_result.to_string();
  const ConfluenceResult zero = confluence_check(orbifold_algebra(zero_params(CyclicGroup::from_generator(
                                                     skewcoh::testing::transvection(3)))),
                                                 3);
  if (!zero.passed) out.fail("zero parameters also fail confluence");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"transvection dimension", transvection_dimension},
      {"formula-oracle equivalence", formula_oracle_equivalence},
      {"nondiagonalizable reflection vanishing", reflection_vanishing},
      {"nonmodular recovery", nonmodular_recovery},
      {"representative uniqueness", representative_uniqueness},
      {"coboundaries are cocycles", coboundaries_are_cocycles},
      {"deformation lift", deformation_lift},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failures;
    std::printf("%s %zu %s: %s\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
