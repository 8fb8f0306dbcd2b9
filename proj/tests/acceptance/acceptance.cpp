#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tridend/dual.hpp"
#include "tridend/primitives.hpp"
#include "tridend/quotient.hpp"
#include "tridend/series.hpp"

using namespace tridend;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_report(const Report& r) {
  if (!r.ok()) {
    std::cerr << r.violations.size() << " violations in " << r.name << ", first:\n"
              << format_violation(r.violations.front()) << '\n';
  }
  return {r.ok(), summary_line(r)};
}

Outcome dimensions() {
  const std::vector<long> expected{1, 3, 11, 45, 197, 903, 4279};
  for (int n = 1; n <= 7; ++n) {
    const long trees = static_cast<long>(enumerate_trees(n).size());
    if (trees != expected[n - 1] || small_schroeder(n) != expected[n - 1]) {
      return {false, "degree " + std::to_string(n) + ": " + std::to_string(trees) + " trees"};
    }
  }
  return {true, "dim A_n = 1, 3, 11, 45, 197, 903, 4279 by enumeration and recurrence"};
}

Outcome primitive_dimensions() {
  const std::vector<int> codend{1, 1, 2, 6, 22, 90};
  const std::vector<int> coass{1, 2, 6, 22, 90};
  const RationalSeries p = series_p(6);
  const RationalSeries f = series_prim_coass(5);
  for (int n = 1; n <= 6; ++n) {
    const int d = primitive_basis(PrimKind::Codend, n).dim();
    if (d != codend[n - 1] || p[n] != d) return {false, "codend degree " + std::to_string(n) + ": " + std::to_string(d)};
  }
  for (int n = 1; n <= 5; ++n) {
    const int d = primitive_basis(PrimKind::Coass, n).dim();
    if (d != coass[n - 1] || f[n] != d) return {false, "coass degree " + std::to_string(n) + ": " + std::to_string(d)};
  }
  return {true, "codend 1, 1, 2, 6, 22, 90; coass 1, 2, 6, 22, 90"};
}

Outcome theta_isomorphism() {
  for (int n = 1; n <= 4; ++n) {
    const auto image = theta(primitive_basis(PrimKind::Coass, n));
    const auto target = primitive_basis(PrimKind::Codend, n + 1);
    bool inside = true;
    for (const auto& v : image) inside = inside && in_span(target.vectors, v);
    const int r = rank(image);
    if (!inside || r != static_cast<int>(image.size()) || r != target.dim()) {
      return {false, "degree " + std::to_string(n) + ": rank " + std::to_string(r)};
    }
  }
  return {true, "theta_n bijective onto the codendriform primitives for n = 1..4"};
}

Outcome quotient() {
  const std::vector<long> catalan{1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) {
    long binary = 0;
    for (const auto& t : enumerate_trees(n)) binary += is_binary(t);
    if (binary != catalan[static_cast<std::size_t>(n)]) return {false, "degree " + std::to_string(n)};
  }
  Report r = check_biideal(5);
  r.merge(check_lr_formulas(5));
  if (!r.ok()) return from_report(r);
  const auto readings = compare_lr_readings(5);
  const bool printed = readings.printed.ok();
  const bool standard = readings.standard.ok();
  if (printed == standard) return {false, "readings do not single one out"};
  const std::string which = reading_name(printed ? LrReading::Printed : LrReading::Standard);
  return {true, summary_line(r) + "; matching reading: " + which};
}

Outcome corolla_primitivity() {
  for (int n = 1; n <= 6; ++n) {
    const auto trees = primitive_trees(n);
    if (trees.size() != 1 || trees.front() != corolla(n)) return {false, "degree " + std::to_string(n)};
  }
  return {true, "the unique primitive tree of degree n is the corolla, n <= 6"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tridendriform axioms, degree sum <= 6", [] { return from_report(check_tridend_axioms(6)); }},
      {"quasi-shuffle vs inductive products, degree sum <= 6", [] { return from_report(check_product_equivalence(6)); }},
      {"bialgebra structure, degree sum <= 5", [] { return from_report(check_bialgebra(5)); }},
      {"(3,2) relations and codendriform coassociativity, degree sum <= 5",
       [] { return from_report(check_32_relations(5)); }},
      {"duality, degree <= 5", [] { return from_report(check_dual_structure(5)); }},
      {"dimensions of A_n, n = 1..7", dimensions},
      {"primitive dimensions", primitive_dimensions},
      {"theta isomorphism, n = 1..4", theta_isomorphism},
      {"series identities through order 12", [] { return from_report(check_series_identities(12)); }},
      {"Loday-Ronco quotient", quotient},
      {"injectivity of the quasi-shuffle action, degree sum <= 6",
       [] { return from_report(check_qsh_injectivity(6)); }},
      {"corolla primitivity, n <= 6", corolla_primitivity},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << " ("
              << seconds << "s)\n"
              << std::flush;
  }
  return all ? 0 : 1;
}
