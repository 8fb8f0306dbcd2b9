#include "tridend/report.hpp"

namespace tridend {

void Report::fail(std::string law, std::string inputs, std::string lhs, std::string rhs) {
  violations.push_back({std::move(law), std::move(inputs), std::move(lhs), std::move(rhs)});
}

void Report::merge(const Report& other) {
  checked += other.checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string format_violation(const Violation& v) {
  return v.law + '\t' + v.inputs + '\t' + v.lhs + '\t' + v.rhs;
}

std::string summary_line(const Report& r) {
  return r.name + ": checked " + std::to_string(r.checked) + ", violations " +
         std::to_string(r.violations.size());
}

void print_report(std::ostream& out, const Report& r) {
  for (const auto& v : r.violations) out << format_violation(v) << '\n';
  out << summary_line(r) << '\n';
}

}  // namespace tridend
