#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tridend {

struct Violation {
  std::string law;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of an exhaustive check: how many instances were tested and which
/// of them failed.
struct Report {
  std::string name;
  std::int64_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string law, std::string inputs, std::string lhs, std::string rhs);
  void merge(const Report& other);
};

/// One line, tab-separated: law, inputs, lhs, rhs.
std::string format_violation(const Violation& v);
std::string summary_line(const Report& r);
void print_report(std::ostream& out, const Report& r);

}  // namespace tridend
