#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coxplane {

/// One object (a parabolic subgroup) or pair of objects (almost positive
/// roots) on which a geometric criterion disagrees with the algebra.
struct Mismatch {
  std::string first;
  std::string second;  // empty for single-object checks
  std::vector<int> ids;  // parabolic reflections, or almost positive root indices
  int rank = -1;         // parabolic rank, when applicable
  bool geometric = false;
  bool algebraic = false;
};

struct ExactnessReport {
  std::string type_label;
  std::string criterion;
  std::size_t total = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;

  bool exact() const { return mismatches.empty(); }
};

std::string to_text(const ExactnessReport& rep, std::size_t max_listed = 20);

}  // namespace coxplane
