#include "coxplane/report.h"

#include <sstream>

namespace coxplane {

std::string to_text(const ExactnessReport& rep, std::size_t max_listed) {
  std::ostringstream out;
  out << rep.type_label << " " << rep.criterion << ": " << (rep.exact() ? "exact" : "NOT exact") << " (" << rep.mismatches.size()
      << " mismatches out of " << rep.total << ")\n";
  for (const auto& note : rep.notes) out << "  note: " << note << "\n";
  for (std::size_t i = 0; i < rep.mismatches.size() && i < max_listed; ++i) {
    const Mismatch& m = rep.mismatches[i];
    out << "  " << m.first;
    if (!m.second.empty()) out << " vs " << m.second;
    out << ": geometric " << (m.geometric ? "yes" : "no") << ", algebraic " << (m.algebraic ? "yes" : "no") << "\n";
  }
  if (rep.mismatches.size() > max_listed) out << "  ... " << rep.mismatches.size() - max_listed << " more\n";
  return out.str();
}

}  // namespace coxplane
