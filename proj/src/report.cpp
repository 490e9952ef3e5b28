#include "cactus/report.hpp"

namespace cactus {

VerificationReport compareElements(std::string check, const Element& lhs, const Element& rhs,
                                   std::string note) {
  VerificationReport report{std::move(check), true, std::nullopt, std::move(note)};
  if (lhs != rhs) {
    report.pass = false;
    report.witness = lhs - rhs;
  }
  return report;
}

VerificationReport combineReports(std::string check, const std::vector<VerificationReport>& parts,
                                  std::string note) {
  VerificationReport out{std::move(check), true, std::nullopt, std::move(note)};
  for (const auto& part : parts) {
    if (part.pass) continue;
    out.pass = false;
    out.witness = part.witness;
    out.note = part.check + (part.note.empty() ? "" : ": " + part.note);
    break;
  }
  return out;
}

}  // namespace cactus
