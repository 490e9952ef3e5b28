#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus/element.hpp"

namespace cactus {

/// Outcome of one identity check. On failure `witness` holds lhs - rhs.
struct VerificationReport {
  std::string check;
  bool pass = true;
  std::optional<Element> witness;
  std::string note;
};

VerificationReport compareElements(std::string check, const Element& lhs, const Element& rhs,
                                   std::string note = {});

/// Folds several reports into one named report; keeps the first failure's
/// witness and note.
VerificationReport combineReports(std::string check, const std::vector<VerificationReport>& parts,
                                  std::string note = {});

}  // namespace cactus
