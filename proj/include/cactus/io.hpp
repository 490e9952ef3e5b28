#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cactus/cacti.hpp"
#include "cactus/element.hpp"
#include "cactus/report.hpp"
#include "cactus/surjection.hpp"

namespace cactus {

inline constexpr std::string_view kFormatTag = "cactus-v1";

/// "(1,3,1,2)" with optional whitespace, or the compact digit form "1312".
Surjection parseSurjection(std::string_view text);

/// ELEMENT := TERM+ ; TERM := SIGN? (INT '*')? SURJECTION ; or the literal "0".
Element parseElement(std::string_view text);

/// Canonical form: terms with positive coefficient first, then negative ones,
/// each group in lexicographic order of sequences; explicit signs; the
/// coefficient is written only when it is not ±1. The zero element is "0".
std::string serializeElement(const Element& a);

nlohmann::json elementToJson(const Element& a);
Element elementFromJson(const nlohmann::json& j);

nlohmann::json reportToJson(const VerificationReport& report);

enum class RenderFormat { Dot, Svg, Text };

struct RenderSpec {
  RenderFormat format = RenderFormat::Text;
  double rootRadius = 40.0;
  double childRatio = 0.6;  // radius of a child lobe relative to its parent
  double strokeWidth = 1.5;

  /// Throws InvalidArgument unless 0 < childRatio < 1 and sizes are positive.
  void validate() const;
};

RenderFormat parseRenderFormat(std::string_view name);

std::string renderLobeTree(const LobeTree& tree, const RenderSpec& spec);

}  // namespace cactus
