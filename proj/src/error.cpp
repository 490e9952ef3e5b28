#include "cactus/error.hpp"

namespace cactus {

std::string_view kindName(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IntegerOverflow: return "IntegerOverflow";
    case ErrorKind::LobeOutOfRange: return "LobeOutOfRange";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::IndexRange: return "IndexRange";
    case ErrorKind::NotACactus: return "NotACactus";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::MaxValueNotUnique: return "MaxValueNotUnique";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cactus
