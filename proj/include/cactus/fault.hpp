#pragma once

// Test seam for mutation smoke tests: deliberately corrupts one sign rule so
// that the verification suites can be shown to detect it. Never enabled in
// normal operation.

namespace cactus::testing {

enum class SignFault {
  None,
  IgnoreKoszulSign,      // composition drops the block-permutation sign
  IgnoreLastOccurrence,  // boundary uses sign +1 for last occurrences
};

void injectSignFault(SignFault fault) noexcept;
SignFault activeSignFault() noexcept;

class ScopedSignFault {
 public:
  explicit ScopedSignFault(SignFault fault) noexcept { injectSignFault(fault); }
  ~ScopedSignFault() { injectSignFault(SignFault::None); }
  ScopedSignFault(const ScopedSignFault&) = delete;
  ScopedSignFault& operator=(const ScopedSignFault&) = delete;
};

}  // namespace cactus::testing
