#include "cactus/fault.hpp"

#include <atomic>

namespace cactus::testing {

namespace {
std::atomic<SignFault> gFault{SignFault::None};
}

void injectSignFault(SignFault fault) noexcept { gFault.store(fault, std::memory_order_relaxed); }

SignFault activeSignFault() noexcept { return gFault.load(std::memory_order_relaxed); }

}  // namespace cactus::testing
