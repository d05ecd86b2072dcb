#include "indigenous/fault.hpp"

#include <atomic>

namespace indigenous::testing {

namespace {
std::atomic<Fault> g_fault{Fault::None};
}

Fault active_fault() noexcept { return g_fault.load(std::memory_order_relaxed); }

void set_fault(Fault fault) noexcept { g_fault.store(fault, std::memory_order_relaxed); }

}  // namespace indigenous::testing
