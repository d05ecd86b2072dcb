#pragma once

// Test-only hook: corrupts a single rule of the core arithmetic so that the
// verification harness can be shown to detect it. Production code never
// installs a fault.

namespace indigenous::testing {

enum class Fault {
  None,
  AddSaturatesToK,      // a + b > k yields k instead of m
  MulSaturatesToK,      // a * b > k yields k instead of m
  ManyPlusOneIsK,       // m + 1 yields k
  ZeroTimesManyIsMany,  // 0 * m yields m
};

Fault active_fault() noexcept;
void set_fault(Fault fault) noexcept;

/// Installs a fault for the lifetime of the object.
class ScopedFault {
 public:
  explicit ScopedFault(Fault fault) noexcept : previous_(active_fault()) { set_fault(fault); }
  ~ScopedFault() { set_fault(previous_); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

}  // namespace indigenous::testing
