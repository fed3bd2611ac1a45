#pragma once

#include "logzeta/complex.hpp"

namespace logzeta {

/// Binary precision policy. Kernels compute at working + guard bits and round once
/// to working bits at the end.
class PrecisionContext {
 public:
  static constexpr unsigned kMinWorkingBits = 64;
  static constexpr unsigned kDefaultGuardBits = 32;

  explicit PrecisionContext(unsigned working_bits = 256, unsigned guard_bits = kDefaultGuardBits)
      : working_bits_(working_bits), guard_bits_(guard_bits) {
    if (working_bits < kMinWorkingBits) {
      throw DomainError("working precision must be at least 64 bits");
    }
  }

  unsigned working_bits() const { return working_bits_; }
  unsigned guard_bits() const { return guard_bits_; }
  mp::Prec working() const { return working_bits_; }
  mp::Prec internal() const { return working_bits_ + guard_bits_; }

  /// Same guard policy, different working precision.
  PrecisionContext with_working_bits(unsigned bits) const { return PrecisionContext(bits, guard_bits_); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  unsigned working_bits_;
  unsigned guard_bits_;
};

}  // namespace logzeta
