#pragma once

#include "egf/errors.hpp"

namespace egf {

// Working-precision contract shared by all high-precision operations.
// Results are rounded to `bits`; intermediate quantities are carried at
// bits + guard binary digits.
struct PrecisionContext {
  unsigned bits;
  unsigned guard;

  explicit PrecisionContext(unsigned bits_ = 256, unsigned guard_ = 32)
      : bits(bits_), guard(guard_) {
    if (bits < 64) throw DomainError("precision must be at least 64 bits");
  }

  unsigned working() const { return bits + guard; }
};

}  // namespace egf
