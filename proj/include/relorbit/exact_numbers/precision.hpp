#pragma once

#include "relorbit/error.hpp"

namespace relorbit::exact_numbers {

inline constexpr unsigned kStartBits = 128;
inline constexpr unsigned kMaxBits = 8192;

// Run f(bits) with doubling precision until it stops raising PrecisionExhausted.
template <class F>
auto with_precision(F&& f) -> decltype(f(0u)) {
  for (unsigned bits = kStartBits;; bits *= 2) {
    try {
      return f(bits);
    } catch (const PrecisionExhausted&) {
      if (bits >= kMaxBits) throw;
    }
  }
}

}  // namespace relorbit::exact_numbers
