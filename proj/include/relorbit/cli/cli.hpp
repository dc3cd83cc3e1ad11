#pragma once

#include <ostream>

namespace relorbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitPrecision = 3;

// Entry point of the rel_orbit tool; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relorbit::cli
