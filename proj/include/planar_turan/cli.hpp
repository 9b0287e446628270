#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar_turan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitContainsPattern = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitRange = 65;  // also malformed input data
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

// `args` excludes the program name. PLANAR_TURAN_THREADS supplies the
// default for --threads.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace planar_turan
