#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ualpha::cli {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  int max_level = 5;
  int max_steps = 6;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::string output_path;  // empty: standard output
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ualpha::cli
