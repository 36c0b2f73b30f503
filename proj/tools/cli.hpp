#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sturm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
    // Overrides the brute-force length cap (STURM_BRUTE_CAP).
    std::optional<std::uint32_t> brute_cap;
};

// Parses STURM_BRUTE_CAP; nullptr or empty means unset. Throws
// std::invalid_argument on anything but a non-negative integer.
std::optional<std::uint32_t> parse_brute_cap(const char* value);

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace sturm::cli
