#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "perfectrep/practical.hpp"
#include "perfectrep/representations.hpp"

namespace perfectrep::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Upper bound on any exponent argument; keeps Lucas-Lehmer runs interactive.
inline constexpr unsigned kMaxExponentArg = 10000;

struct Config {
    unsigned count_ceiling = kDefaultCountCeiling;
    std::uint64_t pan_ceiling = kDefaultPanCeiling;
};

/// Reads TOOL_COUNT_CEILING and TOOL_PAN_CEILING. Throws UsageError on
/// malformed values.
Config config_from_environment();

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json envelope;
    int exit_code = kExitOk;
};

Outcome cmd_perfect(unsigned max_p);
Outcome cmd_decompose(unsigned p, std::string_view m);
Outcome cmd_count(unsigned p, std::string_view m, bool enumerate, const Config& config);
Outcome cmd_check(std::string_view n, const Config& config);
Outcome cmd_verify(unsigned p, const Config& config);

/// Short human-readable summary of an envelope.
std::string render_plain(const Json& envelope);

/// Full command-line driver: parses argv, dispatches, writes exactly one
/// envelope (or plain summary) to `out`, diagnostics to `err`, and returns
/// the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace perfectrep::cli
