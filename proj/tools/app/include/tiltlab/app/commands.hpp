#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tiltlab::app {

enum class OutputFormat { json, table };

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_check_failure = 3;

struct CommandRequest {
    std::string subcommand;
    std::optional<std::string> quiver_path;
    std::optional<std::int64_t> cap;
    std::optional<std::vector<std::string>> support;  // vertex ids
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> output_path;
    bool use_cache = true;

    std::vector<std::string> modules;   // dimension vectors or representation files
    std::vector<std::string> sequence;  // vertex ids for mutate
    std::optional<std::string> presentation_path;
    std::optional<std::int64_t> max_length;  // volume over preprojectives
    std::int64_t radius = 2;
    std::size_t depth = 32;
    bool prime = false;
    std::uint64_t seed = 20240601;
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"roots",  "catalog", "homext", "tilting",  "complements", "volume",
                                                "complex", "fan",    "clusters", "mutate", "cta",         "check"};
    return names;
}

// Dispatches a request, writing the result to the output path or `out` and
// diagnostics to `err`. Returns one of the exit codes above.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace tiltlab::app
