#pragma once

#include "hamrank/matrixlab.hpp"
#include "hamrank/spectrum.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace hamrank {

enum class Format { json, csv, text };

std::string_view to_string(Format format);
Format parse_format(std::string_view text);

/// Everything a batch command depends on. Embedded verbatim in every output.
struct RunConfig {
    std::string command;  // spectrum|bounds|rank|verify|export|dcc|sweep
    std::string target;   // verify group or sweep kind; empty = default
    int n = 1;
    int a = 0;
    Mode mode = Mode::threshold;
    int max_n = 0;        // 0 = command default
    uint64_t seed = 1;
    RankOracle oracle = RankOracle::modp;
    Format format = Format::json;
    std::string in_path;
    std::string out_path;
};

/// Exit-status contract shared by the C API and the CLI.
enum class Outcome { success = 0, property_failed = 1 };

struct CommandResult {
    Outcome outcome = Outcome::success;
    std::string output;
};

/// Runs one command. Throws std::invalid_argument (including LimitError) on
/// bad parameters and std::runtime_error on I/O failure.
CommandResult run_command(const RunConfig& config);

}  // namespace hamrank
