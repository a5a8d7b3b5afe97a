#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2dsim/simulation.hpp"

namespace d2dsim {

/// Bad flags, bad values or an invalid merged config. The message names the
/// offending flag or field.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; text() holds the usage text to print.
class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(std::string help)
        : std::runtime_error("help requested"), help_text_(std::move(help)) {}

    const std::string& text() const { return help_text_; }

private:
    std::string help_text_;
};

struct CliOptions {
    SimConfig config;
    std::filesystem::path out_dir;
};

/// Parses the command line (args excludes the program name). Precedence:
/// flags override config-file values override defaults. The output directory
/// comes from --out, else the D2DSIM_OUT environment variable, else "out".
/// Throws UsageError on unknown flags or invalid values, HelpRequested for
/// --help.
CliOptions parse_config(const std::vector<std::string>& args);

/// argv convenience wrapper for main().
CliOptions parse_config(int argc, const char* const* argv);

}  // namespace d2dsim
