#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace degen::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2, kIoError = 3 };

/// Settings shared by the subcommands. A JSON config file may set any field
/// (same names); explicit flags win over the file.
struct CliConfig {
    unsigned truncation_order = 16;
    unsigned n_max = 10;
    unsigned r_max = 3;
    std::vector<unsigned> m_values{1, 3, 5};
    unsigned k_max = 10;
    std::string format;  // empty: per-command default
    std::string output;  // empty: stdout
};

/// Reads a JSON config into `base`. Throws std::runtime_error on I/O or parse failure.
CliConfig load_config(const std::string& path, CliConfig base = {});

/// Resolves an output path against the DEGEN_OUTPUT_DIR environment variable
/// (applied to relative paths only). Empty stays empty.
std::string resolve_output_path(const std::string& path);

/// Runs `degen <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen::cli
