#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmb/cli/matrix_io.hpp"

namespace kmb::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

enum class Format { text, record };

struct Options {
    int window = 8;
    int group_size = 2;
    std::size_t max_length = 4;
    long level = 2;
    std::optional<int> target_degree;
    Format format = Format::text;
    std::optional<std::string> input;
    /// Ring tag for inline matrices; defaults per command.
    std::optional<std::string> ring;
    /// Number field min_poly, comma separated, constant term first.
    std::optional<std::string> min_poly;
    /// Interpolation points for vandermonde, comma separated.
    std::optional<std::string> points;
    /// Number of powers for primitive; defaults to the field degree.
    std::optional<int> powers;
};

struct Command {
    std::string name;
    Options options;
    /// Positional arguments: matrices, or the target polynomial.
    std::vector<std::string> arguments;
};

const std::vector<std::string>& command_names();

/// Throws UsageError for unknown names, bad flag values or missing inputs.
void validate(const Command& command);

struct Report {
    int exit_code = kExitSuccess;
    std::string text;
    Record record;

    std::string render(Format format) const;
};

/// Never throws: errors become reports with exit codes 1 (domain) or 2
/// (usage), echoing the offending input.
Report run_command(const Command& command);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmb::cli
