#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibword::cli {

enum class Command { generate, density, curve, palindromes, scattered, squarefree, catalan, fuzzy, reproduce, verify };
enum class Format { text, csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct RunConfig {
    Command command = Command::generate;
    Format format = Format::text;
    std::optional<std::string> out;

    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> prefix;
    std::optional<std::uint64_t> length;
    std::optional<std::uint64_t> n_max;
    std::optional<int> alphabet;
    std::optional<std::string> pattern;
    std::optional<std::string> seeds;  // "A,B"
    std::optional<std::string> kind;
    std::optional<double> k;
    std::optional<double> tau;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> mu_a;
    std::optional<double> mu_b;
};

/// Missing or inconsistent flags for the chosen command.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParseResult {
    std::optional<RunConfig> config;  // empty when parsing ended the run (help or error)
    int exit_code = kExitOk;
};

/// Parses argv; help and usage errors are written to `out`/`err` and reported through exit_code.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs one command. The report is assembled fully before it is written to
/// `out` (or to config.out); diagnostics go to `err` as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fibword::cli
