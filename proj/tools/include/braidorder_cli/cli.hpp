#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidorder::cli {

enum class Output { plain, json };

struct CliConfig {
  std::optional<int> strands;  // inferred from the input when empty
  Output output = Output::plain;
};

/// 1 + the largest generator index over all words, at least 2; an explicit
/// strand count wins.
int resolve_strands(const CliConfig& config,
                    const std::vector<std::string_view>& words);

// Each returns the text written to stdout, without the trailing newline.
// Malformed input throws.
std::string cmd_sign(std::string_view word, const CliConfig& config);
std::string cmd_compare(std::string_view a, std::string_view b,
                        const CliConfig& config);
std::string cmd_canonical(std::string_view word, const CliConfig& config);
std::string cmd_cutseq(std::string_view word, const CliConfig& config);
std::string cmd_validate(std::string_view sequence, const CliConfig& config);
std::string cmd_equal(std::string_view a, std::string_view b,
                      const CliConfig& config);

/// Full command line, argv[0] included. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braidorder::cli
