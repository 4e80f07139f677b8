#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// The `sylaba` command-line interface.
namespace sylaba::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Bad flags, unreadable inputs, invalid data: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat `key=value` lines; blank lines and `#` comments are skipped.
// Throws InputError on a malformed line.
std::map<std::string, std::string> parse_config_text(std::string_view text);

// Expands `--config FILE` into `--key=value` arguments placed right after
// the subcommand name, so flags given on the command line take precedence.
std::vector<std::string> expand_config(std::span<const std::string> args);

// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sylaba::cli
