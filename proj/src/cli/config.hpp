#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace CLI {
class App;
}

namespace sentialg::cli {

// Bad flags, bad config files, missing inputs: exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

// `key = value` lines; blank lines and `#` comments are ignored. Keys are
// long flag names without the leading dashes.
ConfigEntries parse_config(std::string_view contents);
ConfigEntries read_config(const std::filesystem::path& path);

// Fills options of `app` that were not given on the command line.
void apply_config(CLI::App& app, const ConfigEntries& entries);

}  // namespace sentialg::cli
