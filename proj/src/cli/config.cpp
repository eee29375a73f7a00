#include "cli/config.hpp"

#include "CLI11.hpp"
#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg::cli {

ConfigEntries parse_config(std::string_view contents) {
  ConfigEntries entries;
  std::size_t line_no = 0;
  for (const auto& raw : split(contents, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.starts_with("--")) key = key.substr(2);
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    entries.emplace_back(key, value);
  }
  return entries;
}

ConfigEntries read_config(const std::filesystem::path& path) {
  try {
    return parse_config(read_file(path));
  } catch (const IoError& e) {
    throw UsageError(std::string("config file: ") + e.what());
  }
}

void apply_config(CLI::App& app, const ConfigEntries& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "config") continue;
    auto* opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("config: unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config: bad value for '" + key + "': " + e.what());
    }
  }
}

}  // namespace sentialg::cli
