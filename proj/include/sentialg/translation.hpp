#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sentialg/types.hpp"

namespace sentialg {

struct TranslationRecord {
  std::string english_term;  // lowercase, no whitespace
  std::string dialect_term;
  Script script = Script::Arabic;  // Arabic or Arabizi, never Mixed

  auto operator<=>(const TranslationRecord&) const = default;
};

// Arabic when the term holds any Arabic-block code point, Arabizi otherwise.
// Throws MalformedLine(0, ...) for terms that also contain Latin letters.
Script infer_term_script(std::string_view dialect_term);

// Anything that can answer "which dialect words translate this English term".
class TranslationProvider {
public:
  virtual ~TranslationProvider() = default;
  // Case-insensitive on the English side; absence is an empty result.
  virtual std::vector<TranslationRecord> translate(std::string_view english_term) const = 0;
};

// Offline provider backed by a `english<TAB>dialect` table. Immutable after
// construction, so concurrent translate() calls are safe.
class TranslationTable final : public TranslationProvider {
public:
  TranslationTable() = default;
  explicit TranslationTable(std::set<TranslationRecord> records) : records_(std::move(records)) {}

  static TranslationTable load(const std::filesystem::path& path);
  static TranslationTable parse(std::string_view contents);

  std::vector<TranslationRecord> translate(std::string_view english_term) const override;

  const std::set<TranslationRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

private:
  std::set<TranslationRecord> records_;
};

inline std::set<TranslationRecord> load_translation_table(const std::filesystem::path& path) {
  return TranslationTable::load(path).records();
}

}  // namespace sentialg
