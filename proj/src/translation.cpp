#include "sentialg/translation.hpp"

#include <algorithm>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

Script infer_term_script(std::string_view dialect_term) {
  bool arabic = false;
  bool latin = false;
  for (char32_t cp : utf8::decode(dialect_term)) {
    if (utf8::is_arabic(cp)) arabic = true;
    if (utf8::is_latin_letter(cp)) latin = true;
  }
  if (arabic && latin) throw MalformedLine(0, "mixed-script dialect term '" + std::string(dialect_term) + "'");
  return arabic ? Script::Arabic : Script::Arabizi;
}

TranslationTable TranslationTable::parse(std::string_view contents) {
  std::set<TranslationRecord> records;
  std::size_t line_no = 0;
  for (auto line : split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    if (std::count(line.begin(), line.end(), '\t') != 1) {
      throw MalformedLine(line_no, "expected exactly one tab");
    }
    auto tab = line.find('\t');
    auto english = ascii_lower(trim(std::string_view(line).substr(0, tab)));
    auto dialect = trim(std::string_view(line).substr(tab + 1));
    if (english.empty() || dialect.empty()) throw MalformedLine(line_no, "empty term");
    if (english.find_first_of(" \t\v\f") != std::string::npos) {
      throw MalformedLine(line_no, "english term contains whitespace");
    }
    Script script;
    try {
      script = infer_term_script(dialect);
    } catch (const MalformedLine& e) {
      throw MalformedLine(line_no, "mixed-script dialect term '" + dialect + "'");
    }
    records.insert(TranslationRecord{std::move(english), std::move(dialect), script});
  }
  return TranslationTable(std::move(records));
}

TranslationTable TranslationTable::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::vector<TranslationRecord> TranslationTable::translate(std::string_view english_term) const {
  auto key = ascii_lower(english_term);
  std::vector<TranslationRecord> out;
  auto it = records_.lower_bound(TranslationRecord{key, "", Script::Arabic});
  for (; it != records_.end() && it->english_term == key; ++it) out.push_back(*it);
  return out;
}

}  // namespace sentialg
