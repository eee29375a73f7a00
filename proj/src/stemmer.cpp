#include "sentialg/stemmer.hpp"

#include <algorithm>
#include <map>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

namespace {

void sort_by_length(std::vector<std::string>& affixes) {
  std::stable_sort(affixes.begin(), affixes.end(), [](const std::string& a, const std::string& b) {
    return utf8::length(a) > utf8::length(b);
  });
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
bool ends_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

// Longest prefix whose removal leaves at least `min_len` code points.
std::optional<std::size_t> match_prefix(std::string_view token, const std::vector<std::string>& prefixes,
                                        std::size_t min_len) {
  for (const auto& p : prefixes) {
    if (starts_with(token, p) && utf8::length(token.substr(p.size())) >= min_len) return p.size();
  }
  return std::nullopt;
}

std::optional<std::size_t> match_suffix(std::string_view token, const std::vector<std::string>& suffixes,
                                        std::size_t min_len) {
  for (const auto& s : suffixes) {
    if (ends_with(token, s) && utf8::length(token.substr(0, token.size() - s.size())) >= min_len) {
      return s.size();
    }
  }
  return std::nullopt;
}

}  // namespace

void AffixConfig::validate_and_sort() {
  if (min_stem_length < 2) throw InvalidHyperparameter("min_stem_length must be at least 2");
  for (ScriptAffixes* affixes : {&arabic, &arabizi}) {
    for (auto* list : {&affixes->prefixes, &affixes->suffixes, &affixes->past_suffixes}) {
      for (const auto& a : *list) {
        if (a.empty()) throw InvalidHyperparameter("empty affix");
      }
      sort_by_length(*list);
    }
  }
}

AffixConfig default_affix_config() {
  AffixConfig config;
  config.arabic.prefixes = {"ن", "ت", "ي", "م", "ال", "و", "ب", "لل", "ما"};
  config.arabic.suffixes = {"و", "وا", "ها", "هم", "كم", "ني", "ك", "ة", "ي", "ين", "ات", "ش"};
  config.arabic.past_suffixes = {"ت", "يت"};
  config.arabic.past_restoration = "ى";
  config.arabizi.prefixes = {"n", "t", "y", "m", "el", "w", "b", "ma"};
  config.arabizi.suffixes = {"w", "ou", "ha", "hom", "kom", "ni", "k", "a", "in", "at", "ch", "ech"};
  config.arabizi.past_suffixes = {"t", "yt", "it"};
  config.arabizi.past_restoration = "a";
  config.min_stem_length = 2;
  config.validate_and_sort();
  return config;
}

AffixConfig parse_affix_config(std::string_view contents) {
  AffixConfig config;
  std::string section;
  std::size_t line_no = 0;
  std::map<std::string, std::vector<std::string>*> lists = {
      {"arabic.prefixes", &config.arabic.prefixes},
      {"arabic.suffixes", &config.arabic.suffixes},
      {"arabic.past_suffixes", &config.arabic.past_suffixes},
      {"arabizi.prefixes", &config.arabizi.prefixes},
      {"arabizi.suffixes", &config.arabizi.suffixes},
      {"arabizi.past_suffixes", &config.arabizi.past_suffixes},
  };
  for (const auto& raw : split(contents, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw MalformedLine(line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (lists.count(section) == 0 && section != "options" && section != "arabic.past_restoration" &&
          section != "arabizi.past_restoration") {
        throw MalformedLine(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) throw MalformedLine(line_no, "entry outside a section");
    if (section == "options") {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw MalformedLine(line_no, "expected key = value");
      auto key = trim(line.substr(0, eq));
      long long value = 0;
      if (key != "min_stem_length" || !parse_int(trim(line.substr(eq + 1)), value) || value < 2) {
        throw MalformedLine(line_no, "bad option '" + line + "'");
      }
      config.min_stem_length = static_cast<std::size_t>(value);
    } else if (section == "arabic.past_restoration") {
      config.arabic.past_restoration = line;
    } else if (section == "arabizi.past_restoration") {
      config.arabizi.past_restoration = line;
    } else {
      lists.at(section)->push_back(line);
    }
  }
  config.validate_and_sort();
  return config;
}

AffixConfig load_affix_config(const std::filesystem::path& path) {
  return parse_affix_config(read_file(path));
}

std::string serialize_affix_config(const AffixConfig& config) {
  std::string out = "[options]\nmin_stem_length = " + std::to_string(config.min_stem_length) + "\n";
  auto emit = [&](const std::string& name, const ScriptAffixes& a) {
    auto list = [&](const std::string& section, const std::vector<std::string>& items) {
      out += "\n[" + name + "." + section + "]\n";
      for (const auto& item : items) out += item + "\n";
    };
    list("prefixes", a.prefixes);
    list("suffixes", a.suffixes);
    list("past_suffixes", a.past_suffixes);
    if (!a.past_restoration.empty()) out += "\n[" + name + ".past_restoration]\n" + a.past_restoration + "\n";
  };
  emit("arabic", config.arabic);
  emit("arabizi", config.arabizi);
  return out;
}

std::vector<std::string> stem_candidates(std::string_view token, const AffixConfig& config) {
  const Script script = utf8::contains_arabic(token) ? Script::Arabic : Script::Arabizi;
  const auto& affixes = config.for_script(script);
  const std::size_t min_len = config.min_stem_length;

  std::vector<std::string> base;
  base.emplace_back(token);
  auto prefix = match_prefix(token, affixes.prefixes, min_len);
  auto suffix = match_suffix(token, affixes.suffixes, min_len);
  if (prefix) base.emplace_back(token.substr(*prefix));
  if (suffix) base.emplace_back(token.substr(0, token.size() - *suffix));
  if (prefix && suffix && *prefix + *suffix < token.size()) {
    base.emplace_back(token.substr(*prefix, token.size() - *prefix - *suffix));
  }

  std::vector<std::string> all = base;
  if (!affixes.past_restoration.empty()) {
    for (const auto& form : base) {
      for (const auto& past : affixes.past_suffixes) {
        if (ends_with(form, past) && form.size() > past.size()) {
          all.push_back(form.substr(0, form.size() - past.size()) + affixes.past_restoration);
          break;
        }
      }
    }
  }

  std::vector<std::string> out;
  for (auto& candidate : all) {
    if (utf8::length(candidate) < min_len) continue;
    if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
    out.push_back(std::move(candidate));
  }
  return out;
}

std::optional<StemMatch> lookup_with_stemming(std::string_view token, const SentimentLexicon& lexicon,
                                              const AffixConfig& config) {
  const Script script = utf8::contains_arabic(token) ? Script::Arabic : Script::Arabizi;
  for (const auto& candidate : stem_candidates(token, config)) {
    if (const auto* entry = lexicon.find(candidate, script)) {
      return StemMatch{candidate, entry->score};
    }
  }
  return std::nullopt;
}

}  // namespace sentialg
