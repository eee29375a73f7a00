#include "sentialg/normalizer.hpp"

#include <stdexcept>
#include <unordered_set>

#include "sentialg/common.hpp"

namespace sentialg {

namespace {

bool is_detached_punct(char32_t cp) { return cp == '.' || cp == ',' || cp == '!' || cp == '?'; }

}  // namespace

std::vector<Message> deduplicate(const std::vector<Message>& corpus) {
  std::unordered_set<std::string> seen;
  std::vector<Message> out;
  out.reserve(corpus.size());
  for (const auto& message : corpus) {
    if (seen.insert(trim(message.text)).second) out.push_back(message);
  }
  return out;
}

std::string normalize(std::string_view text, const NormalizerOptions& options) {
  const std::size_t threshold = std::max<std::size_t>(options.collapse_threshold, 2);

  std::u32string chars;
  for (char32_t cp : utf8::decode(text)) {
    if (cp == '#' || cp == kTatweel) continue;
    if (options.lowercase_latin && cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
    chars.push_back(cp);
  }

  std::u32string collapsed;
  for (std::size_t i = 0; i < chars.size();) {
    std::size_t j = i;
    while (j < chars.size() && chars[j] == chars[i]) ++j;
    const std::size_t run = j - i;
    collapsed.append(run >= threshold ? 1 : run, chars[i]);
    i = j;
  }

  std::u32string spaced;
  for (std::size_t i = 0; i < collapsed.size(); ++i) {
    char32_t cp = collapsed[i];
    if (i > 0) {
      char32_t prev = collapsed[i - 1];
      bool boundary = is_detached_punct(cp) != is_detached_punct(prev) && !utf8::is_space(cp) &&
                      !utf8::is_space(prev);
      if (boundary) spaced.push_back(' ');
    }
    spaced.push_back(cp);
  }

  std::string out;
  bool pending_space = false;
  for (char32_t cp : spaced) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    utf8::append(out, cp);
  }
  return out;
}

Script detect_script(std::string_view text) {
  bool arabic = false;
  bool latin = false;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_arabic_letter(cp)) arabic = true;
    else if (utf8::is_latin_letter(cp)) latin = true;
  }
  if (arabic && latin) return Script::Mixed;
  return arabic ? Script::Arabic : Script::Arabizi;
}

TokenSequence tokenize(std::string_view normalized_text) {
  TokenSequence seq;
  std::string current;
  for (char32_t cp : utf8::decode(normalized_text)) {
    if (utf8::is_space(cp)) {
      if (!current.empty()) seq.tokens.push_back(std::move(current));
      current.clear();
    } else {
      utf8::append(current, cp);
    }
  }
  if (!current.empty()) seq.tokens.push_back(std::move(current));
  seq.script = detect_script(normalized_text);
  return seq;
}

TokenSequence prepare(std::string_view raw_text, const NormalizerOptions& options) {
  return tokenize(normalize(raw_text, options));
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!is_detached_punct(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<NGram> ngrams(const TokenSequence& tokens, std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("max_n must be at least 1");
  const auto& t = tokens.tokens;
  std::vector<NGram> out;
  const std::size_t top = std::min(max_n, t.size());
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t start = 0; start + n <= t.size(); ++start) {
      out.push_back(NGram{join(t, " ", start, start + n), start, n});
    }
  }
  return out;
}

}  // namespace sentialg
