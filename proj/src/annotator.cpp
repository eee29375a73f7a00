#include "sentialg/annotator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

namespace {

constexpr std::size_t kMinResidualLength = 2;

Script term_script(std::string_view term) {
  return utf8::contains_arabic(term) ? Script::Arabic : Script::Arabizi;
}

void sort_longest_first(std::vector<std::string>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::stable_sort(items.begin(), items.end(), [](const std::string& a, const std::string& b) {
    return utf8::length(a) > utf8::length(b);
  });
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
bool ends_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

}  // namespace

void NegationConfig::validate_and_sort() {
  for (NegationMarkers* m : {&arabic, &arabizi}) {
    if (m->standalone.empty() || m->prefixes.empty() || m->suffixes.empty()) {
      throw InvalidHyperparameter("negation marker sets must be non-empty for each script");
    }
    for (const auto* list : {&m->prefixes, &m->suffixes}) {
      for (const auto& item : *list) {
        if (item.empty()) throw InvalidHyperparameter("empty negation affix");
      }
    }
    sort_longest_first(m->prefixes);
    sort_longest_first(m->suffixes);
  }
}

NegationConfig default_negation_config() {
  NegationConfig config;
  config.arabic.standalone = {"ما", "مش", "ماشي", "موش", "ماهيش", "ماهوش", "لا", "ش"};
  config.arabic.prefixes = {"ما", "م"};
  config.arabic.suffixes = {"ش"};
  config.arabizi.standalone = {"ma", "machi", "mechi", "mch", "mahich", "mahouch", "mouch", "ch"};
  config.arabizi.prefixes = {"ma"};
  config.arabizi.suffixes = {"ch", "sh"};
  config.scope = NegationScope::ToEnd;
  config.validate_and_sort();
  return config;
}

NegationConfig parse_negation_config(std::string_view contents) {
  NegationConfig config;
  std::string section;
  std::size_t line_no = 0;
  for (const auto& raw : split(contents, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw MalformedLine(line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      continue;
    }
    if (section == "options") {
      auto eq = line.find('=');
      if (eq == std::string::npos || trim(line.substr(0, eq)) != "scope") {
        throw MalformedLine(line_no, "expected scope = to_end|to_punctuation");
      }
      auto value = trim(line.substr(eq + 1));
      if (value == "to_end") config.scope = NegationScope::ToEnd;
      else if (value == "to_punctuation") config.scope = NegationScope::ToPunctuation;
      else throw MalformedLine(line_no, "unknown scope '" + value + "'");
      continue;
    }
    auto dot = section.find('.');
    if (dot == std::string::npos) throw MalformedLine(line_no, "entry outside a known section");
    auto script = section.substr(0, dot);
    auto kind = section.substr(dot + 1);
    NegationMarkers* markers = script == "arabic" ? &config.arabic : script == "arabizi" ? &config.arabizi : nullptr;
    if (markers == nullptr) throw MalformedLine(line_no, "unknown section [" + section + "]");
    if (kind == "standalone") markers->standalone.insert(line);
    else if (kind == "prefixes") markers->prefixes.push_back(line);
    else if (kind == "suffixes") markers->suffixes.push_back(line);
    else throw MalformedLine(line_no, "unknown section [" + section + "]");
  }
  config.validate_and_sort();
  return config;
}

NegationConfig load_negation_config(const std::filesystem::path& path) {
  return parse_negation_config(read_file(path));
}

NegationResult detect_negation(std::string_view token, const NegationConfig& config) {
  const auto& markers = config.for_script(term_script(token));
  if (markers.standalone.count(std::string(token)) != 0) return {true, std::nullopt};
  for (const auto& prefix : markers.prefixes) {
    if (!starts_with(token, prefix)) continue;
    for (const auto& suffix : markers.suffixes) {
      if (!ends_with(token, suffix) || prefix.size() + suffix.size() >= token.size()) continue;
      auto residual = token.substr(prefix.size(), token.size() - prefix.size() - suffix.size());
      if (utf8::length(residual) >= kMinResidualLength) return {true, std::string(residual)};
    }
  }
  return {false, std::nullopt};
}

ScoreResult score_message(const TokenSequence& tokens, const SentimentLexicon& lexicon,
                          const AnnotatorConfig& config) {
  enum class Kind { Plain, Standalone, Circumfix, Punct };
  const auto& t = tokens.tokens;
  const std::size_t count = t.size();
  const std::size_t max_n = std::max<std::size_t>(config.max_n, 1);

  std::vector<Kind> kinds(count, Kind::Plain);
  std::vector<std::string> effective(t.begin(), t.end());
  for (std::size_t i = 0; i < count; ++i) {
    if (is_punctuation_token(t[i])) {
      kinds[i] = Kind::Punct;
      continue;
    }
    auto neg = detect_negation(t[i], config.negation);
    if (!neg.is_negator) continue;
    if (neg.residual) {
      kinds[i] = Kind::Circumfix;
      effective[i] = *neg.residual;
    } else {
      kinds[i] = Kind::Standalone;
    }
  }

  ScoreResult result;
  bool negated = false;
  std::size_t i = 0;
  while (i < count) {
    if (kinds[i] == Kind::Punct) {
      if (config.negation.scope == NegationScope::ToPunctuation) negated = false;
      ++i;
      continue;
    }
    if (kinds[i] == Kind::Standalone) {
      if (lexicon.find(t[i]) != nullptr) result.trace.negator_conflicts.push_back(t[i]);
      negated = !negated;
      ++i;
      continue;
    }
    if (kinds[i] == Kind::Circumfix) negated = !negated;

    // Spans may start at a circumfix token but never extend over a negator
    // or punctuation token.
    std::size_t reach = 1;
    while (reach < max_n && i + reach < count && kinds[i + reach] == Kind::Plain) ++reach;

    bool matched = false;
    for (std::size_t n = reach; n >= 1 && !matched; --n) {
      MatchSpan span;
      if (n > 1) {
        auto text = join(effective, " ", i, i + n);
        const auto* entry = lexicon.find(text);
        if (entry == nullptr) continue;
        span.matched = text;
        span.raw = entry->score;
      } else if (const auto* entry = lexicon.find(effective[i])) {
        span.matched = effective[i];
        span.raw = entry->score;
      } else if (auto stem = lookup_with_stemming(effective[i], lexicon, config.affixes)) {
        span.matched = stem->matched_form;
        span.raw = stem->score;
      } else {
        break;
      }
      span.ngram = join(t, " ", i, i + n);
      span.negated = negated;
      span.applied = negated ? -span.raw : span.raw;
      span.start = i;
      span.length = n;
      result.trace.spans.push_back(std::move(span));
      i += n;
      matched = true;
    }
    if (!matched) ++i;
  }

  double magnitude = 0.0;
  for (const auto& span : result.trace.spans) {
    result.score += span.applied;
    magnitude += std::abs(span.applied);
  }
  // Sums that cancel up to rounding count as zero, at any lexicon scale.
  const double slack = static_cast<double>(result.trace.spans.size()) * std::numeric_limits<double>::epsilon();
  if (std::abs(result.score) <= slack * magnitude) result.score = 0.0;
  return result;
}

AnnotatedMessage annotate_message(const Message& message, const SentimentLexicon& lexicon,
                                  const AnnotatorConfig& config) {
  AnnotatedMessage out;
  out.message = message;
  out.normalized = normalize(message.text, config.normalizer);
  auto tokens = tokenize(out.normalized);
  out.script = tokens.script;
  auto scored = score_message(tokens, lexicon, config);
  out.score = scored.score;
  out.label = label_for_score(scored.score);
  out.trace = std::move(scored.trace);
  return out;
}

std::size_t AnnotationSummary::total() const {
  std::size_t n = 0;
  for (const auto& row : counts) {
    for (auto c : row) n += c;
  }
  return n;
}

std::vector<AnnotatedMessage> annotate_corpus(const std::vector<Message>& corpus,
                                              const SentimentLexicon& lexicon,
                                              const AnnotatorConfig& config, unsigned jobs,
                                              AnnotationSummary* summary) {
  std::vector<AnnotatedMessage> out(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { out[i] = annotate_message(corpus[i], lexicon, config); });
  if (summary != nullptr) {
    *summary = AnnotationSummary{};
    for (const auto& a : out) summary->counts[static_cast<int>(a.script)][static_cast<int>(a.label)]++;
  }
  return out;
}

LabeledText to_labeled_text(const AnnotatedMessage& annotated) {
  return LabeledText{annotated.message.id, annotated.normalized, annotated.script, annotated.label, std::nullopt};
}

std::vector<LabeledText> build_balanced_training_set(const std::vector<AnnotatedMessage>& annotated,
                                                     std::size_t per_cell, std::uint64_t seed,
                                                     const std::optional<SplitSpec>& split_spec) {
  const std::pair<Script, Label> cells[] = {{Script::Arabic, Label::Positive},
                                            {Script::Arabic, Label::Negative},
                                            {Script::Arabizi, Label::Positive},
                                            {Script::Arabizi, Label::Negative}};
  std::map<std::pair<Script, Label>, std::vector<std::size_t>> pools;
  for (std::size_t i = 0; i < annotated.size(); ++i) pools[{annotated[i].script, annotated[i].label}].push_back(i);

  // Check every cell before drawing so the error names the first short cell.
  for (const auto& cell : cells) {
    const auto available = pools[cell].size();
    if (available < per_cell) {
      throw InsufficientData(std::string(to_string(cell.first)) + "/" + std::string(to_string(cell.second)),
                             available, per_cell);
    }
  }

  Rng rng(seed);
  std::vector<std::size_t> chosen;
  for (const auto& cell : cells) {
    auto& pool = pools[cell];
    // Partial Fisher-Yates: the first per_cell slots become the sample.
    for (std::size_t k = 0; k < per_cell; ++k) {
      std::size_t j = k + rng.index(pool.size() - k);
      std::swap(pool[k], pool[j]);
      chosen.push_back(pool[k]);
    }
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<LabeledText> sample;
  sample.reserve(chosen.size());
  for (auto idx : chosen) sample.push_back(to_labeled_text(annotated[idx]));
  if (!split_spec) return sample;

  const auto parts = assign_split(sample, *split_spec);
  for (std::size_t i = 0; i < sample.size(); ++i) sample[i].part = parts[i];
  return sample;
}

}  // namespace sentialg
