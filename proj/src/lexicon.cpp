#include "sentialg/lexicon.hpp"

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

std::set<SeedEntry> parse_seed_lexicon(std::string_view contents) {
  std::set<SeedEntry> seed;
  std::size_t line_no = 0;
  for (auto line : split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2) throw MalformedLine(line_no, "expected term<TAB>score");
    auto term = ascii_lower(trim(fields[0]));
    if (term.empty() || term.find_first_of(" \t;:") != std::string::npos) {
      throw MalformedLine(line_no, "invalid seed term '" + term + "'");
    }
    long long score = 0;
    if (!parse_int(trim(fields[1]), score) || score == 0 || score < -5 || score > 5) {
      throw MalformedLine(line_no, "seed score must be an integer in [-5,-1] or [1,5]");
    }
    seed.insert(SeedEntry{std::move(term), static_cast<int>(score)});
  }
  return seed;
}

std::set<SeedEntry> load_seed_lexicon(const std::filesystem::path& path) {
  return parse_seed_lexicon(read_file(path));
}

std::set<std::string> load_stoplist(const std::filesystem::path& path) {
  std::set<std::string> out;
  for (const auto& line : read_lines(path)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.insert(std::move(t));
  }
  return out;
}

void SentimentLexicon::insert(LexiconEntry entry) {
  Key key{entry.term, entry.script};
  auto [it, inserted] = entries_.insert_or_assign(std::move(key), std::move(entry));
  if (inserted) {
    (it->first.second == Script::Arabic ? metadata_.arabic_count : metadata_.arabizi_count)++;
  }
}

bool SentimentLexicon::erase(const std::string& term, Script script) {
  if (entries_.erase(Key{term, script}) == 0) return false;
  (script == Script::Arabic ? metadata_.arabic_count : metadata_.arabizi_count)--;
  return true;
}

const LexiconEntry* SentimentLexicon::find(std::string_view term, Script script) const {
  auto it = entries_.find(Key{std::string(term), script});
  return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry* SentimentLexicon::find(std::string_view term) const {
  return find(term, utf8::contains_arabic(term) ? Script::Arabic : Script::Arabizi);
}

std::size_t SentimentLexicon::count(Script script) const {
  std::size_t n = 0;
  for (const auto& [key, entry] : entries_) {
    if (key.second == script) ++n;
  }
  return n;
}

SentimentLexicon SentimentLexicon::scaled(double factor) const {
  SentimentLexicon out = *this;
  for (auto& [key, entry] : out.entries_) entry.score *= factor;
  return out;
}

SentimentLexicon build_lexicon(const std::set<SeedEntry>& seed, const TranslationProvider& provider,
                               const BuildOptions& options, BuildReport* report) {
  if (seed.empty()) throw EmptySeed();

  std::map<SentimentLexicon::Key, std::set<std::pair<std::string, int>>> inverse;
  std::set<std::string> recognized;
  for (const auto& entry : seed) {
    auto translations = provider.translate(entry.term);
    if (translations.empty()) continue;
    recognized.insert(entry.term);
    for (const auto& record : translations) {
      inverse[{record.dialect_term, record.script}].emplace(entry.term, entry.score);
    }
  }

  SentimentLexicon lexicon;
  std::size_t dropped = 0;
  for (auto& [key, sources] : inverse) {
    if (options.stoplist.count(key.first) != 0) {
      ++dropped;
      continue;
    }
    // Integer sum is exact, so the single division is correctly rounded.
    long long sum = 0;
    for (const auto& source : sources) sum += source.second;
    LexiconEntry entry;
    entry.term = key.first;
    entry.script = key.second;
    entry.score = static_cast<double>(sum) / static_cast<double>(sources.size());
    entry.sources = std::move(sources);
    lexicon.insert(std::move(entry));
  }
  lexicon.metadata().seed_name = options.seed_name;
  lexicon.metadata().build_timestamp = options.build_timestamp;

  if (report != nullptr) {
    std::set<std::string> seed_terms;
    for (const auto& entry : seed) seed_terms.insert(entry.term);
    report->seed_terms = seed_terms.size();
    report->recognized_seed_terms = recognized.size();
    report->dropped_by_stoplist = dropped;
    report->arabic_entries = lexicon.metadata().arabic_count;
    report->arabizi_entries = lexicon.metadata().arabizi_count;
  }
  return lexicon;
}

// Layout:
//   #sentialg-lexicon v1
//   #seed <TAB> name
//   #built <TAB> timestamp
//   #counts <TAB> arabic <TAB> arabizi
//   term <TAB> script <TAB> score <TAB> english:score;english:score
std::string serialize_lexicon(const SentimentLexicon& lexicon) {
  std::string out;
  out.append(kLexiconHeader).push_back('\n');
  const auto& meta = lexicon.metadata();
  out.append("#seed\t").append(meta.seed_name).push_back('\n');
  out.append("#built\t").append(meta.build_timestamp).push_back('\n');
  out.append("#counts\t")
      .append(std::to_string(meta.arabic_count))
      .append("\t")
      .append(std::to_string(meta.arabizi_count))
      .push_back('\n');
  for (const auto& [key, entry] : lexicon.entries()) {
    out.append(entry.term).push_back('\t');
    out.append(to_string(entry.script)).push_back('\t');
    out.append(format_double(entry.score)).push_back('\t');
    bool first = true;
    for (const auto& [term, score] : entry.sources) {
      if (!first) out.push_back(';');
      first = false;
      out.append(term).push_back(':');
      out.append(std::to_string(score));
    }
    out.push_back('\n');
  }
  return out;
}

SentimentLexicon parse_lexicon(std::string_view contents) {
  auto lines = split(contents, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  if (lines.size() < 4 || lines[0] != kLexiconHeader) {
    throw FormatVersionMismatch("not a '" + std::string(kLexiconHeader) + "' file");
  }
  auto meta_field = [&](std::size_t i, std::string_view tag) {
    auto fields = split(lines[i], '\t');
    if (fields.empty() || fields[0] != tag) throw MalformedLine(i + 1, "expected " + std::string(tag));
    return fields;
  };
  SentimentLexicon lexicon;
  auto seed = meta_field(1, "#seed");
  auto built = meta_field(2, "#built");
  auto counts = meta_field(3, "#counts");
  if (seed.size() != 2 || built.size() != 2 || counts.size() != 3) {
    throw MalformedLine(2, "bad metadata block");
  }
  long long arabic_count = 0;
  long long arabizi_count = 0;
  if (!parse_int(counts[1], arabic_count) || !parse_int(counts[2], arabizi_count)) {
    throw MalformedLine(4, "bad counts");
  }

  for (std::size_t i = 4; i < lines.size(); ++i) {
    const auto line_no = i + 1;
    auto fields = split(lines[i], '\t');
    if (fields.size() != 4) throw MalformedLine(line_no, "expected 4 fields");
    LexiconEntry entry;
    entry.term = fields[0];
    auto script = parse_script(fields[1]);
    if (entry.term.empty() || !script || *script == Script::Mixed) {
      throw MalformedLine(line_no, "bad term or script");
    }
    entry.script = *script;
    if (!parse_double(fields[2], entry.score)) throw MalformedLine(line_no, "bad score");
    for (const auto& source : fields[3].empty() ? std::vector<std::string>{} : split(fields[3], ';')) {
      auto colon = source.rfind(':');
      long long score = 0;
      if (colon == std::string::npos || colon == 0 ||
          !parse_int(std::string_view(source).substr(colon + 1), score)) {
        throw MalformedLine(line_no, "bad source '" + source + "'");
      }
      entry.sources.emplace(source.substr(0, colon), static_cast<int>(score));
    }
    lexicon.insert(std::move(entry));
  }
  if (static_cast<long long>(lexicon.metadata().arabic_count) != arabic_count ||
      static_cast<long long>(lexicon.metadata().arabizi_count) != arabizi_count) {
    throw MalformedLine(lines.size() + 1, "entry count does not match header (truncated file?)");
  }
  lexicon.metadata().seed_name = seed[1];
  lexicon.metadata().build_timestamp = built[1];
  return lexicon;
}

void save_lexicon(const SentimentLexicon& lexicon, const std::filesystem::path& path) {
  write_file(path, serialize_lexicon(lexicon));
}

SentimentLexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_file(path));
}

}  // namespace sentialg
