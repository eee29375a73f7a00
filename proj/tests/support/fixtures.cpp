#include "fixtures.hpp"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <map>

namespace sentialg::testing {

namespace {

std::string random_word(Rng& rng, const std::vector<std::string>& alphabet, std::size_t min_len, std::size_t max_len) {
  std::string out;
  const auto len = min_len + rng.index(max_len - min_len + 1);
  for (std::size_t i = 0; i < len; ++i) out += alphabet[rng.index(alphabet.size())];
  return out;
}

const std::vector<std::string> kArabicLetters = {"ب", "ت", "ج", "د", "ر", "ز", "س", "ص", "ع", "ف", "ق", "ل", "ح"};
const std::vector<std::string> kLatinLetters = {"b", "d", "f", "g", "k", "l", "r", "s", "z", "o", "i", "e", "3", "7"};

}  // namespace

SeedTable random_seed_table(Rng& rng, std::size_t max_terms) {
  SeedTable out;
  const auto terms = 1 + rng.index(max_terms);
  // Small dialect pools make collisions between English terms common.
  std::vector<std::string> pool;
  const auto pool_size = 2 + rng.index(terms + 1);
  for (std::size_t i = 0; i < pool_size; ++i) {
    pool.push_back(rng.index(2) == 0 ? random_word(rng, kArabicLetters, 2, 4) : random_word(rng, kLatinLetters, 2, 5));
  }
  for (std::size_t i = 0; i < terms; ++i) {
    const std::string english = "w" + std::to_string(rng.index(terms * 2));
    int score = static_cast<int>(1 + rng.index(5));
    if (rng.index(2) == 0) score = -score;
    out.seed.insert(SeedEntry{english, score});
    if (rng.index(5) == 0) continue;  // untranslated
    const auto translations = 1 + rng.index(3);
    for (std::size_t k = 0; k < translations; ++k) {
      const auto& dialect = pool[rng.index(pool.size())];
      out.table.insert(TranslationRecord{english, dialect, infer_term_script(dialect)});
    }
  }
  return out;
}

SentimentLexicon example_lexicon() {
  const std::set<SeedEntry> seed = {{"love", 3}, {"man", 2}, {"cry", -2}};
  std::set<TranslationRecord> table;
  for (const auto& [english, dialect] : std::vector<std::pair<std::string, std::string>>{
           {"love", "حب"}, {"love", "hab"}, {"man", "rajel"}, {"man", "راجل"}, {"cry", "بكى"}, {"cry", "bka"}}) {
    table.insert(TranslationRecord{english, dialect, infer_term_script(dialect)});
  }
  BuildOptions options;
  options.seed_name = "toy";
  return build_lexicon(seed, TranslationTable(table), options);
}

std::vector<ToyTerm> toy_terms() {
  const std::vector<std::string> arabic_pos = {"جميل", "زين",  "فرحان", "مليح", "حلو",  "رائع", "ممتاز", "سعيد",
                                               "لطيف", "نظيف", "شاطر",  "كريم", "صحيح", "نجاح", "بركة"};
  const std::vector<std::string> arabic_neg = {"حزين", "خايب", "مقلق", "كارثة", "فاشل",  "قبيح",  "تعبان", "غالي",
                                               "ظلم",  "مريض", "كذاب", "وسخ",   "خسارة", "مشكل", "زعفان"};
  const std::vector<std::string> arabizi_pos = {"mlih", "zin",   "chbab",  "farhan", "hlow",  "rai3", "momtaz", "sa3id",
                                                "latif", "ndif", "chater", "karim",  "s7i7", "najah", "baraka"};
  const std::vector<std::string> arabizi_neg = {"hzin",  "khayeb", "mqalleq", "karitha", "fachel", "9bi7",  "ta3ban", "ghali",
                                                "dolm",  "mrid",   "kedab",   "wsekh",   "khsara", "machkel", "z3fan"};
  std::vector<ToyTerm> out;
  for (std::size_t i = 0; i < 15; ++i) {
    const int magnitude = 1 + static_cast<int>(i % 5);
    out.push_back({arabic_pos[i], Script::Arabic, magnitude});
    out.push_back({arabic_neg[i], Script::Arabic, -magnitude});
    out.push_back({arabizi_pos[i], Script::Arabizi, magnitude});
    out.push_back({arabizi_neg[i], Script::Arabizi, -magnitude});
  }
  return out;
}

SentimentLexicon toy_lexicon() {
  SentimentLexicon lexicon;
  for (const auto& t : toy_terms()) {
    LexiconEntry e;
    e.term = t.term;
    e.script = t.script;
    e.score = t.score;
    e.sources = {{"toy", t.score}};
    lexicon.insert(std::move(e));
  }
  lexicon.metadata().seed_name = "toy";
  return lexicon;
}

namespace {

const std::vector<std::string> kArabicFiller = {"اليوم", "الدار",  "الخدمة", "الناس",  "هذا",   "كاين",   "راني",  "هنا",
                                                "غدوة",  "البلاد", "الطريق", "القهوة", "المدينة", "الجامعة", "كامل"};
const std::vector<std::string> kArabiziFiller = {"lyoum", "dar",  "khedma", "nas",   "hada", "kayen", "rani",  "hna",
                                                 "ghodwa", "bled", "triq",   "tobis", "qahwa", "mdina", "jami3a"};

std::string decorate(Rng& rng, const std::string& word, Script script) {
  auto cps = utf8::decode(word);
  if (cps.size() < 2) return word;
  if (script == Script::Arabizi && rng.uniform() < 0.15 && cps[cps.size() - 1] != cps[cps.size() - 2]) {
    const auto extra = 2 + rng.index(4);
    cps.insert(cps.end(), extra, cps.back());
  } else if (script == Script::Arabic && rng.uniform() < 0.15) {
    cps.insert(cps.begin() + static_cast<std::ptrdiff_t>(1 + rng.index(cps.size() - 1)), kTatweel);
  }
  return utf8::encode(cps);
}

}  // namespace

SyntheticCorpus synthetic_corpus(std::size_t n, std::uint64_t seed, const std::string& id_prefix) {
  Rng rng(seed);
  const auto terms = toy_terms();
  SyntheticCorpus out;
  for (std::size_t i = 0; i < n; ++i) {
    const Script script = rng.index(2) == 0 ? Script::Arabic : Script::Arabizi;
    const Label label = rng.index(2) == 0 ? Label::Positive : Label::Negative;
    std::vector<const ToyTerm*> pool;
    for (const auto& t : terms) {
      if (t.script == script && (t.score > 0) == (label == Label::Positive)) pool.push_back(&t);
    }
    const auto& filler = script == Script::Arabic ? kArabicFiller : kArabiziFiller;
    std::vector<std::string> words;
    const auto hits = 1 + rng.index(2);
    for (std::size_t k = 0; k < hits; ++k) words.push_back(decorate(rng, pool[rng.index(pool.size())]->term, script));
    const auto fill = 2 + rng.index(5);
    for (std::size_t k = 0; k < fill; ++k) words.push_back(filler[rng.index(filler.size())]);
    rng.shuffle(words);
    std::string text = join(words, " ");
    if (rng.uniform() < 0.2) text += " !";
    out.messages.push_back(Message{id_prefix + std::to_string(i), text, std::string("synthetic")});
    out.labels.push_back(label);
    out.scripts.push_back(script);
  }
  return out;
}

std::vector<LabeledText> gold_items(const SyntheticCorpus& corpus) {
  std::vector<LabeledText> out;
  for (std::size_t i = 0; i < corpus.messages.size(); ++i) {
    LabeledText item;
    item.id = corpus.messages[i].id;
    item.text = normalize(corpus.messages[i].text);
    item.script = corpus.scripts[i];
    item.label = corpus.labels[i];
    out.push_back(std::move(item));
  }
  return out;
}

LabeledDataset separable_fixture(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  LabeledDataset data;
  const double norm = std::sqrt(static_cast<double>(dim));
  while (data.size() < n) {
    const Label label = rng.index(2) == 0 ? Label::Positive : Label::Negative;
    const double center = label == Label::Positive ? 1.0 : -1.0;
    std::vector<double> x(dim);
    double s = 0.0;
    for (auto& v : x) {
      v = center + 0.5 * rng.normal();
      s += v;
    }
    const double margin = s / norm;
    if ((margin > 0) != (label == Label::Positive) || std::abs(margin) < 0.25) continue;
    data.features.push_back(FeatureVector::dense(std::move(x)));
    data.labels.push_back(label);
  }
  return data;
}

LabeledDataset sparse_count_fixture(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  LabeledDataset data;
  const std::size_t half = dim / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const Label label = i % 2 == 0 ? Label::Positive : Label::Negative;
    std::map<std::uint32_t, double> counts;
    const auto words = 3 + rng.index(6);
    for (std::size_t k = 0; k < words; ++k) {
      std::size_t j;
      if (rng.uniform() < 0.8) j = (label == Label::Positive ? 0 : half) + rng.index(half);
      else j = rng.index(dim);
      counts[static_cast<std::uint32_t>(j)] += 1.0;
    }
    data.features.push_back(FeatureVector::sparse(dim, {counts.begin(), counts.end()}));
    data.labels.push_back(label);
  }
  return data;
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("sentialg-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace sentialg::testing
