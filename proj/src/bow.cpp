#include "sentialg/bow.hpp"

#include <map>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

BowModel::BowModel(std::vector<std::string> vocabulary, std::size_t min_count, BowWeighting weighting)
    : vocabulary_(std::move(vocabulary)), min_count_(min_count), weighting_(weighting) {
  index_.reserve(vocabulary_.size());
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) index_.emplace(vocabulary_[i], i);
}

std::optional<std::size_t> BowModel::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BowModel bow_fit(const TokenizedCorpus& corpus, std::size_t min_count, BowWeighting weighting) {
  if (corpus.empty()) throw EmptyCorpus();
  if (min_count == 0) throw InvalidHyperparameter("min_count must be at least 1");
  std::map<std::string, std::size_t> counts;
  for (const auto& doc : corpus) {
    for (const auto& token : doc) counts[token]++;
  }
  std::vector<std::string> vocabulary;
  for (const auto& [token, n] : counts) {
    if (n >= min_count) vocabulary.push_back(token);
  }
  return BowModel(std::move(vocabulary), min_count, weighting);
}

FeatureVector bow_transform(const BowModel& model, const std::vector<std::string>& tokens) {
  std::map<std::uint32_t, double> counts;
  for (const auto& token : tokens) {
    if (auto idx = model.index_of(token)) counts[static_cast<std::uint32_t>(*idx)] += 1.0;
  }
  std::vector<std::pair<std::uint32_t, double>> entries(counts.begin(), counts.end());
  if (model.weighting() == BowWeighting::Presence) {
    for (auto& e : entries) e.second = 1.0;
  }
  return FeatureVector::sparse(model.dimension(), std::move(entries));
}

std::string serialize_bow(const BowModel& model) {
  std::string out;
  out.append(kBowHeader).push_back('\n');
  out += "min_count\t" + std::to_string(model.min_count()) + "\n";
  out += std::string("weighting\t") + (model.weighting() == BowWeighting::Count ? "count" : "presence") + "\n";
  out += "size\t" + std::to_string(model.dimension()) + "\n";
  for (const auto& token : model.vocabulary()) out += token + "\n";
  return out;
}

BowModel parse_bow(std::string_view contents) {
  auto lines = split(contents, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 4 || lines[0] != kBowHeader) {
    throw FormatVersionMismatch("not a '" + std::string(kBowHeader) + "' file");
  }
  auto field = [&](std::size_t i, std::string_view key) {
    auto parts = split(lines[i], '\t');
    if (parts.size() != 2 || parts[0] != key) throw MalformedLine(i + 1, "expected " + std::string(key));
    return parts[1];
  };
  long long min_count = 0;
  long long size = 0;
  if (!parse_int(field(1, "min_count"), min_count) || min_count < 1) throw MalformedLine(2, "bad min_count");
  auto weighting_name = field(2, "weighting");
  BowWeighting weighting;
  if (weighting_name == "count") weighting = BowWeighting::Count;
  else if (weighting_name == "presence") weighting = BowWeighting::Presence;
  else throw MalformedLine(3, "bad weighting");
  if (!parse_int(field(3, "size"), size) || size < 0) throw MalformedLine(4, "bad size");
  if (lines.size() != static_cast<std::size_t>(size) + 4) {
    throw MalformedLine(lines.size() + 1, "vocabulary size does not match header");
  }
  std::vector<std::string> vocabulary(lines.begin() + 4, lines.end());
  return BowModel(std::move(vocabulary), static_cast<std::size_t>(min_count), weighting);
}

void save_bow(const BowModel& model, const std::filesystem::path& path) { write_file(path, serialize_bow(model)); }

BowModel load_bow(const std::filesystem::path& path) { return parse_bow(read_file(path)); }

}  // namespace sentialg
