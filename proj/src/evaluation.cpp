#include "sentialg/evaluation.hpp"

#include <cstdio>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

namespace {

int slot(Label label) {
  if (label == Label::Positive) return 0;
  if (label == Label::Negative) return 1;
  throw Error("metrics need positive or negative labels");
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

ClassMetrics class_metrics(std::size_t tp, std::size_t fp, std::size_t fn) {
  ClassMetrics m;
  m.precision = ratio(tp, tp + fp);
  m.recall = ratio(tp, tp + fn);
  m.f1 = m.precision + m.recall > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  m.support = tp + fn;
  return m;
}

}  // namespace

Metrics compute_metrics(std::span<const Label> gold, std::span<const Label> predicted) {
  if (gold.size() != predicted.size()) throw LengthMismatch(gold.size(), predicted.size());
  if (gold.empty()) throw EmptyCorpus();
  Metrics m;
  m.total = gold.size();
  for (std::size_t i = 0; i < gold.size(); ++i) m.confusion[slot(gold[i])][slot(predicted[i])]++;
  const auto& c = m.confusion;
  m.accuracy = ratio(c[0][0] + c[1][1], m.total);
  m.positive = class_metrics(c[0][0], c[1][0], c[0][1]);
  m.negative = class_metrics(c[1][1], c[0][1], c[1][0]);
  m.macro_f1 = (m.positive.f1 + m.negative.f1) / 2.0;
  return m;
}

std::string_view to_string(VectorizerKind kind) {
  switch (kind) {
    case VectorizerKind::BOW: return "bow";
    case VectorizerKind::PVDM: return "pvdm";
    case VectorizerKind::PVDBOW: return "pvdbow";
    case VectorizerKind::Merged: return "merged";
  }
  return "bow";
}

std::optional<VectorizerKind> parse_vectorizer_kind(std::string_view text) {
  const auto lower = ascii_lower(text);
  for (auto kind : kAllVectorizers) {
    if (lower == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(TestProtocol protocol) {
  return protocol == TestProtocol::Internal ? "internal" : "external";
}

namespace {

VectorizerKind kind_of(PvMode mode) {
  switch (mode) {
    case PvMode::PVDM: return VectorizerKind::PVDM;
    case PvMode::PVDBOW: return VectorizerKind::PVDBOW;
    case PvMode::Merged: return VectorizerKind::Merged;
  }
  return VectorizerKind::Merged;
}

PvMode mode_of(VectorizerKind kind) {
  switch (kind) {
    case VectorizerKind::PVDM: return PvMode::PVDM;
    case VectorizerKind::PVDBOW: return PvMode::PVDBOW;
    default: return PvMode::Merged;
  }
}

}  // namespace

Vectorizer::Vectorizer(ParagraphVectorModel pv, std::size_t infer_steps)
    : kind_(kind_of(pv.mode())), pv_(std::move(pv)), infer_steps_(infer_steps) {}

std::size_t Vectorizer::dimension() const {
  if (bow_) return bow_->dimension();
  if (pv_) return pv_->output_dimension();
  return 0;
}

FeatureVector Vectorizer::transform(const std::vector<std::string>& tokens, std::uint64_t seed,
                                    std::string_view doc_id) const {
  if (bow_) return bow_transform(*bow_, tokens);
  if (pv_) return pv_infer(*pv_, tokens, infer_steps_, derive_seed(seed, doc_id));
  throw Error("vectorizer is not fitted");
}

TokenizedCorpus tokenize_all(const std::vector<LabeledText>& items) {
  TokenizedCorpus out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(tokenize(item.text).tokens);
  return out;
}

Vectorizer fit_vectorizer(VectorizerKind kind, const TokenizedCorpus& corpus, const VectorizerConfig& config,
                          std::uint64_t seed, std::vector<FeatureVector>* training_features) {
  if (kind == VectorizerKind::BOW) {
    Vectorizer v(bow_fit(corpus, config.bow_min_count, config.bow_weighting));
    if (training_features) {
      training_features->clear();
      for (const auto& doc : corpus) training_features->push_back(bow_transform(*v.bow(), doc));
    }
    return v;
  }
  Vectorizer v(pv_train(corpus, mode_of(kind), config.pv, seed), config.infer_steps);
  if (training_features) {
    training_features->clear();
    for (std::size_t i = 0; i < corpus.size(); ++i) training_features->push_back(v.pv()->document_vector(i));
  }
  return v;
}

void save_vectorizer(const Vectorizer& vectorizer, const std::filesystem::path& path) {
  if (vectorizer.bow()) save_bow(*vectorizer.bow(), path);
  else if (vectorizer.pv()) save_pv(*vectorizer.pv(), path);
  else throw Error("vectorizer is not fitted");
}

Vectorizer load_vectorizer(const std::filesystem::path& path, std::size_t infer_steps) {
  auto contents = read_file(path);
  std::string_view view(contents);
  if (view.starts_with(kBowHeader)) return Vectorizer(parse_bow(view));
  if (view.starts_with(kPvHeader)) return Vectorizer(parse_pv(view), infer_steps);
  throw FormatVersionMismatch("not a vectorizer file: " + path.string());
}

std::uint64_t fingerprint(const std::vector<LabeledText>& items) {
  std::uint64_t h = fnv1a("");
  for (const auto& item : items) {
    std::string record = item.id + '\t' + item.text + '\t' + std::string(to_string(item.script)) + '\t' +
                         std::string(to_string(item.label)) + '\t' +
                         (item.part ? std::string(to_string(*item.part)) : std::string()) + '\n';
    h = fnv1a(record, h);
  }
  return h;
}

namespace {

struct Featurized {
  std::vector<FeatureVector> train;
  std::vector<FeatureVector> test;
};

std::vector<Label> labels_of(const std::vector<LabeledText>& items) {
  std::vector<Label> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.label);
  return out;
}

std::vector<LabeledText> of_script(const std::vector<LabeledText>& items, Script script) {
  std::vector<LabeledText> out;
  for (const auto& item : items) {
    if (item.script == script) out.push_back(item);
  }
  return out;
}

FeatureVector concat(const FeatureVector& a, const FeatureVector& b) {
  auto values = a.to_dense();
  auto tail = b.to_dense();
  values.insert(values.end(), tail.begin(), tail.end());
  return FeatureVector::dense(std::move(values));
}

// Features for all four vectorizers. The paragraph vectors come from one
// Merged model, whose halves equal standalone PV-DM and PV-DBOW runs.
std::array<Featurized, 4> featurize(const std::vector<LabeledText>& train, const std::vector<LabeledText>& test,
                                    const GridConfig& config, std::uint64_t seed) {
  std::array<Featurized, 4> out;
  const auto train_tokens = tokenize_all(train);
  const auto test_tokens = tokenize_all(test);

  auto bow = fit_vectorizer(VectorizerKind::BOW, train_tokens, config.vectorizer, seed, &out[0].train);
  for (const auto& doc : test_tokens) out[0].test.push_back(bow_transform(*bow.bow(), doc));

  auto merged = pv_train(train_tokens, PvMode::Merged, config.vectorizer.pv, derive_seed(seed, "pv"));
  const auto infer_seed = derive_seed(seed, "infer");
  const std::array<Vectorizer, 2> halves = {Vectorizer(merged.extract(PvMode::PVDM), config.vectorizer.infer_steps),
                                            Vectorizer(merged.extract(PvMode::PVDBOW), config.vectorizer.infer_steps)};
  for (std::size_t h = 0; h < 2; ++h) {
    auto& f = out[1 + h];
    for (std::size_t i = 0; i < train.size(); ++i) f.train.push_back(halves[h].pv()->document_vector(i));
    f.test.resize(test.size());
    parallel_for(test.size(), config.jobs,
                 [&](std::size_t i) { f.test[i] = halves[h].transform(test_tokens[i], infer_seed, test[i].id); });
  }
  for (std::size_t i = 0; i < train.size(); ++i) out[3].train.push_back(merged.document_vector(i));
  for (std::size_t i = 0; i < test.size(); ++i) out[3].test.push_back(concat(out[1].test[i], out[2].test[i]));
  return out;
}

}  // namespace

EvalReport run_grid(const std::vector<LabeledText>& silver, const std::vector<LabeledText>& external,
                    const GridConfig& config) {
  config.classifier.validate();
  config.vectorizer.pv.validate();
  EvalReport report;
  report.config = config;
  report.silver_fingerprint = fingerprint(silver);
  report.external_fingerprint = fingerprint(external);

  bool tagged = !silver.empty();
  for (const auto& item : silver) tagged = tagged && item.part.has_value();
  const auto parts = tagged ? group_by_part(silver) : split(silver, config.split);

  for (Script script : {Script::Arabic, Script::Arabizi}) {
    for (TestProtocol protocol : {TestProtocol::Internal, TestProtocol::External}) {
      const auto train_items = of_script(protocol == TestProtocol::Internal ? parts.train : silver, script);
      const auto test_items = of_script(protocol == TestProtocol::Internal ? parts.test : external, script);
      const std::string prefix = std::string(to_string(script)) + "/" + std::string(to_string(protocol));

      const auto features = featurize(train_items, test_items, config, derive_seed(config.seed, prefix));
      const auto train_labels = labels_of(train_items);
      const auto gold = labels_of(test_items);

      const std::size_t first = report.cells.size();
      for (auto vectorizer : kAllVectorizers) {
        for (auto classifier : kAllClassifiers) {
          GridCell cell;
          cell.script = script;
          cell.protocol = protocol;
          cell.vectorizer = vectorizer;
          cell.classifier = classifier;
          cell.seed = derive_seed(config.seed, prefix + "/" + std::string(to_string(vectorizer)) + "/" +
                                                   std::string(to_string(classifier)));
          cell.train_size = train_items.size();
          report.cells.push_back(cell);
        }
      }
      parallel_for(report.cells.size() - first, config.jobs, [&](std::size_t k) {
        auto& cell = report.cells[first + k];
        const auto& f = features[static_cast<std::size_t>(cell.vectorizer)];
        LabeledDataset data{f.train, train_labels};
        auto model = train(cell.classifier, data, config.classifier, cell.seed);
        cell.feature_dimension = model.dimension();
        if (test_items.empty()) return;
        std::vector<Label> predicted;
        predicted.reserve(f.test.size());
        for (const auto& x : f.test) predicted.push_back(model.predict(x));
        cell.metrics = compute_metrics(gold, predicted);
      });
    }
  }
  return report;
}

Json to_json(const Metrics& m) {
  auto cls = [](const ClassMetrics& c) {
    Json j;
    j["precision"] = c.precision;
    j["recall"] = c.recall;
    j["f1"] = c.f1;
    j["support"] = c.support;
    return j;
  };
  Json j;
  j["total"] = m.total;
  j["accuracy"] = m.accuracy;
  j["macro_f1"] = m.macro_f1;
  j["positive"] = cls(m.positive);
  j["negative"] = cls(m.negative);
  // Rows are gold labels, columns predictions, both ordered positive, negative.
  j["confusion"] = Json::array({Json::array({m.confusion[0][0], m.confusion[0][1]}),
                                Json::array({m.confusion[1][0], m.confusion[1][1]})});
  return j;
}

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json provenance(const EvalReport& report) {
  const auto& c = report.config;
  Json j;
  j["seed"] = c.seed;
  j["split"] = {{"train", c.split.train}, {"dev", c.split.dev}, {"test", c.split.test}, {"seed", c.split.seed}};
  const auto& pv = c.vectorizer.pv;
  j["vectorizer"] = {
      {"bow_min_count", c.vectorizer.bow_min_count},
      {"bow_weighting", c.vectorizer.bow_weighting == BowWeighting::Count ? "count" : "presence"},
      {"pv_dim", pv.dim},
      {"pv_window", pv.window},
      {"pv_epochs", pv.epochs},
      {"pv_negative", pv.negative},
      {"pv_min_count", pv.min_count},
      {"pv_learning_rate", pv.learning_rate},
      {"pv_composition", pv.composition == PvComposition::Concatenate ? "concatenate" : "average"},
      {"infer_steps", c.vectorizer.infer_steps},
  };
  const auto& hp = c.classifier;
  j["classifier"] = {
      {"svm_c", hp.svm_c},
      {"svm_epochs", hp.svm_epochs},
      {"svm_learning_rate", hp.svm_learning_rate},
      {"lr_lambda", hp.lr_lambda},
      {"lr_learning_rate", hp.lr_learning_rate},
      {"lr_epochs", hp.lr_epochs},
      {"nb_alpha", hp.nb_alpha},
      {"max_depth", hp.max_depth},
      {"min_leaf", hp.min_leaf},
      {"max_features", hp.max_features ? Json(*hp.max_features) : Json("auto")},
      {"rf_trees", hp.rf_trees},
      {"rf_bootstrap", hp.rf_bootstrap},
  };
  j["silver_fingerprint"] = hex(report.silver_fingerprint);
  j["external_fingerprint"] = hex(report.external_fingerprint);
  return j;
}

}  // namespace

Json to_json(const EvalReport& report) {
  Json j;
  j["format"] = "sentialg-report v1";
  j["provenance"] = provenance(report);
  j["cell_count"] = report.cells.size();
  Json results = Json::object();
  for (const auto& cell : report.cells) {
    Json c;
    c["seed"] = cell.seed;
    c["train_size"] = cell.train_size;
    c["dimension"] = cell.feature_dimension;
    c["metrics"] = cell.metrics ? to_json(*cell.metrics) : Json(nullptr);
    results[std::string(to_string(cell.script))][std::string(to_string(cell.protocol))]
           [std::string(to_string(cell.vectorizer))][std::string(to_string(cell.classifier))] = std::move(c);
  }
  j["results"] = std::move(results);
  return j;
}

std::string render_table(const EvalReport& report) {
  const std::array<std::pair<Script, TestProtocol>, 4> columns = {{{Script::Arabic, TestProtocol::Internal},
                                                                   {Script::Arabic, TestProtocol::External},
                                                                   {Script::Arabizi, TestProtocol::Internal},
                                                                   {Script::Arabizi, TestProtocol::External}}};
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-8s %-4s", "vector", "clf");
  out += buf;
  for (const auto& [script, protocol] : columns) {
    std::snprintf(buf, sizeof buf, " | %-17s", (std::string(to_string(script)) + " " + std::string(to_string(protocol))).c_str());
    out += buf;
  }
  out += "\n";
  std::snprintf(buf, sizeof buf, "%-8s %-4s", "", "");
  out += buf;
  for (std::size_t i = 0; i < columns.size(); ++i) out += " |   Acc      F1    ";
  out += "\n";
  for (auto vectorizer : kAllVectorizers) {
    for (auto classifier : kAllClassifiers) {
      std::snprintf(buf, sizeof buf, "%-8s %-4s", std::string(to_string(vectorizer)).c_str(),
                    std::string(to_string(classifier)).c_str());
      out += buf;
      for (const auto& [script, protocol] : columns) {
        const GridCell* found = nullptr;
        for (const auto& cell : report.cells) {
          if (cell.script == script && cell.protocol == protocol && cell.vectorizer == vectorizer &&
              cell.classifier == classifier) {
            found = &cell;
          }
        }
        if (found && found->metrics) {
          std::snprintf(buf, sizeof buf, " | %6.2f  %6.2f   ", 100.0 * found->metrics->accuracy,
                        100.0 * found->metrics->macro_f1);
        } else {
          std::snprintf(buf, sizeof buf, " | %6s  %6s   ", "-", "-");
        }
        out += buf;
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace sentialg
