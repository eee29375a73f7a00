#include "cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "sentialg/annotator.hpp"
#include "sentialg/common.hpp"
#include "sentialg/corpus_io.hpp"
#include "sentialg/errors.hpp"
#include "sentialg/evaluation.hpp"
#include "sentialg/lexicon.hpp"
#include "sentialg/translation.hpp"

namespace sentialg::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
  std::string config;
  unsigned jobs = 1;
};

struct AnnotatorOptions {
  std::string lexicon;
  std::string affixes;
  std::string negation;
  std::size_t collapse_threshold = 3;
  bool lowercase_latin = false;
  std::size_t max_n = 3;
  std::string scope;
};

struct ModelOptions {
  std::string vectorizer = "bow";
  std::string classifier = "lr";
  VectorizerConfig vec;
  std::string bow_weighting = "count";
  std::string pv_composition = "concatenate";
  ClassifierHyperparameters hp;
  std::size_t max_features = 0;
  bool no_bootstrap = false;
};

struct BuildArgs {
  std::string seed_lexicon;
  std::string table;
  std::string stoplist;
  std::string output;
  std::string seed_name;
  std::string timestamp;
};

struct AnnotateArgs {
  AnnotatorOptions annotator;
  std::string input;
  std::string output;
  std::string summary;
  std::size_t balanced = 0;
  std::string balanced_output;
  std::string split;
  std::uint64_t seed = 0;
};

struct TrainArgs {
  std::string input;
  std::string script;
  std::string part;
  ModelOptions model;
  std::string vectorizer_output;
  std::string model_output;
  std::uint64_t seed = 0;
};

struct EvalArgs {
  bool grid = false;
  std::string input;
  std::string external;
  std::string script;
  std::string part;
  std::string vectorizer_model;
  std::string model;
  std::string output;
  std::string table;
  std::string split;
  std::size_t infer_steps = 20;
  ModelOptions options;
  std::uint64_t seed = 0;
};

struct ScoreArgs {
  AnnotatorOptions annotator;
  std::string text;
  bool json = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "Flat key = value file; keys are long flag names");
  app->add_option("--jobs", c.jobs, "Maximum worker threads")->check(CLI::PositiveNumber);
}

void add_annotator(CLI::App* app, AnnotatorOptions& a) {
  app->add_option("--lexicon", a.lexicon, "Sentiment lexicon file");
  app->add_option("--affixes", a.affixes, "Affix configuration (default: built-in)");
  app->add_option("--negation", a.negation, "Negation configuration (default: built-in)");
  app->add_option("--collapse-threshold", a.collapse_threshold, "Collapse letter runs at least this long");
  app->add_flag("--lowercase-latin", a.lowercase_latin, "Lowercase Latin letters during normalization");
  app->add_option("--max-n", a.max_n, "Longest n-gram to match");
  app->add_option("--scope", a.scope, "Negation scope: to_end or to_punctuation");
}

void add_model(CLI::App* app, ModelOptions& m, bool with_kinds) {
  if (with_kinds) {
    app->add_option("--vectorizer", m.vectorizer, "bow, pvdm, pvdbow or merged");
    app->add_option("--classifier", m.classifier, "svm, nb, lr, dt or rf");
  }
  app->add_option("--bow-min-count", m.vec.bow_min_count, "BOW minimum token count");
  app->add_option("--bow-weighting", m.bow_weighting, "BOW weighting: count or presence");
  app->add_option("--pv-dim", m.vec.pv.dim, "Paragraph vector size");
  app->add_option("--pv-window", m.vec.pv.window, "PV-DM context words");
  app->add_option("--pv-epochs", m.vec.pv.epochs, "Paragraph vector epochs");
  app->add_option("--pv-negative", m.vec.pv.negative, "Negative samples per prediction");
  app->add_option("--pv-min-count", m.vec.pv.min_count, "Paragraph vector minimum token count");
  app->add_option("--pv-learning-rate", m.vec.pv.learning_rate, "Initial learning rate");
  app->add_option("--pv-composition", m.pv_composition, "PV-DM context: concatenate or average");
  app->add_option("--infer-steps", m.vec.infer_steps, "Inference passes for unseen documents");
  app->add_option("--svm-c", m.hp.svm_c, "SVM C");
  app->add_option("--svm-epochs", m.hp.svm_epochs, "SVM epochs");
  app->add_option("--svm-learning-rate", m.hp.svm_learning_rate, "SVM initial step");
  app->add_option("--lr-lambda", m.hp.lr_lambda, "Logistic regression L2 weight");
  app->add_option("--lr-learning-rate", m.hp.lr_learning_rate, "Logistic regression initial step");
  app->add_option("--lr-epochs", m.hp.lr_epochs, "Logistic regression epochs");
  app->add_option("--nb-alpha", m.hp.nb_alpha, "Naive Bayes smoothing");
  app->add_option("--max-depth", m.hp.max_depth, "Tree depth limit");
  app->add_option("--min-leaf", m.hp.min_leaf, "Minimum samples per leaf");
  app->add_option("--max-features", m.max_features, "Features per split (0: automatic)");
  app->add_option("--rf-trees", m.hp.rf_trees, "Random forest size");
  app->add_flag("--no-bootstrap", m.no_bootstrap, "Train forest trees on the full data");
}

void require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw UsageError(flag + " is required");
}

void require_file(const std::string& path, const std::string& flag) {
  require(path, flag);
  if (!fs::is_regular_file(path)) throw UsageError("no such file for " + flag + ": " + path);
}

void require_output_dir(const std::string& path) {
  auto parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) throw UsageError("output directory does not exist: " + parent.string());
}

void finish_model(ModelOptions& m) {
  if (m.bow_weighting == "count") m.vec.bow_weighting = BowWeighting::Count;
  else if (m.bow_weighting == "presence") m.vec.bow_weighting = BowWeighting::Presence;
  else throw UsageError("--bow-weighting must be count or presence");
  if (m.pv_composition == "concatenate") m.vec.pv.composition = PvComposition::Concatenate;
  else if (m.pv_composition == "average") m.vec.pv.composition = PvComposition::Average;
  else throw UsageError("--pv-composition must be concatenate or average");
  if (m.max_features > 0) m.hp.max_features = m.max_features;
  m.hp.rf_bootstrap = !m.no_bootstrap;
  try {
    m.hp.validate();
    m.vec.pv.validate();
  } catch (const InvalidHyperparameter& e) {
    throw UsageError(e.what());
  }
  if (m.vec.bow_min_count == 0) throw UsageError("--bow-min-count must be at least 1");
}

AnnotatorConfig annotator_config(const AnnotatorOptions& a) {
  AnnotatorConfig config;
  if (!a.affixes.empty()) {
    require_file(a.affixes, "--affixes");
    config.affixes = load_affix_config(a.affixes);
  }
  if (!a.negation.empty()) {
    require_file(a.negation, "--negation");
    config.negation = load_negation_config(a.negation);
  }
  if (a.scope == "to_end") config.negation.scope = NegationScope::ToEnd;
  else if (a.scope == "to_punctuation") config.negation.scope = NegationScope::ToPunctuation;
  else if (!a.scope.empty()) throw UsageError("--scope must be to_end or to_punctuation");
  if (a.collapse_threshold < 2) throw UsageError("--collapse-threshold must be at least 2");
  if (a.max_n == 0) throw UsageError("--max-n must be at least 1");
  config.normalizer.collapse_threshold = a.collapse_threshold;
  config.normalizer.lowercase_latin = a.lowercase_latin;
  config.max_n = a.max_n;
  return config;
}

SplitSpec parse_split(const std::string& text, std::uint64_t seed) {
  SplitSpec spec;
  spec.seed = seed;
  if (!text.empty()) {
    auto parts = split(text, ',');
    if (parts.size() != 3 || !parse_double(trim(parts[0]), spec.train) || !parse_double(trim(parts[1]), spec.dev) ||
        !parse_double(trim(parts[2]), spec.test)) {
      throw UsageError("--split expects three comma-separated ratios");
    }
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(std::string("--split: ") + e.what());
  }
  return spec;
}

std::vector<LabeledText> select(std::vector<LabeledText> items, const std::string& script, const std::string& part) {
  std::optional<Script> want_script;
  if (!script.empty()) {
    want_script = parse_script(script);
    if (!want_script) throw UsageError("--script must be arabic or arabizi");
  }
  std::optional<SplitPart> want_part;
  if (!part.empty()) {
    want_part = parse_split_part(part);
    if (!want_part) throw UsageError("--part must be train, dev or test");
  }
  std::erase_if(items, [&](const LabeledText& item) {
    return (want_script && item.script != *want_script) || (want_part && item.part != want_part);
  });
  return items;
}

LabeledDataset dataset_of(std::vector<FeatureVector> features, const std::vector<LabeledText>& items) {
  LabeledDataset data;
  data.features = std::move(features);
  for (const auto& item : items) data.labels.push_back(item.label);
  return data;
}

int cmd_build_lexicon(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  require_file(a.seed_lexicon, "--seed-lexicon");
  require_file(a.table, "--table");
  require(a.output, "--output");
  require_output_dir(a.output);
  BuildOptions options;
  options.seed_name = a.seed_name.empty() ? fs::path(a.seed_lexicon).stem().string() : a.seed_name;
  options.build_timestamp = a.timestamp;
  if (!a.stoplist.empty()) {
    require_file(a.stoplist, "--stoplist");
    options.stoplist = load_stoplist(a.stoplist);
  }
  const auto seed = load_seed_lexicon(a.seed_lexicon);
  const auto table = TranslationTable::load(a.table);
  err << "build-lexicon: " << seed.size() << " seed entries, " << table.size() << " translations\n";
  BuildReport report;
  const auto lexicon = build_lexicon(seed, table, options, &report);
  save_lexicon(lexicon, a.output);
  out << "seed_terms\t" << report.seed_terms << "\n"
      << "recognized_seed_terms\t" << report.recognized_seed_terms << "\n"
      << "dropped_by_stoplist\t" << report.dropped_by_stoplist << "\n"
      << "arabic_entries\t" << report.arabic_entries << "\n"
      << "arabizi_entries\t" << report.arabizi_entries << "\n";
  return 0;
}

int cmd_annotate(const AnnotateArgs& a, unsigned jobs, std::ostream& out, std::ostream& err) {
  require_file(a.annotator.lexicon, "--lexicon");
  require_file(a.input, "--input");
  require(a.output, "--output");
  require_output_dir(a.output);
  if (a.balanced > 0) {
    require(a.balanced_output, "--balanced-output");
    require_output_dir(a.balanced_output);
  }
  std::optional<SplitSpec> spec;
  if (!a.split.empty()) spec = parse_split(a.split, a.seed);
  const auto config = annotator_config(a.annotator);
  const auto lexicon = load_lexicon(a.annotator.lexicon);

  std::size_t skipped = 0;
  const auto messages = read_messages_jsonl(a.input, &skipped);
  err << "annotate: " << messages.size() << " messages read, " << skipped << " empty skipped\n";
  const auto unique = deduplicate(messages);
  if (unique.size() != messages.size()) {
    err << "annotate: " << messages.size() - unique.size() << " duplicate messages removed\n";
  }
  AnnotationSummary summary;
  const auto annotated = annotate_corpus(unique, lexicon, config, jobs, &summary);
  write_file(a.output, to_jsonl(annotated));
  const auto summary_json = to_json(summary);
  if (!a.summary.empty()) {
    require_output_dir(a.summary);
    write_file(a.summary, summary_json.dump(2) + "\n");
  }
  out << summary_json.dump() << "\n";

  if (a.balanced > 0) {
    const auto balanced = build_balanced_training_set(annotated, a.balanced, a.seed, spec);
    write_file(a.balanced_output, to_jsonl(balanced));
    err << "annotate: balanced set of " << balanced.size() << " messages\n";
  }
  return 0;
}

int cmd_train(TrainArgs& a, unsigned jobs, std::ostream& out, std::ostream& err) {
  require_file(a.input, "--input");
  require(a.vectorizer_output, "--vectorizer-output");
  require(a.model_output, "--model-output");
  require_output_dir(a.vectorizer_output);
  require_output_dir(a.model_output);
  finish_model(a.model);
  auto vkind = parse_vectorizer_kind(a.model.vectorizer);
  if (!vkind) throw UsageError("unknown vectorizer '" + a.model.vectorizer + "'");
  auto ckind = parse_classifier_kind(a.model.classifier);
  if (!ckind) throw UsageError("unknown classifier '" + a.model.classifier + "'");

  const auto items = select(read_labeled_jsonl(a.input), a.script, a.part);
  if (items.empty()) throw EmptyCorpus();
  err << "train: " << items.size() << " messages, " << to_string(*vkind) << " + " << to_string(*ckind) << "\n";
  std::vector<FeatureVector> features;
  const auto vectorizer =
      fit_vectorizer(*vkind, tokenize_all(items), a.model.vec, derive_seed(a.seed, "vectorizer"), &features);
  const auto model = train(*ckind, dataset_of(std::move(features), items), a.model.hp,
                           derive_seed(a.seed, "classifier"), jobs);
  save_vectorizer(vectorizer, a.vectorizer_output);
  save_model(model, a.model_output);
  out << "dimension\t" << model.dimension() << "\n";
  return 0;
}

int cmd_eval_single(const EvalArgs& a, unsigned jobs, std::ostream& out, std::ostream& err) {
  require_file(a.input, "--input");
  require_file(a.vectorizer_model, "--vectorizer-model");
  require_file(a.model, "--model");
  require(a.output, "--output");
  require_output_dir(a.output);
  const auto items = select(read_labeled_jsonl(a.input), a.script, a.part);
  if (items.empty()) throw EmptyCorpus();
  const auto vectorizer = load_vectorizer(a.vectorizer_model, a.infer_steps);
  const auto model = load_model(a.model);
  err << "eval: " << items.size() << " messages\n";

  const auto infer_seed = derive_seed(a.seed, "infer");
  std::vector<FeatureVector> features(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    features[i] = vectorizer.transform(tokenize(items[i].text).tokens, infer_seed, items[i].id);
  });
  std::vector<Label> gold;
  std::vector<Label> predicted;
  for (std::size_t i = 0; i < items.size(); ++i) {
    gold.push_back(items[i].label);
    predicted.push_back(model.predict(features[i]));
  }
  const auto metrics = compute_metrics(gold, predicted);
  Json report;
  report["format"] = "sentialg-report v1";
  report["provenance"] = {{"vectorizer", to_string(vectorizer.kind())},
                          {"classifier", to_string(model.kind())},
                          {"model_seed", model.seed()},
                          {"inference_seed", a.seed},
                          {"dimension", model.dimension()},
                          {"input_fingerprint", fingerprint(items)}};
  report["metrics"] = to_json(metrics);
  write_file(a.output, report.dump(2) + "\n");
  out << "accuracy\t" << format_double(metrics.accuracy) << "\nmacro_f1\t" << format_double(metrics.macro_f1)
      << "\n";
  return 0;
}

int cmd_eval_grid(EvalArgs& a, unsigned jobs, std::ostream& out, std::ostream& err) {
  require_file(a.input, "--input");
  require(a.output, "--output");
  require_output_dir(a.output);
  if (!a.external.empty()) require_file(a.external, "--external");
  finish_model(a.options);
  GridConfig config;
  config.split = parse_split(a.split, a.seed);
  config.vectorizer = a.options.vec;
  config.classifier = a.options.hp;
  config.seed = a.seed;
  config.jobs = jobs;
  const auto silver = read_labeled_jsonl(a.input);
  std::vector<LabeledText> external;
  if (!a.external.empty()) external = read_labeled_jsonl(a.external);
  else err << "eval: no --external data; external cells are left empty\n";
  err << "eval: grid over " << silver.size() << " silver and " << external.size() << " gold messages\n";
  const auto report = run_grid(silver, external, config);
  write_file(a.output, to_json(report).dump(2) + "\n");
  const auto table = render_table(report);
  if (!a.table.empty()) {
    require_output_dir(a.table);
    write_file(a.table, table);
  }
  out << table;
  return 0;
}

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  require_file(a.annotator.lexicon, "--lexicon");
  const auto config = annotator_config(a.annotator);
  const auto lexicon = load_lexicon(a.annotator.lexicon);
  Message message{"input", a.text, std::nullopt};
  const auto annotated = annotate_message(message, lexicon, config);
  if (a.json) {
    Json j;
    j["text"] = a.text;
    j["normalized"] = annotated.normalized;
    j["script"] = to_string(annotated.script);
    j["score"] = annotated.score;
    j["label"] = to_string(annotated.label);
    j["trace"] = to_json(annotated.trace);
    if (!annotated.trace.negator_conflicts.empty()) j["negator_conflicts"] = annotated.trace.negator_conflicts;
    out << j.dump() << "\n";
    return 0;
  }
  out << "normalized\t" << annotated.normalized << "\n";
  out << "script\t" << to_string(annotated.script) << "\n";
  for (const auto& span : annotated.trace.spans) {
    out << "match\t" << span.ngram << "\t" << span.matched << "\t" << format_double(span.raw)
        << (span.negated ? "\tnegated\t" : "\t\t") << format_double(span.applied) << "\n";
  }
  out << "score\t" << format_double(annotated.score) << "\n";
  out << "label\t" << to_string(annotated.label) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sentiment lexicon construction and classification for Algerian dialect text", "sentialg"};
  app.require_subcommand(1);
  Common common;

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build-lexicon", "Translate a scored English seed lexicon into the dialect");
  add_common(build_cmd, common);
  build_cmd->add_option("--seed-lexicon", build.seed_lexicon, "English seed lexicon (term<TAB>score)");
  build_cmd->add_option("--table", build.table, "Translation table (english<TAB>dialect)");
  build_cmd->add_option("--stoplist", build.stoplist, "Dialect terms to leave out");
  build_cmd->add_option("--output", build.output, "Lexicon file to write");
  build_cmd->add_option("--seed-name", build.seed_name, "Seed name recorded in the lexicon header");
  build_cmd->add_option("--timestamp", build.timestamp, "Build timestamp recorded verbatim");

  AnnotateArgs annotate;
  auto* annotate_cmd = app.add_subcommand("annotate", "Score and label a JSONL corpus with the lexicon");
  add_common(annotate_cmd, common);
  add_annotator(annotate_cmd, annotate.annotator);
  annotate_cmd->add_option("--input", annotate.input, "Corpus JSONL ({id, text, source?})");
  annotate_cmd->add_option("--output", annotate.output, "Annotated JSONL to write");
  annotate_cmd->add_option("--summary", annotate.summary, "Per-script label counts as JSON");
  annotate_cmd->add_option("--balanced", annotate.balanced, "Messages to sample per script and polarity");
  annotate_cmd->add_option("--balanced-output", annotate.balanced_output, "Balanced training set JSONL");
  annotate_cmd->add_option("--split", annotate.split, "Tag the balanced set with train,dev,test ratios");
  annotate_cmd->add_option("--seed", annotate.seed, "Sampling and split seed");

  TrainArgs training;
  auto* train_cmd = app.add_subcommand("train", "Fit a vectorizer and a classifier on labeled JSONL");
  add_common(train_cmd, common);
  add_model(train_cmd, training.model, true);
  train_cmd->add_option("--input", training.input, "Labeled JSONL");
  train_cmd->add_option("--script", training.script, "Keep only arabic or arabizi messages");
  train_cmd->add_option("--part", training.part, "Keep only messages tagged train, dev or test");
  train_cmd->add_option("--vectorizer-output", training.vectorizer_output, "Vectorizer file to write");
  train_cmd->add_option("--model-output", training.model_output, "Classifier file to write");
  train_cmd->add_option("--seed", training.seed, "Training seed");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a trained model, or run the full grid");
  add_common(eval_cmd, common);
  add_model(eval_cmd, eval.options, false);
  eval_cmd->add_flag("--grid", eval.grid, "Run every script/test/vectorizer/classifier cell");
  eval_cmd->add_option("--input", eval.input, "Labeled JSONL (test set, or the silver set with --grid)");
  eval_cmd->add_option("--external", eval.external, "Gold-labeled JSONL for external cells (--grid)");
  eval_cmd->add_option("--script", eval.script, "Keep only arabic or arabizi messages");
  eval_cmd->add_option("--part", eval.part, "Keep only messages tagged train, dev or test");
  eval_cmd->add_option("--vectorizer-model", eval.vectorizer_model, "Vectorizer file from train");
  eval_cmd->add_option("--model", eval.model, "Classifier file from train");
  eval_cmd->add_option("--output", eval.output, "Report JSON to write");
  eval_cmd->add_option("--table", eval.table, "Also write the grid table here (--grid)");
  eval_cmd->add_option("--split", eval.split, "train,dev,test ratios for untagged silver data (--grid)");
  eval_cmd->add_option("--seed", eval.seed, "Grid and inference seed");

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score one message and print its trace");
  add_common(score_cmd, common);
  add_annotator(score_cmd, score.annotator);
  score_cmd->add_option("text", score.text, "Message text")->required();
  score_cmd->add_flag("--json", score.json, "Print a JSON object");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    if (!common.config.empty()) {
      if (!fs::is_regular_file(common.config)) throw UsageError("no such config file: " + common.config);
      apply_config(*sub, read_config(common.config));
    }
    if (sub == build_cmd) return cmd_build_lexicon(build, out, err);
    if (sub == annotate_cmd) return cmd_annotate(annotate, common.jobs, out, err);
    if (sub == train_cmd) return cmd_train(training, common.jobs, out, err);
    if (sub == eval_cmd) return eval.grid ? cmd_eval_grid(eval, common.jobs, out, err)
                                          : cmd_eval_single(eval, common.jobs, out, err);
    return cmd_score(score, out);
  } catch (const UsageError& e) {
    err << "sentialg: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "sentialg: " << e.what() << "\n";
    return 2;
  } catch (const InvalidHyperparameter& e) {
    err << "sentialg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "sentialg: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sentialg::cli
