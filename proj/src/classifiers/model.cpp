#include <cmath>
#include <type_traits>

#include "classifiers/internal.hpp"
#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::SVM: return "svm";
    case ClassifierKind::NB: return "nb";
    case ClassifierKind::LR: return "lr";
    case ClassifierKind::DT: return "dt";
    case ClassifierKind::RF: return "rf";
  }
  return "lr";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view text) {
  const auto lower = ascii_lower(text);
  for (auto kind : kAllClassifiers) {
    if (lower == to_string(kind)) return kind;
  }
  return std::nullopt;
}

void LabeledDataset::validate(bool require_both_classes) const {
  if (features.size() != labels.size()) throw LengthMismatch(features.size(), labels.size());
  if (labels.empty()) throw EmptyCorpus();
  const auto d = dimension();
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (features[i].dimension() != d) throw DimensionMismatch(d, features[i].dimension());
    if (labels[i] == Label::Positive) pos = true;
    else if (labels[i] == Label::Negative) neg = true;
    else throw Error("training labels must be positive or negative");
  }
  if (require_both_classes && !(pos && neg)) throw SingleClassDataset();
}

void ClassifierHyperparameters::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(svm_c)) throw InvalidHyperparameter("svm_c must be positive");
  if (!positive(svm_learning_rate)) throw InvalidHyperparameter("svm_learning_rate must be positive");
  if (!(std::isfinite(lr_lambda) && lr_lambda >= 0.0)) throw InvalidHyperparameter("lr_lambda must be non-negative");
  if (!positive(lr_learning_rate)) throw InvalidHyperparameter("lr_learning_rate must be positive");
  if (!positive(nb_alpha)) throw InvalidHyperparameter("nb_alpha must be positive");
  if (max_depth == 0) throw InvalidHyperparameter("max_depth must be at least 1");
  if (min_leaf == 0) throw InvalidHyperparameter("min_leaf must be at least 1");
  if (max_features && *max_features == 0) throw InvalidHyperparameter("max_features must be at least 1");
  if (rf_trees == 0) throw InvalidHyperparameter("rf_trees must be at least 1");
}

TrainedModel train(ClassifierKind kind, const LabeledDataset& dataset, const ClassifierHyperparameters& hp,
                   std::uint64_t seed, unsigned jobs, TrainingTrace* trace) {
  hp.validate();
  dataset.validate(true);
  const auto d = dataset.dimension();
  TrainedModel::Params params;
  switch (kind) {
    case ClassifierKind::SVM: params = detail::train_svm(dataset, hp, trace); break;
    case ClassifierKind::LR: params = detail::train_logistic(dataset, hp, trace); break;
    case ClassifierKind::NB: params = detail::train_naive_bayes(dataset, hp); break;
    case ClassifierKind::DT:
      params = detail::train_tree(dataset, hp, detail::resolve_max_features(kind, hp, d), seed);
      break;
    case ClassifierKind::RF:
      params = detail::train_forest(dataset, hp, detail::resolve_max_features(kind, hp, d), seed, jobs);
      break;
  }
  return TrainedModel(kind, d, seed, hp, std::move(params));
}

double TrainedModel::predict_score(const FeatureVector& x) const {
  if (x.dimension() != dimension_) throw DimensionMismatch(dimension_, x.dimension());
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearParams>) {
          return x.dot(p.weights) + p.bias;
        } else if constexpr (std::is_same_v<T, NaiveBayesParams>) {
          return detail::naive_bayes_score(p, x);
        } else if constexpr (std::is_same_v<T, DecisionTree>) {
          return tree_score(p, x);
        } else {
          std::size_t votes = 0;
          for (const auto& tree : p) votes += tree_score(tree, x) >= 0.0 ? 1 : 0;
          return static_cast<double>(votes) / static_cast<double>(p.size()) - 0.5;
        }
      },
      params_);
}

namespace {

std::string doubles_line(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_double(values[i]);
  }
  return out;
}

void write_tree(std::string& out, const DecisionTree& tree) {
  out += "nodes\t" + std::to_string(tree.nodes.size()) + "\n";
  for (const auto& n : tree.nodes) {
    out += std::to_string(n.feature) + "\t" + format_double(n.threshold) + "\t" + std::to_string(n.left) + "\t" +
           std::to_string(n.right) + "\t" + format_double(n.positive_fraction) + "\t" + std::to_string(n.samples) +
           "\n";
  }
}

class Reader {
public:
  explicit Reader(std::string_view contents) : lines_(split(contents, '\n')) {
    if (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_no() const { return pos_; }

  std::string next() {
    if (done()) throw MalformedLine(pos_ + 1, "unexpected end of file");
    return lines_[pos_++];
  }

  std::vector<std::string> fields(std::string_view key, std::size_t count) {
    auto parts = split(next(), '\t');
    if (parts.size() != count + 1 || parts[0] != key) {
      throw MalformedLine(pos_, "expected " + std::string(key));
    }
    parts.erase(parts.begin());
    return parts;
  }

  std::string field(std::string_view key) { return fields(key, 1)[0]; }

  double number(std::string_view text) {
    double v = 0.0;
    if (!parse_double(text, v)) throw MalformedLine(pos_, "bad number '" + std::string(text) + "'");
    return v;
  }

  long long integer(std::string_view text) {
    long long v = 0;
    if (!parse_int(text, v)) throw MalformedLine(pos_, "bad integer '" + std::string(text) + "'");
    return v;
  }

  std::size_t count(std::string_view text) {
    auto v = integer(text);
    if (v < 0) throw MalformedLine(pos_, "negative count");
    return static_cast<std::size_t>(v);
  }

  std::vector<double> doubles(std::string_view key, std::size_t expected) {
    auto n = count(field(key));
    if (n != expected) throw MalformedLine(pos_, std::string(key) + " has the wrong length");
    auto line = next();
    std::vector<double> out;
    out.reserve(n);
    if (n > 0) {
      for (const auto& part : split(line, ' ')) out.push_back(number(part));
    }
    if (out.size() != n) throw MalformedLine(pos_, std::string(key) + " has the wrong length");
    return out;
  }

  DecisionTree tree(std::size_t dimension) {
    DecisionTree t;
    auto n = count(field("nodes"));
    if (n == 0) throw MalformedLine(pos_, "empty tree");
    t.nodes.resize(n);
    for (auto& node : t.nodes) {
      auto parts = split(next(), '\t');
      if (parts.size() != 6) throw MalformedLine(pos_, "bad tree node");
      node.feature = static_cast<std::int32_t>(integer(parts[0]));
      node.threshold = number(parts[1]);
      node.left = static_cast<std::int32_t>(integer(parts[2]));
      node.right = static_cast<std::int32_t>(integer(parts[3]));
      node.positive_fraction = number(parts[4]);
      node.samples = static_cast<std::uint32_t>(count(parts[5]));
      if (node.feature >= 0) {
        auto in_range = [&](std::int32_t c) { return c > 0 && static_cast<std::size_t>(c) < n; };
        if (static_cast<std::size_t>(node.feature) >= dimension || !in_range(node.left) || !in_range(node.right)) {
          throw MalformedLine(pos_, "tree node out of range");
        }
      } else if (node.feature != -1) {
        throw MalformedLine(pos_, "bad tree node");
      }
    }
    return t;
  }

private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_model(const TrainedModel& model) {
  const auto& hp = model.hyperparameters();
  std::string out;
  out.append(kModelHeader).push_back('\n');
  out += "kind\t" + std::string(to_string(model.kind())) + "\n";
  out += "dimension\t" + std::to_string(model.dimension()) + "\n";
  out += "seed\t" + std::to_string(model.seed()) + "\n";
  out += "svm_c\t" + format_double(hp.svm_c) + "\n";
  out += "svm_epochs\t" + std::to_string(hp.svm_epochs) + "\n";
  out += "svm_learning_rate\t" + format_double(hp.svm_learning_rate) + "\n";
  out += "lr_lambda\t" + format_double(hp.lr_lambda) + "\n";
  out += "lr_learning_rate\t" + format_double(hp.lr_learning_rate) + "\n";
  out += "lr_epochs\t" + std::to_string(hp.lr_epochs) + "\n";
  out += "nb_alpha\t" + format_double(hp.nb_alpha) + "\n";
  out += "max_depth\t" + std::to_string(hp.max_depth) + "\n";
  out += "min_leaf\t" + std::to_string(hp.min_leaf) + "\n";
  out += "max_features\t" + (hp.max_features ? std::to_string(*hp.max_features) : std::string("auto")) + "\n";
  out += "rf_trees\t" + std::to_string(hp.rf_trees) + "\n";
  out += std::string("rf_bootstrap\t") + (hp.rf_bootstrap ? "1" : "0") + "\n";

  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearParams>) {
          out += "bias\t" + format_double(p.bias) + "\n";
          out += "weights\t" + std::to_string(p.weights.size()) + "\n" + doubles_line(p.weights) + "\n";
        } else if constexpr (std::is_same_v<T, NaiveBayesParams>) {
          out += std::string("event_model\t") + (p.multinomial ? "multinomial" : "gaussian") + "\n";
          out += "log_prior\t" + format_double(p.log_prior[0]) + "\t" + format_double(p.log_prior[1]) + "\n";
          for (int c = 0; c < 2; ++c) {
            out += "location\t" + std::to_string(p.location[c].size()) + "\n" + doubles_line(p.location[c]) + "\n";
          }
          if (!p.multinomial) {
            for (int c = 0; c < 2; ++c) {
              out += "variance\t" + std::to_string(p.variance[c].size()) + "\n" + doubles_line(p.variance[c]) + "\n";
            }
          }
        } else if constexpr (std::is_same_v<T, DecisionTree>) {
          write_tree(out, p);
        } else {
          out += "trees\t" + std::to_string(p.size()) + "\n";
          for (const auto& tree : p) write_tree(out, tree);
        }
      },
      model.params());
  return out;
}

TrainedModel parse_model(std::string_view contents) {
  Reader in(contents);
  if (in.done() || in.next() != kModelHeader) {
    throw FormatVersionMismatch("not a '" + std::string(kModelHeader) + "' file");
  }
  auto kind_name = in.field("kind");
  auto kind = parse_classifier_kind(kind_name);
  if (!kind) throw MalformedLine(in.line_no(), "unknown classifier '" + kind_name + "'");
  const auto dimension = in.count(in.field("dimension"));
  const auto seed_text = in.field("seed");
  std::uint64_t seed = 0;
  try {
    std::size_t used = 0;
    seed = std::stoull(seed_text, &used);
    if (used != seed_text.size()) throw std::invalid_argument("seed");
  } catch (const std::exception&) {
    throw MalformedLine(in.line_no(), "bad seed");
  }

  ClassifierHyperparameters hp;
  hp.svm_c = in.number(in.field("svm_c"));
  hp.svm_epochs = in.count(in.field("svm_epochs"));
  hp.svm_learning_rate = in.number(in.field("svm_learning_rate"));
  hp.lr_lambda = in.number(in.field("lr_lambda"));
  hp.lr_learning_rate = in.number(in.field("lr_learning_rate"));
  hp.lr_epochs = in.count(in.field("lr_epochs"));
  hp.nb_alpha = in.number(in.field("nb_alpha"));
  hp.max_depth = in.count(in.field("max_depth"));
  hp.min_leaf = in.count(in.field("min_leaf"));
  auto mf = in.field("max_features");
  if (mf != "auto") hp.max_features = in.count(mf);
  hp.rf_trees = in.count(in.field("rf_trees"));
  auto boot = in.field("rf_bootstrap");
  if (boot != "0" && boot != "1") throw MalformedLine(in.line_no(), "bad rf_bootstrap");
  hp.rf_bootstrap = boot == "1";

  TrainedModel::Params params;
  switch (*kind) {
    case ClassifierKind::SVM:
    case ClassifierKind::LR: {
      LinearParams p;
      p.bias = in.number(in.field("bias"));
      p.weights = in.doubles("weights", dimension);
      params = std::move(p);
      break;
    }
    case ClassifierKind::NB: {
      NaiveBayesParams p;
      auto model = in.field("event_model");
      if (model != "multinomial" && model != "gaussian") throw MalformedLine(in.line_no(), "bad event_model");
      p.multinomial = model == "multinomial";
      auto prior = in.fields("log_prior", 2);
      p.log_prior = {in.number(prior[0]), in.number(prior[1])};
      for (int c = 0; c < 2; ++c) p.location[c] = in.doubles("location", dimension);
      if (!p.multinomial) {
        for (int c = 0; c < 2; ++c) p.variance[c] = in.doubles("variance", dimension);
      }
      params = std::move(p);
      break;
    }
    case ClassifierKind::DT: params = in.tree(dimension); break;
    case ClassifierKind::RF: {
      auto n = in.count(in.field("trees"));
      if (n == 0) throw MalformedLine(in.line_no(), "empty forest");
      ForestParams forest;
      forest.reserve(n);
      for (std::size_t t = 0; t < n; ++t) forest.push_back(in.tree(dimension));
      params = std::move(forest);
      break;
    }
  }
  if (!in.done()) throw MalformedLine(in.line_no() + 1, "trailing content");
  return TrainedModel(*kind, dimension, seed, hp, std::move(params));
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

TrainedModel load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

}  // namespace sentialg
