#include "sentialg/paragraph_vector.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <map>

#include "sentialg/common.hpp"
#include "sentialg/errors.hpp"

namespace sentialg {

namespace {

constexpr double kNoisePower = 0.75;
constexpr double kMinRateFraction = 1e-4;

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sigmoid(x)) without overflow.
double log_sigmoid(double x) {
  if (x >= 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void init_uniform(Matrix& m, std::size_t dim, Rng& rng) {
  for (auto& x : m.data) x = (rng.uniform() - 0.5) / static_cast<double>(dim);
}

}  // namespace

std::string_view to_string(PvMode mode) {
  switch (mode) {
    case PvMode::PVDM: return "pvdm";
    case PvMode::PVDBOW: return "pvdbow";
    case PvMode::Merged: return "merged";
  }
  return "merged";
}

std::optional<PvMode> parse_pv_mode(std::string_view text) {
  auto lower = ascii_lower(text);
  if (lower == "pvdm" || lower == "pv-dm") return PvMode::PVDM;
  if (lower == "pvdbow" || lower == "pv-dbow") return PvMode::PVDBOW;
  if (lower == "merged") return PvMode::Merged;
  return std::nullopt;
}

void PvHyperparameters::validate() const {
  if (dim < 1) throw InvalidHyperparameter("dim must be at least 1");
  if (window < 1) throw InvalidHyperparameter("window must be at least 1");
  if (epochs < 1) throw InvalidHyperparameter("epochs must be at least 1");
  if (negative < 1) throw InvalidHyperparameter("negative must be at least 1");
  if (min_count < 1) throw InvalidHyperparameter("min_count must be at least 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidHyperparameter("learning_rate must be positive");
  }
}

NsGradients negative_sampling_gradients(std::span<const double> hidden, const Matrix& outputs,
                                        std::uint32_t target, std::span<const std::uint32_t> negatives) {
  const std::size_t width = hidden.size();
  if (outputs.cols != width) throw DimensionMismatch(outputs.cols, width);
  NsGradients g;
  g.hidden.assign(width, 0.0);
  g.outputs.assign((1 + negatives.size()) * width, 0.0);
  for (std::size_t k = 0; k <= negatives.size(); ++k) {
    const std::uint32_t word = k == 0 ? target : negatives[k - 1];
    const bool positive = k == 0;
    auto u = outputs.row(word);
    const double score = dot(u, hidden);
    g.loss -= positive ? log_sigmoid(score) : log_sigmoid(-score);
    // d/ds of the term: sigmoid(s) - 1 for the target, sigmoid(s) for noise.
    const double coeff = sigmoid(score) - (positive ? 1.0 : 0.0);
    double* grad_row = g.outputs.data() + k * width;
    for (std::size_t c = 0; c < width; ++c) {
      g.hidden[c] += coeff * u[c];
      grad_row[c] = coeff * hidden[c];
    }
  }
  return g;
}

DmGradients pvdm_gradients(std::span<const double> doc, const Matrix& words, std::span<const std::uint32_t> context,
                           PvComposition composition, const Matrix& outputs, std::uint32_t target,
                           std::span<const std::uint32_t> negatives) {
  const std::size_t dim = doc.size();
  std::vector<double> hidden;
  if (composition == PvComposition::Concatenate) {
    hidden.reserve(dim * (1 + context.size()));
    hidden.insert(hidden.end(), doc.begin(), doc.end());
    for (auto id : context) {
      auto w = words.row(id);
      hidden.insert(hidden.end(), w.begin(), w.end());
    }
  } else {
    hidden.assign(doc.begin(), doc.end());
    for (auto id : context) {
      auto w = words.row(id);
      for (std::size_t c = 0; c < dim; ++c) hidden[c] += w[c];
    }
    const double inv = 1.0 / static_cast<double>(1 + context.size());
    for (auto& x : hidden) x *= inv;
  }

  auto ns = negative_sampling_gradients(hidden, outputs, target, negatives);
  DmGradients g;
  g.loss = ns.loss;
  g.outputs = std::move(ns.outputs);
  g.context.assign(context.size() * dim, 0.0);
  if (composition == PvComposition::Concatenate) {
    g.doc.assign(ns.hidden.begin(), ns.hidden.begin() + static_cast<std::ptrdiff_t>(dim));
    std::copy(ns.hidden.begin() + static_cast<std::ptrdiff_t>(dim), ns.hidden.end(), g.context.begin());
  } else {
    const double inv = 1.0 / static_cast<double>(1 + context.size());
    g.doc.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) g.doc[c] = ns.hidden[c] * inv;
    for (std::size_t j = 0; j < context.size(); ++j) {
      for (std::size_t c = 0; c < dim; ++c) g.context[j * dim + c] = ns.hidden[c] * inv;
    }
  }
  return g;
}

std::optional<std::uint32_t> ParagraphVectorModel::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParagraphVectorModel::output_dimension() const noexcept {
  return mode_ == PvMode::Merged ? 2 * hp_.dim : hp_.dim;
}

std::size_t ParagraphVectorModel::document_count() const noexcept {
  if (dm_) return dm_->docs.rows;
  if (dbow_) return dbow_->docs.rows;
  return 0;
}

FeatureVector ParagraphVectorModel::document_vector(std::size_t doc) const {
  std::vector<double> out;
  out.reserve(output_dimension());
  for (const auto* net : {&dm_, &dbow_}) {
    if (*net) {
      auto row = (*net)->docs.row(doc);
      out.insert(out.end(), row.begin(), row.end());
    }
  }
  return FeatureVector::dense(std::move(out));
}

ParagraphVectorModel ParagraphVectorModel::extract(PvMode mode) const {
  if (mode == mode_) return *this;
  if (mode_ != PvMode::Merged || mode == PvMode::Merged) {
    throw InvalidHyperparameter("only a merged model can be split into its halves");
  }
  ParagraphVectorModel out = *this;
  out.mode_ = mode;
  if (mode == PvMode::PVDM) out.dbow_.reset();
  else out.dm_.reset();
  return out;
}

std::vector<std::uint32_t> ParagraphVectorModel::encode(const std::vector<std::string>& tokens) const {
  std::vector<std::uint32_t> ids;
  ids.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (auto id = index_of(token)) ids.push_back(*id);
  }
  return ids;
}

std::uint32_t ParagraphVectorModel::sample_noise(double u) const {
  const double target = u * noise_cdf_.back();
  auto it = std::upper_bound(noise_cdf_.begin(), noise_cdf_.end(), target);
  if (it == noise_cdf_.end()) --it;
  return static_cast<std::uint32_t>(it - noise_cdf_.begin());
}

void ParagraphVectorModel::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) index_.emplace(vocabulary_[i], static_cast<std::uint32_t>(i));
  noise_cdf_.resize(counts_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    total += std::pow(static_cast<double>(counts_[i]), kNoisePower);
    noise_cdf_[i] = total;
  }
}

bool ParagraphVectorModel::operator==(const ParagraphVectorModel& other) const {
  return mode_ == other.mode_ && hp_ == other.hp_ && seed_ == other.seed_ && vocabulary_ == other.vocabulary_ &&
         counts_ == other.counts_ && dm_ == other.dm_ && dbow_ == other.dbow_;
}

// Single-threaded SGD driver; owns the per-mode generators.
class PvTrainer {
public:
  PvTrainer(const ParagraphVectorModel& model, const std::vector<std::vector<std::uint32_t>>& docs)
      : model_(model), docs_(docs) {
    for (const auto& d : docs_) total_words_ += d.size();
  }

  void init_network(PvNetwork& net, bool dm, Rng& rng) const {
    const auto& hp = model_.hp_;
    const std::size_t vocab = model_.vocabulary_.size();
    net.docs = Matrix(docs_.size(), hp.dim);
    init_uniform(net.docs, hp.dim, rng);
    if (dm) {
      net.words = Matrix(vocab + 1, hp.dim);
      init_uniform(net.words, hp.dim, rng);
      const std::size_t width =
          hp.composition == PvComposition::Concatenate ? hp.dim * (1 + hp.window) : hp.dim;
      net.outputs = Matrix(vocab, width);
    } else {
      net.outputs = Matrix(vocab, hp.dim);
    }
  }

  std::vector<std::uint32_t> draw_negatives(std::uint32_t target, Rng& rng) const {
    std::vector<std::uint32_t> out;
    out.reserve(model_.hp_.negative);
    for (std::size_t k = 0; k < model_.hp_.negative; ++k) {
      auto w = model_.sample_noise(rng.uniform());
      if (w != target) out.push_back(w);
    }
    return out;
  }

  std::vector<std::uint32_t> context_for(const std::vector<std::uint32_t>& doc, std::size_t pos) const {
    const auto& hp = model_.hp_;
    const auto pad = static_cast<std::uint32_t>(model_.vocabulary_.size());
    std::vector<std::uint32_t> ctx;
    for (std::size_t j = 1; j <= hp.window; ++j) {
      if (pos >= j) ctx.push_back(doc[pos - j]);
      else if (hp.composition == PvComposition::Concatenate) ctx.push_back(pad);
    }
    return ctx;
  }

  // One SGD update at position `pos`; returns the pre-update loss. Word and
  // output vectors are written only when `updates` is non-null.
  double step(const PvNetwork& net, PvNetwork* updates, bool dm, std::span<double> doc_vec,
              const std::vector<std::uint32_t>& doc, std::size_t pos, double alpha, Rng& rng) const {
    const std::uint32_t target = doc[pos];
    auto negatives = draw_negatives(target, rng);
    if (!dm) {
      auto g = negative_sampling_gradients(doc_vec, net.outputs, target, negatives);
      if (updates) apply_outputs(*updates, target, negatives, g.outputs, alpha);
      for (std::size_t c = 0; c < doc_vec.size(); ++c) doc_vec[c] -= alpha * g.hidden[c];
      return g.loss;
    }
    auto ctx = context_for(doc, pos);
    auto g = pvdm_gradients(doc_vec, net.words, ctx, model_.hp_.composition, net.outputs, target, negatives);
    if (updates) {
      apply_outputs(*updates, target, negatives, g.outputs, alpha);
      const std::size_t dim = doc_vec.size();
      for (std::size_t j = 0; j < ctx.size(); ++j) {
        auto w = updates->words.row(ctx[j]);
        for (std::size_t c = 0; c < dim; ++c) w[c] -= alpha * g.context[j * dim + c];
      }
    }
    for (std::size_t c = 0; c < doc_vec.size(); ++c) doc_vec[c] -= alpha * g.doc[c];
    return g.loss;
  }

  void apply_outputs(PvNetwork& net, std::uint32_t target, const std::vector<std::uint32_t>& negatives,
                     const std::vector<double>& grads, double alpha) const {
    const std::size_t width = net.outputs.cols;
    for (std::size_t k = 0; k <= negatives.size(); ++k) {
      auto row = net.outputs.row(k == 0 ? target : negatives[k - 1]);
      for (std::size_t c = 0; c < width; ++c) row[c] -= alpha * grads[k * width + c];
    }
  }

  double evaluate(const PvNetwork& net, bool dm, std::uint64_t eval_seed) const {
    Rng rng(eval_seed);
    double total = 0.0;
    std::size_t n = 0;
    for (std::size_t d = 0; d < docs_.size(); ++d) {
      const auto& doc = docs_[d];
      auto doc_vec = net.docs.row(d);
      for (std::size_t pos = 0; pos < doc.size(); ++pos) {
        auto negatives = draw_negatives(doc[pos], rng);
        if (dm) {
          auto ctx = context_for(doc, pos);
          total += pvdm_gradients(doc_vec, net.words, ctx, model_.hp_.composition, net.outputs, doc[pos], negatives)
                       .loss;
        } else {
          total += negative_sampling_gradients(doc_vec, net.outputs, doc[pos], negatives).loss;
        }
        ++n;
      }
    }
    return n == 0 ? 0.0 : total / static_cast<double>(n);
  }

  void train(PvNetwork& net, bool dm, std::uint64_t seed, std::vector<double>* initial,
             std::vector<std::vector<double>>* epochs_loss) {
    Rng rng(seed);
    init_network(net, dm, rng);
    const auto& hp = model_.hp_;
    const std::uint64_t eval_seed = derive_seed(seed, "eval");
    if (initial) initial->push_back(evaluate(net, dm, eval_seed));

    const double floor_rate = hp.learning_rate * kMinRateFraction;
    const double total = static_cast<double>(std::max<std::size_t>(1, hp.epochs * total_words_));
    std::size_t processed = 0;
    std::vector<std::size_t> order(docs_.size());
    for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.shuffle(order);
      for (auto d : order) {
        const auto& doc = docs_[d];
        auto doc_vec = net.docs.row(d);
        for (std::size_t pos = 0; pos < doc.size(); ++pos) {
          double alpha = std::max(floor_rate, hp.learning_rate * (1.0 - static_cast<double>(processed) / total));
          step(net, &net, dm, doc_vec, doc, pos, alpha, rng);
          ++processed;
        }
      }
      for (double x : net.docs.data) {
        if (!std::isfinite(x)) throw Error("paragraph vector training diverged (non-finite value)");
      }
      if (epochs_loss) (*epochs_loss)[epoch].push_back(evaluate(net, dm, eval_seed));
    }
    for (const auto* m : {&net.words, &net.outputs}) {
      for (double x : m->data) {
        if (!std::isfinite(x)) throw Error("paragraph vector training diverged (non-finite value)");
      }
    }
  }

  std::vector<double> infer(const PvNetwork& net, bool dm, const std::vector<std::uint32_t>& doc, std::size_t steps,
                            std::uint64_t seed) const {
    const auto& hp = model_.hp_;
    Rng rng(seed);
    Matrix vec(1, hp.dim);
    init_uniform(vec, hp.dim, rng);
    auto doc_vec = vec.row(0);
    const double floor_rate = hp.learning_rate * kMinRateFraction;
    const double total = static_cast<double>(std::max<std::size_t>(1, steps * doc.size()));
    std::size_t processed = 0;
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t pos = 0; pos < doc.size(); ++pos) {
        double alpha = std::max(floor_rate, hp.learning_rate * (1.0 - static_cast<double>(processed) / total));
        step(net, nullptr, dm, doc_vec, doc, pos, alpha, rng);
        ++processed;
      }
    }
    return vec.data;
  }

private:
  const ParagraphVectorModel& model_;
  const std::vector<std::vector<std::uint32_t>>& docs_;
  std::size_t total_words_ = 0;
};

ParagraphVectorModel pv_train(const TokenizedCorpus& corpus, PvMode mode, const PvHyperparameters& hp,
                              std::uint64_t seed, PvTrainingStats* stats) {
  if (corpus.empty()) throw EmptyCorpus();
  hp.validate();

  ParagraphVectorModel model;
  model.mode_ = mode;
  model.hp_ = hp;
  model.seed_ = seed;
  std::map<std::string, std::uint64_t> counts;
  for (const auto& doc : corpus) {
    for (const auto& token : doc) counts[token]++;
  }
  for (const auto& [token, n] : counts) {
    if (n >= hp.min_count) {
      model.vocabulary_.push_back(token);
      model.counts_.push_back(n);
    }
  }
  if (model.vocabulary_.empty()) throw EmptyCorpus();
  model.build_index();

  std::vector<std::vector<std::uint32_t>> docs;
  docs.reserve(corpus.size());
  for (const auto& doc : corpus) docs.push_back(model.encode(doc));

  PvTrainer trainer(model, docs);
  std::vector<double> initial;
  std::vector<std::vector<double>> epochs(hp.epochs);
  auto* initial_ptr = stats ? &initial : nullptr;
  auto* epochs_ptr = stats ? &epochs : nullptr;
  if (mode == PvMode::PVDM || mode == PvMode::Merged) {
    model.dm_.emplace();
    trainer.train(*model.dm_, true, derive_seed(seed, "pvdm"), initial_ptr, epochs_ptr);
  }
  if (mode == PvMode::PVDBOW || mode == PvMode::Merged) {
    model.dbow_.emplace();
    trainer.train(*model.dbow_, false, derive_seed(seed, "pvdbow"), initial_ptr, epochs_ptr);
  }
  if (stats) {
    stats->initial_loss = 0.0;
    for (double x : initial) stats->initial_loss += x;
    stats->epoch_loss.clear();
    for (const auto& e : epochs) {
      double sum = 0.0;
      for (double x : e) sum += x;
      stats->epoch_loss.push_back(sum);
    }
  }
  return model;
}

FeatureVector pv_infer(const ParagraphVectorModel& model, const std::vector<std::string>& tokens, std::size_t steps,
                       std::uint64_t seed) {
  auto ids = model.encode(tokens);
  std::vector<std::vector<std::uint32_t>> none;
  PvTrainer trainer(model, none);
  std::vector<double> out;
  out.reserve(model.output_dimension());
  if (model.dm()) {
    auto v = trainer.infer(*model.dm(), true, ids, steps, derive_seed(seed, "pvdm"));
    out.insert(out.end(), v.begin(), v.end());
  }
  if (model.dbow()) {
    auto v = trainer.infer(*model.dbow(), false, ids, steps, derive_seed(seed, "pvdbow"));
    out.insert(out.end(), v.begin(), v.end());
  }
  return FeatureVector::dense(std::move(out));
}

// Text header of `key<TAB>value` lines, the vocabulary, a `payload` line,
// then the matrices as little-endian IEEE-754 doubles.
namespace {

void append_matrix(std::string& out, const Matrix& m) {
  for (double x : m.data) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFF));
  }
}

void read_matrix(std::string_view& in, Matrix& m, std::size_t rows, std::size_t cols) {
  m = Matrix(rows, cols);
  const std::size_t bytes = rows * cols * 8;
  if (in.size() < bytes) throw FormatVersionMismatch("truncated paragraph-vector payload");
  for (std::size_t i = 0; i < rows * cols; ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[i * 8 + b])) << (8 * b);
    m.data[i] = std::bit_cast<double>(bits);
  }
  in.remove_prefix(bytes);
}

}  // namespace

std::string serialize_pv(const ParagraphVectorModel& model) {
  const auto& hp = model.hyperparameters();
  std::string out;
  out.append(kPvHeader).push_back('\n');
  auto kv = [&](std::string_view k, const std::string& v) { out.append(k).append("\t").append(v).push_back('\n'); };
  kv("mode", std::string(to_string(model.mode())));
  kv("dim", std::to_string(hp.dim));
  kv("window", std::to_string(hp.window));
  kv("epochs", std::to_string(hp.epochs));
  kv("negative", std::to_string(hp.negative));
  kv("min_count", std::to_string(hp.min_count));
  kv("learning_rate", format_double(hp.learning_rate));
  kv("composition", hp.composition == PvComposition::Concatenate ? "concatenate" : "average");
  kv("seed", std::to_string(model.seed()));
  kv("vocabulary", std::to_string(model.vocabulary().size()));
  kv("documents", std::to_string(model.document_count()));
  for (std::size_t i = 0; i < model.vocabulary().size(); ++i) {
    out.append(model.vocabulary()[i]).append("\t").append(std::to_string(model.counts()[i])).push_back('\n');
  }
  out.append("payload\n");
  if (model.dm()) {
    append_matrix(out, model.dm()->words);
    append_matrix(out, model.dm()->outputs);
    append_matrix(out, model.dm()->docs);
  }
  if (model.dbow()) {
    append_matrix(out, model.dbow()->outputs);
    append_matrix(out, model.dbow()->docs);
  }
  return out;
}

ParagraphVectorModel parse_pv(std::string_view contents) {
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::string {
    auto nl = contents.find('\n');
    if (nl == std::string_view::npos) throw FormatVersionMismatch("truncated paragraph-vector header");
    std::string line(contents.substr(0, nl));
    contents.remove_prefix(nl + 1);
    ++line_no;
    return line;
  };
  if (contents.substr(0, kPvHeader.size() + 1) != std::string(kPvHeader) + "\n") {
    throw FormatVersionMismatch("not a '" + std::string(kPvHeader) + "' file");
  }
  next_line();
  auto field = [&](std::string_view key) {
    auto line = next_line();
    auto parts = split(line, '\t');
    if (parts.size() != 2 || parts[0] != key) throw MalformedLine(line_no, "expected " + std::string(key));
    return parts[1];
  };
  auto integer = [&](std::string_view key) {
    long long v = 0;
    if (!parse_int(field(key), v) || v < 0) throw MalformedLine(line_no, "bad " + std::string(key));
    return static_cast<std::size_t>(v);
  };

  ParagraphVectorModel model;
  auto mode = parse_pv_mode(field("mode"));
  if (!mode) throw MalformedLine(line_no, "bad mode");
  model.mode_ = *mode;
  model.hp_.dim = integer("dim");
  model.hp_.window = integer("window");
  model.hp_.epochs = integer("epochs");
  model.hp_.negative = integer("negative");
  model.hp_.min_count = integer("min_count");
  if (!parse_double(field("learning_rate"), model.hp_.learning_rate)) throw MalformedLine(line_no, "bad learning_rate");
  auto composition = field("composition");
  if (composition == "concatenate") model.hp_.composition = PvComposition::Concatenate;
  else if (composition == "average") model.hp_.composition = PvComposition::Average;
  else throw MalformedLine(line_no, "bad composition");
  unsigned long long seed = 0;
  {
    auto text = field("seed");
    auto res = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) throw MalformedLine(line_no, "bad seed");
  }
  model.seed_ = seed;
  const std::size_t vocab = integer("vocabulary");
  const std::size_t docs = integer("documents");
  for (std::size_t i = 0; i < vocab; ++i) {
    auto parts = split(next_line(), '\t');
    long long count = 0;
    if (parts.size() != 2 || !parse_int(parts[1], count) || count < 1) throw MalformedLine(line_no, "bad vocabulary entry");
    model.vocabulary_.push_back(parts[0]);
    model.counts_.push_back(static_cast<std::uint64_t>(count));
  }
  if (next_line() != "payload") throw MalformedLine(line_no, "expected payload");
  model.hp_.validate();
  model.build_index();

  const auto& hp = model.hp_;
  if (model.mode_ == PvMode::PVDM || model.mode_ == PvMode::Merged) {
    PvNetwork net;
    const std::size_t width = hp.composition == PvComposition::Concatenate ? hp.dim * (1 + hp.window) : hp.dim;
    read_matrix(contents, net.words, vocab + 1, hp.dim);
    read_matrix(contents, net.outputs, vocab, width);
    read_matrix(contents, net.docs, docs, hp.dim);
    model.dm_ = std::move(net);
  }
  if (model.mode_ == PvMode::PVDBOW || model.mode_ == PvMode::Merged) {
    PvNetwork net;
    read_matrix(contents, net.outputs, vocab, hp.dim);
    read_matrix(contents, net.docs, docs, hp.dim);
    model.dbow_ = std::move(net);
  }
  if (!contents.empty()) throw FormatVersionMismatch("trailing bytes after paragraph-vector payload");
  return model;
}

void save_pv(const ParagraphVectorModel& model, const std::filesystem::path& path) {
  write_file(path, serialize_pv(model));
}

ParagraphVectorModel load_pv(const std::filesystem::path& path) { return parse_pv(read_file(path)); }

}  // namespace sentialg
