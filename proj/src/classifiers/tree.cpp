#include <algorithm>
#include <cmath>

#include "classifiers/internal.hpp"
#include "sentialg/common.hpp"

namespace sentialg {

double tree_score(const DecisionTree& tree, const FeatureVector& x) {
  std::size_t node = 0;
  while (tree.nodes[node].feature >= 0) {
    const auto& n = tree.nodes[node];
    node = static_cast<std::size_t>(x.value(static_cast<std::size_t>(n.feature)) <= n.threshold ? n.left : n.right);
  }
  return tree.nodes[node].positive_fraction - 0.5;
}

namespace detail {

namespace {

constexpr double kMinGain = 1e-12;

double gini(double pos, double total) {
  if (total <= 0) return 0.0;
  const double p = pos / total;
  return 1.0 - p * p - (1.0 - p) * (1.0 - p);
}

struct Candidate {
  double value;
  std::uint32_t pos;  // positive weight carried by this entry
  std::uint32_t total;
};

struct Split {
  std::int32_t feature = -1;
  double threshold = 0.0;
  double impurity = 0.0;
};

// Greedy CART builder on Gini impurity. Samples may repeat (bootstrap); each
// occurrence counts once. For sparse data each feature keeps a column of its
// nonzero entries so small columns are scanned instead of every sample.
class TreeBuilder {
public:
  TreeBuilder(const LabeledDataset& data, const ClassifierHyperparameters& hp, std::size_t max_features, Rng& rng)
      : data_(data), hp_(hp), max_features_(max_features), rng_(rng), dimension_(data.dimension()) {
    sparse_ = !data.features.empty() && data.features.front().is_sparse();
    if (sparse_) {
      columns_.resize(dimension_);
      for (std::size_t i = 0; i < data.size(); ++i) {
        data.features[i].for_each([&](std::size_t j, double v) {
          if (v != 0.0) columns_[j].emplace_back(v, static_cast<std::uint32_t>(i));
        });
      }
    }
    stamp_.assign(data.size(), 0);
    multiplicity_.assign(data.size(), 0);
    features_.resize(dimension_);
    for (std::size_t j = 0; j < dimension_; ++j) features_[j] = static_cast<std::uint32_t>(j);
  }

  DecisionTree build(std::vector<std::uint32_t> samples) {
    tree_.nodes.clear();
    grow(std::move(samples), 0);
    return std::move(tree_);
  }

private:
  std::int32_t grow(std::vector<std::uint32_t> samples, std::size_t depth) {
    const auto id = static_cast<std::int32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::uint32_t pos = 0;
    for (auto s : samples) pos += data_.labels[s] == Label::Positive ? 1u : 0u;
    const auto total = static_cast<std::uint32_t>(samples.size());
    tree_.nodes[id].samples = total;
    tree_.nodes[id].positive_fraction = total == 0 ? 0.0 : static_cast<double>(pos) / total;

    if (depth >= hp_.max_depth || total < 2 * hp_.min_leaf || pos == 0 || pos == total) return id;

    auto best = find_split(samples, pos, total);
    if (best.feature < 0) return id;

    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    for (auto s : samples) {
      (data_.features[s].value(static_cast<std::size_t>(best.feature)) <= best.threshold ? left : right).push_back(s);
    }
    samples.clear();
    samples.shrink_to_fit();
    tree_.nodes[id].feature = best.feature;
    tree_.nodes[id].threshold = best.threshold;
    const auto l = grow(std::move(left), depth + 1);
    tree_.nodes[id].left = l;
    const auto r = grow(std::move(right), depth + 1);
    tree_.nodes[id].right = r;
    return id;
  }

  std::vector<Candidate> collect(std::uint32_t feature, const std::vector<std::uint32_t>& samples,
                                 std::uint32_t node_pos, std::uint32_t node_total) {
    std::vector<Candidate> out;
    if (sparse_ && columns_[feature].size() < samples.size()) {
      std::uint32_t nz_pos = 0;
      std::uint32_t nz_total = 0;
      for (const auto& [value, s] : columns_[feature]) {
        if (stamp_[s] != current_stamp_) continue;
        const auto m = multiplicity_[s];
        const auto p = data_.labels[s] == Label::Positive ? m : 0u;
        out.push_back({value, p, m});
        nz_pos += p;
        nz_total += m;
      }
      if (nz_total < node_total) out.push_back({0.0, node_pos - nz_pos, node_total - nz_total});
    } else {
      out.reserve(samples.size());
      for (auto s : samples) {
        out.push_back({data_.features[s].value(feature), data_.labels[s] == Label::Positive ? 1u : 0u, 1u});
      }
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    return out;
  }

  Split find_split(const std::vector<std::uint32_t>& samples, std::uint32_t pos, std::uint32_t total) {
    ++current_stamp_;
    for (auto s : samples) {
      if (stamp_[s] != current_stamp_) {
        stamp_[s] = current_stamp_;
        multiplicity_[s] = 0;
      }
      multiplicity_[s]++;
    }

    // Features to try: all in index order, or a fresh random subset.
    std::size_t tries = std::min(max_features_, dimension_);
    if (tries < dimension_) {
      for (std::size_t k = 0; k < tries; ++k) {
        std::size_t j = k + rng_.index(dimension_ - k);
        std::swap(features_[k], features_[j]);
      }
    } else {
      for (std::size_t j = 0; j < dimension_; ++j) features_[j] = static_cast<std::uint32_t>(j);
    }

    const double n = static_cast<double>(total);
    const double parent = gini(pos, n);
    Split best;
    best.impurity = parent - kMinGain;
    for (std::size_t k = 0; k < tries; ++k) {
      const auto feature = features_[k];
      auto values = collect(feature, samples, pos, total);
      if (values.empty() || values.front().value == values.back().value) continue;
      double left_pos = 0;
      double left_total = 0;
      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        left_pos += values[i].pos;
        left_total += values[i].total;
        if (values[i].value == values[i + 1].value) continue;
        const double right_total = n - left_total;
        if (left_total < static_cast<double>(hp_.min_leaf) || right_total < static_cast<double>(hp_.min_leaf)) continue;
        const double impurity =
            (left_total * gini(left_pos, left_total) + right_total * gini(pos - left_pos, right_total)) / n;
        if (impurity < best.impurity) {
          const double a = values[i].value;
          const double b = values[i + 1].value;
          double threshold = a + (b - a) / 2.0;
          if (!(threshold >= a && threshold < b)) threshold = a;
          best.feature = static_cast<std::int32_t>(feature);
          best.threshold = threshold;
          best.impurity = impurity;
        }
      }
    }
    return best;
  }

  const LabeledDataset& data_;
  const ClassifierHyperparameters& hp_;
  std::size_t max_features_;
  Rng& rng_;
  std::size_t dimension_;
  bool sparse_ = false;
  std::vector<std::vector<std::pair<double, std::uint32_t>>> columns_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> multiplicity_;
  std::uint32_t current_stamp_ = 0;
  std::vector<std::uint32_t> features_;
  DecisionTree tree_;
};

std::uint64_t tree_seed(std::uint64_t seed, std::size_t index) { return seed + index * 0x9E3779B97F4A7C15ULL; }

}  // namespace

std::size_t resolve_max_features(ClassifierKind kind, const ClassifierHyperparameters& hp, std::size_t dimension) {
  if (dimension == 0) return 1;
  if (hp.max_features) return std::clamp<std::size_t>(*hp.max_features, 1, dimension);
  if (kind == ClassifierKind::RF) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(dimension))));
  }
  return dimension;
}

DecisionTree train_tree(const LabeledDataset& data, const ClassifierHyperparameters& hp, std::size_t max_features,
                        std::uint64_t seed) {
  Rng rng(seed);
  TreeBuilder builder(data, hp, max_features, rng);
  std::vector<std::uint32_t> samples(data.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = static_cast<std::uint32_t>(i);
  return builder.build(std::move(samples));
}

// Tree i draws its features from tree_seed(seed, i) and its bootstrap sample
// from a derived stream, so tree 0 without bootstrap is exactly the DT that
// train_tree builds from `seed`. Results do not depend on `jobs`.
ForestParams train_forest(const LabeledDataset& data, const ClassifierHyperparameters& hp, std::size_t max_features,
                          std::uint64_t seed, unsigned jobs) {
  ForestParams forest(hp.rf_trees);
  parallel_for(hp.rf_trees, jobs, [&](std::size_t t) {
    const auto s = tree_seed(seed, t);
    std::vector<std::uint32_t> samples(data.size());
    if (hp.rf_bootstrap) {
      Rng boot(derive_seed(s, "bootstrap"));
      for (auto& x : samples) x = static_cast<std::uint32_t>(boot.index(data.size()));
      std::sort(samples.begin(), samples.end());
    } else {
      for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = static_cast<std::uint32_t>(i);
    }
    Rng rng(s);
    TreeBuilder builder(data, hp, max_features, rng);
    forest[t] = builder.build(std::move(samples));
  });
  return forest;
}

}  // namespace detail
}  // namespace sentialg
