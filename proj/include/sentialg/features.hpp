#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sentialg {

// Either a sparse list of (index, value) pairs with strictly increasing
// indices, or a dense array of exactly `dimension` values.
class FeatureVector {
public:
  FeatureVector() = default;

  static FeatureVector sparse(std::size_t dimension, std::vector<std::pair<std::uint32_t, double>> entries);
  static FeatureVector dense(std::vector<double> values);
  static FeatureVector zeros_sparse(std::size_t dimension) { return sparse(dimension, {}); }

  bool is_sparse() const noexcept { return sparse_; }
  std::size_t dimension() const noexcept { return dimension_; }
  // Stored entries: nonzeros for sparse, every coordinate for dense.
  std::size_t stored() const noexcept { return values_.size(); }

  double value(std::size_t i) const;
  double dot(std::span<const double> weights) const;
  // out += scale * this
  void add_to(std::span<double> out, double scale) const;
  std::vector<double> to_dense() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (sparse_) {
      for (std::size_t k = 0; k < values_.size(); ++k) fn(static_cast<std::size_t>(indices_[k]), values_[k]);
    } else {
      for (std::size_t k = 0; k < values_.size(); ++k) fn(k, values_[k]);
    }
  }

  const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool operator==(const FeatureVector&) const = default;

private:
  bool sparse_ = false;
  std::size_t dimension_ = 0;
  std::vector<std::uint32_t> indices_;
  std::vector<double> values_;
};

FeatureVector operator+(const FeatureVector& a, const FeatureVector& b);

}  // namespace sentialg
