#include "sentialg/features.hpp"

#include <algorithm>
#include <stdexcept>

#include "sentialg/errors.hpp"

namespace sentialg {

FeatureVector FeatureVector::sparse(std::size_t dimension, std::vector<std::pair<std::uint32_t, double>> entries) {
  FeatureVector v;
  v.sparse_ = true;
  v.dimension_ = dimension;
  std::sort(entries.begin(), entries.end());
  for (const auto& [index, value] : entries) {
    if (index >= dimension) throw std::out_of_range("sparse index beyond dimension");
    if (!v.indices_.empty() && v.indices_.back() == index) {
      v.values_.back() += value;
      continue;
    }
    v.indices_.push_back(index);
    v.values_.push_back(value);
  }
  return v;
}

FeatureVector FeatureVector::dense(std::vector<double> values) {
  FeatureVector v;
  v.sparse_ = false;
  v.dimension_ = values.size();
  v.values_ = std::move(values);
  return v;
}

double FeatureVector::value(std::size_t i) const {
  if (!sparse_) return values_[i];
  auto it = std::lower_bound(indices_.begin(), indices_.end(), static_cast<std::uint32_t>(i));
  if (it == indices_.end() || *it != i) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

double FeatureVector::dot(std::span<const double> weights) const {
  if (weights.size() != dimension_) throw DimensionMismatch(weights.size(), dimension_);
  double sum = 0.0;
  for_each([&](std::size_t i, double x) { sum += weights[i] * x; });
  return sum;
}

void FeatureVector::add_to(std::span<double> out, double scale) const {
  if (out.size() != dimension_) throw DimensionMismatch(out.size(), dimension_);
  for_each([&](std::size_t i, double x) { out[i] += scale * x; });
}

std::vector<double> FeatureVector::to_dense() const {
  std::vector<double> out(dimension_, 0.0);
  for_each([&](std::size_t i, double x) { out[i] = x; });
  return out;
}

FeatureVector operator+(const FeatureVector& a, const FeatureVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  if (a.is_sparse() && b.is_sparse()) {
    std::vector<std::pair<std::uint32_t, double>> entries;
    a.for_each([&](std::size_t i, double x) { entries.emplace_back(static_cast<std::uint32_t>(i), x); });
    b.for_each([&](std::size_t i, double x) { entries.emplace_back(static_cast<std::uint32_t>(i), x); });
    return FeatureVector::sparse(a.dimension(), std::move(entries));
  }
  auto out = a.to_dense();
  b.add_to(out, 1.0);
  return FeatureVector::dense(std::move(out));
}

}  // namespace sentialg
