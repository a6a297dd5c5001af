#include "siso/comparability.hpp"

#include <cstring>

namespace siso {

namespace {

void check_sample_index(const Dataset& dataset, int i, const char* name) {
  if (i < 0 || i >= dataset.n()) throw std::invalid_argument(std::string("sample index ") + name + " out of range");
}

}  // namespace

int q_indicator(const Dataset& dataset, int i, int j, int k) {
  check_sample_index(dataset, i, "i");
  check_sample_index(dataset, j, "j");
  if (k < 0 || k >= dataset.d()) throw std::invalid_argument("coordinate index k out of range");
  return dataset.x(i, k) > dataset.x(j, k) ? 1 : 0;
}

bool dominates(const Dataset& dataset, int i, int j, const ActiveSet& active) {
  check_sample_index(dataset, i, "i");
  check_sample_index(dataset, j, "j");
  if (active.dimension() != dataset.d())
    throw std::invalid_argument("active set dimension does not match dataset");
  for (int k : active.indices())
    if (dataset.x(i, k) > dataset.x(j, k)) return false;
  return true;
}

ComparabilityRelation build_comparability(const Dataset& dataset, const ActiveSet& active) {
  if (active.dimension() != dataset.d())
    throw std::invalid_argument("active set dimension does not match dataset");
  const int n = dataset.n();
  BitMatrix dom(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int k : active.indices()) {
        if (dataset.x(i, k) > dataset.x(j, k)) {
          ok = false;
          break;
        }
      }
      if (ok) dom.set(i, j);
    }
  }
  return ComparabilityRelation(dataset.features_ptr(), active, std::move(dom));
}

CoordLeqCache::CoordLeqCache(const Dataset& dataset) : n_(dataset.n()) {
  const int d = dataset.d();
  layers_.reserve(d);
  for (int k = 0; k < d; ++k) {
    BitMatrix layer(n_);
    for (int i = 0; i < n_; ++i) {
      const double xi = dataset.x(i, k);
      for (int j = 0; j < n_; ++j)
        if (xi <= dataset.x(j, k)) layer.set(i, j);
    }
    layers_.push_back(std::move(layer));
  }
}

BitMatrix CoordLeqCache::dominance_for(std::span<const int> coords) const {
  if (coords.empty()) throw std::invalid_argument("dominance_for: empty coordinate set");
  BitMatrix out = layers_[coords[0]];
  const int words = out.words_per_row() * n_;
  uint64_t* dst = out.row(0);
  for (size_t c = 1; c < coords.size(); ++c) {
    const uint64_t* src = layers_[coords[c]].row(0);
    for (int w = 0; w < words; ++w) dst[w] &= src[w];
  }
  return out;
}

}  // namespace siso
