#include <doctest.h>

#include "oracles.hpp"
#include "siso/comparability.hpp"
#include "siso/rng.hpp"
#include "siso/types.hpp"

using namespace siso;

namespace {

Dataset make_dataset(std::vector<std::vector<double>> rows, std::vector<double> labels,
                     NoiseModel model = NoiseModel::NoisyOutput) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k) m(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  return Dataset(std::move(m), std::move(labels), model);
}

}  // namespace

TEST_CASE("dataset invariants") {
  CHECK_THROWS_AS(make_dataset({{0.1}}, {0.5, 0.7}), std::invalid_argument);
  CHECK_THROWS_AS(make_dataset({{0.1}}, {0.5}, NoiseModel::NoisyInput), std::invalid_argument);
  CHECK_NOTHROW(make_dataset({{0.1}}, {1.0}, NoiseModel::NoisyInput));
  // NoisyOutput labels outside [0,1] are allowed: the synthetic generator
  // produces them by construction.
  CHECK_NOTHROW(make_dataset({{0.1}}, {1.3}));
}

TEST_CASE("active set validation") {
  CHECK_THROWS_AS(ActiveSet({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(ActiveSet({3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(ActiveSet({0, 0}, 3), std::invalid_argument);
  ActiveSet a = ActiveSet::from_one_based({3, 1}, 3);
  CHECK(a.indices() == std::vector<int>{0, 2});
  CHECK(a.one_based() == std::vector<int>{1, 3});
}

TEST_CASE("q indicator on the worked pair") {
  auto ds = make_dataset({{0.3, 0.9}, {0.5, 0.1}}, {0.0, 0.0});
  CHECK(q_indicator(ds, 0, 1, 0) == 0);
  CHECK(q_indicator(ds, 0, 1, 1) == 1);
  CHECK(q_indicator(ds, 1, 0, 0) == 1);
  CHECK_THROWS_AS(q_indicator(ds, 0, 2, 0), std::invalid_argument);
}

TEST_CASE("q indicator ties and identity") {
  auto ds = make_dataset({{0.4, 0.2}, {0.4, 0.8}}, {0.0, 0.0});
  CHECK(q_indicator(ds, 0, 1, 0) == 0);
  CHECK(q_indicator(ds, 1, 0, 0) == 0);
  for (int k = 0; k < 2; ++k) CHECK(q_indicator(ds, 1, 1, k) == 0);
}

TEST_CASE("dominates basics") {
  auto ds = make_dataset({{0.3, 0.1}, {0.9, 0.5}}, {0.0, 0.0});
  CHECK(dominates(ds, 0, 1, ActiveSet({1}, 2)));
  auto incomparable = make_dataset({{0.3, 0.9}, {0.5, 0.1}}, {0.0, 0.0});
  CHECK_FALSE(dominates(incomparable, 0, 1, ActiveSet({0, 1}, 2)));
  CHECK(dominates(incomparable, 0, 0, ActiveSet({0, 1}, 2)));
}

TEST_CASE("build_comparability on small structures") {
  SUBCASE("incomparable pair gives the identity relation") {
    auto ds = make_dataset({{0.3, 0.9}, {0.5, 0.1}}, {0.0, 0.0});
    auto rel = build_comparability(ds, ActiveSet({0, 1}, 2));
    CHECK(rel.dominates(0, 0));
    CHECK(rel.dominates(1, 1));
    CHECK_FALSE(rel.dominates(0, 1));
    CHECK_FALSE(rel.dominates(1, 0));
  }
  SUBCASE("chain gives upper-triangular dominance") {
    auto ds = make_dataset({{0.1, 0.0}, {0.5, 0.0}, {0.9, 0.0}}, {0.0, 0.0, 0.0});
    auto rel = build_comparability(ds, ActiveSet({0}, 2));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(rel.dominates(i, j) == (i <= j));
  }
  SUBCASE("duplicated point dominates both ways") {
    auto ds = make_dataset({{0.4, 0.4}, {0.4, 0.4}}, {0.0, 0.0});
    auto rel = build_comparability(ds, ActiveSet({0, 1}, 2));
    CHECK(rel.dominates(0, 1));
    CHECK(rel.dominates(1, 0));
  }
}

TEST_CASE("q antisymmetry property and relation consistency on random instances") {
  Rng rng(20250810);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(49));
    int d = 1 + static_cast<int>(rng.below(4));
    Dataset ds = oracles::random_dataset(rng, n, d, NoiseModel::NoisyOutput);
    int s = 1 + static_cast<int>(rng.below(d));
    std::vector<int> coords;
    while (static_cast<int>(coords.size()) < s) {
      int k = static_cast<int>(rng.below(d));
      if (std::find(coords.begin(), coords.end(), k) == coords.end()) coords.push_back(k);
    }
    ActiveSet active(coords, d);
    auto rel = build_comparability(ds, active);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(rel.dominates(i, j) == dominates(ds, i, j, active));
        for (int k = 0; k < d; ++k) {
          int sum = q_indicator(ds, i, j, k) + q_indicator(ds, j, i, k);
          CHECK(sum <= 1);
          CHECK((sum == 1) == (ds.x(i, k) != ds.x(j, k)));
        }
      }
    }
    // Transitivity spot-check.
    for (int i = 0; i < std::min(n, 12); ++i)
      for (int j = 0; j < std::min(n, 12); ++j)
        for (int k = 0; k < std::min(n, 12); ++k)
          if (rel.dominates(i, j) && rel.dominates(j, k)) CHECK(rel.dominates(i, k));
  }
}

TEST_CASE("coordinate layer cache matches direct construction") {
  Rng rng(77);
  Dataset ds = oracles::random_dataset(rng, 40, 5, NoiseModel::NoisyOutput);
  CoordLeqCache cache(ds);
  std::vector<int> coords{1, 3, 4};
  BitMatrix fast = cache.dominance_for(coords);
  BitMatrix slow = build_comparability(ds, ActiveSet(coords, 5)).dominance_matrix();
  CHECK(fast == slow);
}
