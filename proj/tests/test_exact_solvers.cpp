#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "siso/exact_solvers.hpp"
#include "siso/flow.hpp"

using namespace siso;

namespace {

Dataset make_dataset(std::vector<std::vector<double>> rows, std::vector<double> labels,
                     NoiseModel model) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k) m(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  return Dataset(std::move(m), std::move(labels), model);
}

void check_monotone_feasible(const Dataset& ds, const ActiveSet& active, const FitResult& fit) {
  for (int i = 0; i < ds.n(); ++i)
    for (int j = 0; j < ds.n(); ++j)
      if (dominates(ds, i, j, active)) CHECK(fit.fitted[i] <= fit.fitted[j] + 1e-12);
}

}  // namespace

TEST_CASE("max_flow basics") {
  SUBCASE("single arc") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 3.0);
    auto result = max_flow(net);
    CHECK(result.value == doctest::Approx(3.0));
    CHECK(result.cut_capacity == doctest::Approx(3.0));
  }
  SUBCASE("two disjoint unit paths") {
    FlowNetwork net(4, 0, 3);
    net.add_arc(0, 1, 1.0);
    net.add_arc(1, 3, 1.0);
    net.add_arc(0, 2, 1.0);
    net.add_arc(2, 3, 1.0);
    CHECK(max_flow(net).value == doctest::Approx(2.0));
  }
  SUBCASE("unbounded network is rejected") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, FlowNetwork::kInfiniteCapacity);
    CHECK_THROWS_AS(max_flow(net), std::invalid_argument);
  }
}

TEST_CASE("max_flow equals exhaustive min cut on random unit DAGs") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng.below(7));  // includes terminals
    FlowNetwork net(n, 0, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.45) net.add_arc(i, j, 1.0 + static_cast<double>(rng.below(3)));
    auto result = max_flow(net);
    CHECK(result.value == doctest::Approx(oracles::brute_force_min_cut(net)).epsilon(1e-9));
    CHECK(result.value == doctest::Approx(result.cut_capacity).epsilon(1e-9));
  }
}

TEST_CASE("binary labeling on the three-point chain") {
  auto ds = make_dataset({{0.1}, {0.5}, {0.9}}, {1.0, 0.0, 1.0}, NoiseModel::NoisyInput);
  ActiveSet active({0}, 1);
  auto fit = solve_binary_labeling(ds, active);
  CHECK(fit.objective == doctest::Approx(1.0));
  auto oracle = brute_force_binary(ds, active);
  CHECK(oracle.objective == doctest::Approx(1.0));
  CHECK(fit.fitted == oracle.fitted);  // both take the fewest-ones optimum
  CHECK(fit.fitted == std::vector<double>{0.0, 0.0, 1.0});
}

TEST_CASE("binary labeling trivial cases") {
  SUBCASE("monotone labels cost nothing") {
    auto ds = make_dataset({{0.1}, {0.5}, {0.9}}, {0.0, 1.0, 1.0}, NoiseModel::NoisyInput);
    auto fit = solve_binary_labeling(ds, ActiveSet({0}, 1));
    CHECK(fit.objective == 0.0);
    CHECK(fit.fitted == std::vector<double>{0.0, 1.0, 1.0});
  }
  SUBCASE("antichain keeps every label") {
    auto ds = make_dataset({{0.9, 0.1}, {0.5, 0.5}, {0.1, 0.9}}, {1.0, 0.0, 1.0},
                           NoiseModel::NoisyInput);
    auto fit = solve_binary_labeling(ds, ActiveSet({0, 1}, 2));
    CHECK(fit.objective == 0.0);
    CHECK(fit.fitted == std::vector<double>{1.0, 0.0, 1.0});
  }
  SUBCASE("wrong noise model is refused") {
    auto ds = make_dataset({{0.1}}, {0.5}, NoiseModel::NoisyOutput);
    CHECK_THROWS_AS(solve_binary_labeling(ds, ActiveSet({0}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_binary(ds, ActiveSet({0}, 1)), std::invalid_argument);
  }
  SUBCASE("duplicate points are forced equal") {
    auto ds = make_dataset({{0.4}, {0.4}}, {1.0, 0.0}, NoiseModel::NoisyInput);
    auto fit = solve_binary_labeling(ds, ActiveSet({0}, 1));
    CHECK(fit.objective == doctest::Approx(1.0));
    CHECK(fit.fitted[0] == fit.fitted[1]);
  }
}

TEST_CASE("binary solver agrees with brute force over random instances and all active sets") {
  Rng rng(424242);
  int instances = 0;
  while (instances < 120) {
    int n = 2 + static_cast<int>(rng.below(11));
    int d = 1 + static_cast<int>(rng.below(4));
    Dataset ds = oracles::random_dataset(rng, n, d, NoiseModel::NoisyInput);
    // Every non-empty subset of coordinates.
    for (uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> coords;
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) coords.push_back(k);
      ActiveSet active(coords, d);
      auto fast = solve_binary_labeling(ds, active);
      auto slow = brute_force_binary(ds, active);
      REQUIRE(fast.objective == slow.objective);
      REQUIRE(fast.fitted == slow.fitted);
      check_monotone_feasible(ds, active, fast);
    }
    instances++;
  }
}

TEST_CASE("l2 isotonic on worked examples") {
  SUBCASE("violating pair pools to the midpoint") {
    auto ds = make_dataset({{0.1}, {0.9}}, {1.0, 0.0}, NoiseModel::NoisyOutput);
    auto fit = solve_l2_isotonic(ds, ActiveSet({0}, 1));
    CHECK(fit.fitted[0] == doctest::Approx(0.5));
    CHECK(fit.fitted[1] == doctest::Approx(0.5));
    CHECK(fit.objective == doctest::Approx(0.5));
  }
  SUBCASE("monotone-consistent labels are returned unchanged") {
    auto ds = make_dataset({{0.1}, {0.5}, {0.9}}, {0.2, 0.2, 0.7}, NoiseModel::NoisyOutput);
    auto fit = solve_l2_isotonic(ds, ActiveSet({0}, 1));
    CHECK(fit.objective == doctest::Approx(0.0));
    CHECK(fit.fitted == std::vector<double>{0.2, 0.2, 0.7});
  }
  SUBCASE("wrong noise model is refused") {
    auto ds = make_dataset({{0.1}}, {1.0}, NoiseModel::NoisyInput);
    CHECK_THROWS_AS(solve_l2_isotonic(ds, ActiveSet({0}, 1)), std::invalid_argument);
  }
}

TEST_CASE("l2 isotonic matches the cyclic-projection oracle") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));  // n <= 6 keeps Dykstra quick
    int d = 1 + static_cast<int>(rng.below(3));
    Dataset ds = oracles::random_dataset(rng, n, d, NoiseModel::NoisyOutput);
    ActiveSet active({0}, d);
    auto fit = solve_l2_isotonic(ds, active);
    auto reference = oracles::isotonic_qp_dykstra(ds, active);
    for (int i = 0; i < n; ++i) CHECK(fit.fitted[i] == doctest::Approx(reference[i]).epsilon(1e-6));
  }
}

TEST_CASE("l2 isotonic handles labels outside the unit interval") {
  // The synthetic generator produces such labels; the box constraint then
  // binds and the fit clips block means into [0,1].
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    int d = 1 + static_cast<int>(rng.below(2));
    Matrix x(n, d);
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < d; ++k) x(i, k) = rng.uniform();
      y[i] = -0.5 + 2.0 * rng.uniform();  // range [-0.5, 1.5]
    }
    Dataset ds(std::move(x), std::move(y), NoiseModel::NoisyOutput);
    ActiveSet active({0}, d);
    auto fit = solve_l2_isotonic(ds, active);
    auto reference = oracles::isotonic_qp_dykstra(ds, active);
    for (int i = 0; i < n; ++i) CHECK(fit.fitted[i] == doctest::Approx(reference[i]).epsilon(1e-6));
    for (double v : fit.fitted) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("l2 solution is invariant under sample permutation") {
  Rng rng(31337);
  Dataset ds = oracles::random_dataset(rng, 12, 2, NoiseModel::NoisyOutput);
  ActiveSet active({0, 1}, 2);
  auto fit = solve_l2_isotonic(ds, active);

  std::vector<int> perm(12);
  for (int i = 0; i < 12; ++i) perm[i] = i;
  for (int round = 0; round < 5; ++round) {
    // Deterministic shuffle.
    for (int i = 11; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    Matrix x(12, 2);
    std::vector<double> y(12);
    for (int i = 0; i < 12; ++i) {
      for (int k = 0; k < 2; ++k) x(i, k) = ds.x(perm[i], k);
      y[i] = ds.y(perm[i]);
    }
    Dataset shuffled(std::move(x), std::move(y), NoiseModel::NoisyOutput);
    auto refit = solve_l2_isotonic(shuffled, active);
    for (int i = 0; i < 12; ++i)
      CHECK(refit.fitted[i] == doctest::Approx(fit.fitted[perm[i]]).epsilon(1e-9));
  }
}

TEST_CASE("l2 blockwise mean property") {
  Rng rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng.below(7));
    Dataset ds = oracles::random_dataset(rng, n, 2, NoiseModel::NoisyOutput);
    ActiveSet active({0, 1}, 2);
    auto fit = solve_l2_isotonic(ds, active);
    // Group samples by fitted value; each interior block value must be the
    // mean of its labels (values at the box boundary may be clipped).
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fit.fitted[a] < fit.fitted[b]; });
    int i = 0;
    while (i < n) {
      int j = i;
      double sum = 0.0;
      while (j < n && fit.fitted[order[j]] == fit.fitted[order[i]]) sum += ds.y(order[j++]);
      double value = fit.fitted[order[i]];
      if (value > 0.0 && value < 1.0) CHECK(value == doctest::Approx(sum / (j - i)).epsilon(1e-9));
      i = j;
    }
  }
}
