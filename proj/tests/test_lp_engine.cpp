#include <doctest.h>

#include "oracles.hpp"
#include "siso/lp.hpp"

using namespace siso;

namespace {

LpProblem random_lp(Rng& rng) {
  int m = 2 + static_cast<int>(rng.below(5));   // <= 6 vars
  int rows = 1 + static_cast<int>(rng.below(8));  // <= 8 constraints
  LpProblem p = LpProblem::with_bounds(m, 0.0, 10.0);
  for (int j = 0; j < m; ++j) p.objective[j] = -2.0 + 4.0 * rng.uniform();
  for (int r = 0; r < rows; ++r) {
    LpConstraint row;
    row.coeffs.resize(m);
    for (int j = 0; j < m; ++j) row.coeffs[j] = -1.0 + 2.0 * rng.uniform();
    row.rel = rng.uniform() < 0.7 ? LpRelation::LessEqual : LpRelation::GreaterEqual;
    // Keep the origin-ish region feasible often enough to be interesting.
    row.rhs = row.rel == LpRelation::LessEqual ? 1.0 + 4.0 * rng.uniform() : -2.0 + 2.0 * rng.uniform();
    p.constraints.push_back(std::move(row));
  }
  return p;
}

}  // namespace

TEST_CASE("lp worked examples") {
  SUBCASE("minimize x subject to x >= 3") {
    LpProblem p = LpProblem::with_bounds(1, 0.0, 10.0);
    p.objective = {1.0};
    p.constraints.push_back({{1.0}, LpRelation::GreaterEqual, 3.0});
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(3.0));
    CHECK(sol.objective == doctest::Approx(3.0));
  }
  SUBCASE("unit triangle") {
    LpProblem p = LpProblem::with_bounds(2, 0.0, 1.0);
    p.objective = {-1.0, -1.0};
    p.constraints.push_back({{1.0, 1.0}, LpRelation::LessEqual, 1.0});
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-1.0));
  }
  SUBCASE("infeasible box") {
    LpProblem p = LpProblem::with_bounds(1, 0.0, 1.0);
    p.objective = {1.0};
    p.constraints.push_back({{1.0}, LpRelation::GreaterEqual, 2.0});
    auto sol = solve_lp(p);
    CHECK(sol.status == LpStatus::Infeasible);
    CHECK(sol.infeasibility > 0.5);
  }
  SUBCASE("unbounded ray") {
    LpProblem p = LpProblem::with_bounds(2, 0.0, std::numeric_limits<double>::infinity());
    p.objective = {-1.0, 0.0};
    p.constraints.push_back({{0.0, 1.0}, LpRelation::LessEqual, 5.0});
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Unbounded);
    REQUIRE(sol.ray.size() == 2);
    // The ray must strictly improve the objective.
    CHECK(sol.ray[0] > 0.5);
  }
  SUBCASE("equality constraints and negative bounds") {
    LpProblem p = LpProblem::with_bounds(2, -5.0, 5.0);
    p.objective = {1.0, 2.0};
    p.constraints.push_back({{1.0, 1.0}, LpRelation::Equal, 1.0});
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] + sol.x[1] == doctest::Approx(1.0));
    CHECK(sol.objective == doctest::Approx(1.0 * 5.0 + 2.0 * -4.0));  // x = (5, -4)
  }
  SUBCASE("dimension mismatch is an argument error") {
    LpProblem p = LpProblem::with_bounds(2, 0.0, 1.0);
    p.objective = {1.0, 1.0};
    p.constraints.push_back({{1.0}, LpRelation::LessEqual, 1.0});
    CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
  }
}

TEST_CASE("lp matches vertex enumeration on random instances") {
  Rng rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LpProblem p = random_lp(rng);
    auto sol = solve_lp(p);
    auto oracle = oracles::lp_vertex_enumeration(p);
    if (sol.status == LpStatus::Optimal) {
      REQUIRE(oracle.has_value());
      CHECK(sol.objective == doctest::Approx(*oracle).epsilon(1e-7));
      // Feasibility of the returned point.
      for (size_t r = 0; r < p.constraints.size(); ++r) {
        double lhs = 0.0;
        for (int j = 0; j < p.num_vars(); ++j) lhs += p.constraints[r].coeffs[j] * sol.x[j];
        if (p.constraints[r].rel == LpRelation::LessEqual) CHECK(lhs <= p.constraints[r].rhs + 1e-8);
        if (p.constraints[r].rel == LpRelation::GreaterEqual) CHECK(lhs >= p.constraints[r].rhs - 1e-8);
        if (p.constraints[r].rel == LpRelation::Equal)
          CHECK(lhs == doctest::Approx(p.constraints[r].rhs).epsilon(1e-8));
      }
      solved++;
    } else if (sol.status == LpStatus::Infeasible) {
      CHECK_FALSE(oracle.has_value());
    }
  }
  CHECK(solved > 100);  // the generator should produce plenty of solvable LPs
}

TEST_CASE("lp determinism: identical problems give identical pivot sequences") {
  Rng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    LpProblem p = random_lp(rng);
    auto a = solve_lp(p);
    auto b = solve_lp(p);
    CHECK(a.status == b.status);
    CHECK(a.pivots == b.pivots);
    CHECK(a.pivot_hash == b.pivot_hash);
    if (a.status == LpStatus::Optimal) {
      CHECK(a.objective == b.objective);  // bit-identical
      CHECK(a.x == b.x);
    }
  }
}

TEST_CASE("lp duals certify optimality on random instances") {
  // Strong duality: c.x == y.b + sum of bound terms. The bound term for
  // variable j is rc_j * (bound it sits at); equivalently we check weak
  // duality through the Lagrangian with the returned y.
  Rng rng(6001);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    LpProblem p = random_lp(rng);
    auto sol = solve_lp(p);
    if (sol.status != LpStatus::Optimal) continue;
    checked++;
    // Lagrangian bound: L(y) = min_x { c.x - sum_r y_r (a_r.x - b_r) } over
    // the box; a valid y gives L(y) <= optimum, with equality at optimal y.
    double bound = 0.0;
    for (size_t r = 0; r < p.constraints.size(); ++r) bound += sol.row_duals[r] * p.constraints[r].rhs;
    for (int j = 0; j < p.num_vars(); ++j) {
      double reduced = p.objective[j];
      for (size_t r = 0; r < p.constraints.size(); ++r)
        reduced -= sol.row_duals[r] * p.constraints[r].coeffs[j];
      bound += reduced > 0.0 ? reduced * p.lower[j] : reduced * p.upper[j];
    }
    CHECK(bound <= sol.objective + 1e-6);
    CHECK(bound == doctest::Approx(sol.objective).epsilon(1e-6));
  }
  CHECK(checked >= 30);
}

TEST_CASE("integrality check on worked examples") {
  SUBCASE("monotone-consistent labels") {
    Matrix x(3, 1);
    x(0, 0) = 0.1;
    x(1, 0) = 0.5;
    x(2, 0) = 0.9;
    Dataset ds(std::move(x), {0.0, 1.0, 1.0}, NoiseModel::NoisyInput);
    auto report = check_integrality(ds, ActiveSet({0}, 1));
    CHECK(report.lp_objective == doctest::Approx(0.0));
    CHECK(report.ip_objective == doctest::Approx(0.0));
    CHECK(report.integral);
  }
  SUBCASE("chain with one inversion") {
    Matrix x(3, 1);
    x(0, 0) = 0.1;
    x(1, 0) = 0.5;
    x(2, 0) = 0.9;
    Dataset ds(std::move(x), {1.0, 0.0, 1.0}, NoiseModel::NoisyInput);
    auto report = check_integrality(ds, ActiveSet({0}, 1));
    CHECK(report.ip_objective == doctest::Approx(1.0));
    CHECK(report.lp_objective == doctest::Approx(1.0));
    CHECK(report.integral);
  }
}

TEST_CASE("relaxation is integral on random instances") {
  Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(11));
    int d = 1 + static_cast<int>(rng.below(3));
    Dataset ds = oracles::random_dataset(rng, n, d, NoiseModel::NoisyInput);
    int s = 1 + static_cast<int>(rng.below(d));
    std::vector<int> coords;
    while (static_cast<int>(coords.size()) < s) {
      int k = static_cast<int>(rng.below(d));
      if (std::find(coords.begin(), coords.end(), k) == coords.end()) coords.push_back(k);
    }
    auto report = check_integrality(ds, ActiveSet(coords, d));
    CHECK(report.integral);
  }
}
