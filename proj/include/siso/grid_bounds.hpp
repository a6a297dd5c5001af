#pragma once

#include "siso/poset_count.hpp"

namespace siso {

/// Upper bound on the number of border cells of any (d-1)-dimensional
/// staircase partition of the m^d grid: m^d - (m-1)^d.
BigInt border_cell_bound(int m, int d);

/// Lower bound on the number of pairwise-incomparable cells of the N^d
/// grid: binomial(N + d - 2, d - 1), realized by the cells whose
/// coordinates sum to N + d - 1.
BigInt incomparable_cells_lower(int N, int d);

/// Border-cell count of one explicit 1-dimensional partition of the
/// m x m grid: heights[c] cells are filled in column c (heights
/// non-increasing, values in 0..m). A cell is a border cell when it is
/// filled and shares a face or a corner with an unfilled cell. Test
/// helper for the d=2 bound.
int count_border_cells_2d(const std::vector<int>& heights, int m);

/// All cells of the N^d grid with coordinate sum N + d - 1, 1-based.
std::vector<std::vector<int>> diagonal_cells(int N, int d);

}  // namespace siso
