#include "siso/grid_bounds.hpp"

namespace siso {

BigInt border_cell_bound(int m, int d) {
  if (m < 1 || d < 2) throw std::invalid_argument("border_cell_bound: need m >= 1, d >= 2");
  BigInt md = 1, md1 = 1;
  for (int t = 0; t < d; ++t) {
    md *= m;
    md1 *= (m - 1);
  }
  return md - md1;
}

BigInt incomparable_cells_lower(int N, int d) {
  if (N < 1 || d < 1) throw std::invalid_argument("incomparable_cells_lower: need N >= 1, d >= 1");
  // binomial(N + d - 2, d - 1)
  BigInt num = 1;
  for (int t = 1; t <= d - 1; ++t) {
    num *= (N - 1 + t);
    num /= t;
  }
  return num;
}

int count_border_cells_2d(const std::vector<int>& heights, int m) {
  const int cols = static_cast<int>(heights.size());
  if (cols != m) throw std::invalid_argument("count_border_cells_2d: need one height per column");
  for (int c = 0; c < m; ++c) {
    if (heights[c] < 0 || heights[c] > m)
      throw std::invalid_argument("count_border_cells_2d: heights must lie in 0..m");
    if (c > 0 && heights[c] > heights[c - 1])
      throw std::invalid_argument("count_border_cells_2d: heights must be non-increasing");
  }
  auto filled = [&](int c, int r) {  // 0-based cell (column, row)
    if (c < 0 || c >= m || r < 0 || r >= m) return false;
    return r < heights[c];
  };
  int border = 0;
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < heights[c]; ++r) {
      bool on_border = false;
      for (int dc = -1; dc <= 1 && !on_border; ++dc) {
        for (int dr = -1; dr <= 1 && !on_border; ++dr) {
          if (dc == 0 && dr == 0) continue;
          int nc = c + dc, nr = r + dr;
          if (nc < 0 || nc >= m || nr < 0 || nr >= m) continue;  // outside the grid
          if (!filled(nc, nr)) on_border = true;
        }
      }
      if (on_border) border++;
    }
  }
  return border;
}

std::vector<std::vector<int>> diagonal_cells(int N, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cell(d, 1);
  const int target = N + d - 1;
  // Enumerate compositions of target into d parts within 1..N.
  for (;;) {
    int sum = 0;
    for (int v : cell) sum += v;
    if (sum == target) out.push_back(cell);
    int k = d - 1;
    while (k >= 0 && cell[k] == N) {
      cell[k] = 1;
      --k;
    }
    if (k < 0) break;
    cell[k]++;
  }
  return out;
}

}  // namespace siso
