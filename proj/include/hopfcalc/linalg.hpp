#pragma once

#include <vector>

#include "rational.hpp"

namespace hopfcalc {

// Rank of a matrix over Q by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<Rat>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the affine hull of a point set.
inline int affine_dim(const std::vector<std::vector<Rat>>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rat>> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

}  // namespace hopfcalc
