#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fussi {

struct Assignment {
  // (row, col) pairs sorted by row; size == min(rows, cols).
  std::vector<std::pair<int, int>> pairs;
  double total_cost = 0;
};

// Minimum-cost assignment of an n x m matrix of finite costs. Among all
// optimal assignments, returns the one whose (row, col) pair list is
// lexicographically smallest. Solved with the Jonker-Volgenant shortest
// augmenting path method; ties resolved on the tight-edge graph of the
// optimal dual.
Assignment hungarian_min_cost(const Eigen::MatrixXd& cost);

}  // namespace fussi
