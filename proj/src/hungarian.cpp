#include "fussi/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fussi/errors.hpp"

namespace fussi {

namespace {

// Jonker-Volgenant style shortest augmenting path on a square matrix.
// Returns column potentials and row->col matching; cost[i][j] - u[i] - v[j]
// is >= 0 everywhere and == 0 on edges usable by some optimal assignment.
struct JvResult {
  std::vector<int> row_to_col;
  std::vector<double> u, v;
};

JvResult solve_square(const Eigen::MatrixXd& a) {
  const int n = int(a.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based arrays with 0 as sentinel column.
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  JvResult res;
  res.row_to_col.assign(n, -1);
  res.u.assign(n, 0);
  res.v.assign(n, 0);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) res.row_to_col[p[j] - 1] = j - 1;
  for (int i = 1; i <= n; ++i) res.u[i - 1] = u[i];
  for (int j = 1; j <= n; ++j) res.v[j - 1] = v[j];
  return res;
}

// Kuhn matching restricted to tight edges, used to test whether a partial
// lexicographic choice still extends to a perfect matching.
struct TightGraph {
  int n;
  std::vector<std::vector<int>> adj;  // row -> tight cols (ascending)
};

bool try_kuhn(const TightGraph& g, int row, std::vector<char>& seen,
              std::vector<int>& col_to_row, const std::vector<char>& row_fixed,
              const std::vector<char>& col_fixed) {
  for (int c : g.adj[row]) {
    if (col_fixed[c] || seen[c]) continue;
    seen[c] = true;
    if (col_to_row[c] < 0 ||
        (!row_fixed[col_to_row[c]] &&
         try_kuhn(g, col_to_row[c], seen, col_to_row, row_fixed, col_fixed))) {
      col_to_row[c] = row;
      return true;
    }
  }
  return false;
}

bool perfect_matching_exists(const TightGraph& g,
                             const std::vector<char>& row_fixed,
                             const std::vector<char>& col_fixed) {
  std::vector<int> col_to_row(g.n, -1);
  for (int r = 0; r < g.n; ++r) {
    if (row_fixed[r]) continue;
    std::vector<char> seen(g.n, false);
    if (!try_kuhn(g, r, seen, col_to_row, row_fixed, col_fixed)) return false;
  }
  return true;
}

}  // namespace

Assignment hungarian_min_cost(const Eigen::MatrixXd& cost) {
  const int rows = int(cost.rows());
  const int cols = int(cost.cols());
  if (rows == 0 || cols == 0) return {};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!std::isfinite(cost(i, j)))
        throw InvalidArgument("hungarian_min_cost requires finite costs");

  // Pad to square. Padded entries cost 0: every perfect matching uses the
  // same number of padded edges, so the real part is still minimized, and
  // padded columns sit at higher indices than real ones.
  const int n = std::max(rows, cols);
  Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(n, n);
  sq.topLeftCorner(rows, cols) = cost;

  JvResult jv = solve_square(sq);

  // Tight edges of the optimal dual carry every optimal assignment.
  double scale = 1.0 + cost.cwiseAbs().maxCoeff();
  double tol = 1e-9 * scale;
  TightGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (sq(r, c) - jv.u[r] - jv.v[c] <= tol) g.adj[r].push_back(c);

  // Fix rows in order, choosing the smallest column that still allows a
  // perfect matching on the rest: lexicographically smallest optimum.
  std::vector<char> row_fixed(n, false), col_fixed(n, false);
  std::vector<int> choice(n, -1);
  for (int r = 0; r < n; ++r) {
    for (int c : g.adj[r]) {
      if (col_fixed[c]) continue;
      row_fixed[r] = true;
      col_fixed[c] = true;
      if (perfect_matching_exists(g, row_fixed, col_fixed)) {
        choice[r] = c;
        break;
      }
      col_fixed[c] = false;
    }
    if (choice[r] < 0) {
      // Tolerance starved the tight graph; fall back to the JV matching.
      row_fixed[r] = true;
      choice[r] = jv.row_to_col[r];
      col_fixed[choice[r]] = true;
    }
  }

  Assignment out;
  for (int r = 0; r < rows; ++r) {
    int c = choice[r];
    if (c < cols) {
      out.pairs.emplace_back(r, c);
      out.total_cost += cost(r, c);
    }
  }
  return out;
}

}  // namespace fussi
