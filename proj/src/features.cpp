#include "fussi/features.hpp"

#include <algorithm>
#include <cmath>

#include "fussi/csv.hpp"
#include "fussi/errors.hpp"

namespace fussi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegenerate = 1e-12;

// Left/right label swap under a vertical-axis mirror.
constexpr int kMirrorPerm[9] = {0, 2, 1, 4, 3, 6, 5, 8, 7};

double wrap_angle(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a <= -kPi) a += 2 * kPi;
  return a;
}

}  // namespace

int pair_rank(int i, int j) {
  // rank of (i<j) in lexicographic order over 9 points
  return i * 9 - i * (i + 1) / 2 + (j - i - 1);
}

int triple_rank(int i, int j, int k) {
  int rank = 0;
  for (int a = 0; a < i; ++a) rank += (8 - a) * (7 - a) / 2;
  for (int b = i + 1; b < j; ++b) rank += 8 - b;
  return rank + (k - j - 1);
}

FeatureVector396 features_396(const NormalizedSkeleton9& n) {
  FeatureVector396 f;
  const auto& p = n.points;

  // pairwise block
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      int base = 4 * pair_rank(i, j);
      if (!p[i].present() || !p[j].present()) continue;  // masked, zeros
      double dx = p[j].x - p[i].x;
      double dy = p[j].y - p[i].y;
      double dist = std::hypot(dx, dy);
      f.values[base + 0] = dx;
      f.values[base + 1] = dy;
      f.values[base + 2] = dist;
      f.valid[base + 0] = f.valid[base + 1] = f.valid[base + 2] = true;
      if (dist > kDegenerate) {
        f.values[base + 3] = std::atan2(dy, dx);
        f.valid[base + 3] = true;
      }
    }
  }

  // triangle block
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      for (int k = j + 1; k < 9; ++k) {
        int base = 144 + 3 * triple_rank(i, j, k);
        if (!p[i].present() || !p[j].present() || !p[k].present()) continue;
        const int v[3] = {i, j, k};
        // Degenerate (coincident or collinear) triangles stay masked.
        double ax = p[j].x - p[i].x, ay = p[j].y - p[i].y;
        double bx = p[k].x - p[i].x, by = p[k].y - p[i].y;
        double cross = ax * by - ay * bx;
        double la = std::hypot(ax, ay), lb = std::hypot(bx, by);
        double lc = std::hypot(p[k].x - p[j].x, p[k].y - p[j].y);
        if (la < kDegenerate || lb < kDegenerate || lc < kDegenerate ||
            std::fabs(cross) <= kDegenerate * std::max(la * lb, 1e-300))
          continue;
        for (int s = 0; s < 3; ++s) {
          int a = v[s], b = v[(s + 1) % 3], c = v[(s + 2) % 3];
          double ux = p[b].x - p[a].x, uy = p[b].y - p[a].y;
          double wx = p[c].x - p[a].x, wy = p[c].y - p[a].y;
          double ang = std::atan2(std::fabs(ux * wy - uy * wx),
                                  ux * wx + uy * wy);
          f.values[base + s] = ang;
          f.valid[base + s] = true;
        }
      }
    }
  }
  return f;
}

std::vector<MirrorRule> mirror_feature_map() {
  std::vector<MirrorRule> map(kFeatureDim);
  // pairs
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      int dst = 4 * pair_rank(i, j);
      int a = kMirrorPerm[i], b = kMirrorPerm[j];
      if (a < b) {
        int src = 4 * pair_rank(a, b);
        map[dst + 0] = {src + 0, MirrorOp::kNegate};           // dx
        map[dst + 1] = {src + 1, MirrorOp::kCopy};             // dy
        map[dst + 2] = {src + 2, MirrorOp::kCopy};             // dist
        map[dst + 3] = {src + 3, MirrorOp::kSupplementAngle};  // pi - theta
      } else {
        int src = 4 * pair_rank(b, a);
        map[dst + 0] = {src + 0, MirrorOp::kCopy};
        map[dst + 1] = {src + 1, MirrorOp::kNegate};
        map[dst + 2] = {src + 2, MirrorOp::kCopy};
        map[dst + 3] = {src + 3, MirrorOp::kNegate};
      }
    }
  }
  // triples: interior angles land at the mirrored vertex
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      for (int k = j + 1; k < 9; ++k) {
        int dst = 144 + 3 * triple_rank(i, j, k);
        int m[3] = {kMirrorPerm[i], kMirrorPerm[j], kMirrorPerm[k]};
        int sorted[3] = {m[0], m[1], m[2]};
        std::sort(sorted, sorted + 3);
        int src = 144 + 3 * triple_rank(sorted[0], sorted[1], sorted[2]);
        for (int s = 0; s < 3; ++s) {
          int pos = int(std::find(sorted, sorted + 3, m[s]) - sorted);
          map[dst + s] = {src + pos, MirrorOp::kCopy};
        }
      }
    }
  }
  return map;
}

double apply_mirror_op(MirrorOp op, double v) {
  switch (op) {
    case MirrorOp::kCopy: return v;
    case MirrorOp::kNegate: return -v;
    case MirrorOp::kSupplementAngle: return wrap_angle(kPi - v);
  }
  return v;
}

Eigen::MatrixXd window_features(const std::vector<TrackFeatureFrame>& frames,
                                int window_len) {
  if (frames.empty()) throw EmptyTrack();
  int first_with = -1;
  for (int i = 0; i < int(frames.size()); ++i)
    if (frames[i].has_features) {
      first_with = i;
      break;
    }
  if (first_with < 0) throw EmptyTrack();

  Eigen::MatrixXd out(window_len, kFeatureDim);
  int n = int(frames.size());
  // Walk the trailing window; ZOH both at the head of the track and across
  // interior frames that lack features.
  for (int r = 0; r < window_len; ++r) {
    int idx = n - window_len + r;
    if (idx < first_with) idx = first_with;
    while (idx > first_with && !frames[idx].has_features) --idx;
    const auto& fv = frames[idx].features;
    for (int c = 0; c < kFeatureDim; ++c) out(r, c) = fv.values[c];
  }
  return out;
}

void write_features_csv(const std::string& path,
                        const std::vector<std::pair<std::pair<int, int>,
                                                    FeatureVector396>>& rows,
                        const std::string& manifest_digest) {
  std::string header = "frame,track_id";
  for (int i = 0; i < kFeatureDim; ++i) header += ",f" + std::to_string(i);
  for (int i = 0; i < kFeatureDim; ++i) header += ",m" + std::to_string(i);
  csv::Writer w(path, header, manifest_digest);
  for (const auto& [key, fv] : rows) {
    w.field(key.first).field(key.second);
    for (int i = 0; i < kFeatureDim; ++i) w.field(fv.values[i]);
    for (int i = 0; i < kFeatureDim; ++i) w.field(std::int64_t(fv.valid[i]));
    w.end_row();
  }
}

}  // namespace fussi
