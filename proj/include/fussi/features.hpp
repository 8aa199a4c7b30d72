#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fussi/skeleton.hpp"
#include "fussi/types.hpp"

namespace fussi {

// 396-dimensional skeletal feature vector. Frozen layout:
//   * 36 unordered point pairs (i<j, lexicographic) x 4 slots each:
//       4p+0 dx, 4p+1 dy, 4p+2 Euclidean distance, 4p+3 atan2(dy, dx)
//     -> slots [0, 144)
//   * 84 unordered triples (i<j<k, lexicographic) x 3 interior angles
//     (at vertex i, j, k in that order) -> slots [144, 396)
// Slots touching an absent point, zero-length orientation angles and
// degenerate-triangle angles are emitted as 0 with valid_mask false.
FeatureVector396 features_396(const NormalizedSkeleton9& n);

int pair_rank(int i, int j);            // 0..35
int triple_rank(int i, int j, int k);   // 0..83

// Slot-level effect of mirroring the skeleton about a vertical axis
// (left/right point labels swap, x coordinates negate). For each output
// slot: source slot index plus the transform applied to its value.
enum class MirrorOp { kCopy, kNegate, kSupplementAngle };
struct MirrorRule {
  int source_slot;
  MirrorOp op;
};
std::vector<MirrorRule> mirror_feature_map();
double apply_mirror_op(MirrorOp op, double v);

// Per-frame feature row of one track, in frame order.
struct TrackFeatureFrame {
  int frame = 0;
  bool has_features = false;
  FeatureVector396 features;
};

// t x 396 window ending at the last given frame. Missing leading rows are
// zero-order-hold copies of the earliest available row; missing interior
// rows carry the previous row forward.
Eigen::MatrixXd window_features(const std::vector<TrackFeatureFrame>& frames,
                                int window_len);

void write_features_csv(const std::string& path,
                        const std::vector<std::pair<std::pair<int, int>,
                                                    FeatureVector396>>& rows,
                        const std::string& manifest_digest = "");

}  // namespace fussi
