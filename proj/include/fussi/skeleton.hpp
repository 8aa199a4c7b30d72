#pragma once

#include <array>

#include "fussi/types.hpp"

namespace fussi {

// 9-point skeleton in a body-centric frame: origin at the neck, unit =
// torso length (neck to hip midpoint). When the torso is degenerate the
// bbox diagonal is used instead and fallback_used is set.
struct NormalizedSkeleton9 {
  std::array<Keypoint, 9> points{};
  double torso_len = 0;
  bool fallback_used = false;
};

// Selects shoulders/hips/knees/ankles from the 17 COCO keypoints and
// synthesizes the neck as the shoulder midpoint. Missing points
// (visibility 0) are imputed from a canonical standing pose scaled to the
// box and flagged visibility 1. Fewer than 4 visible source points ->
// TooFewKeypoints (the found-skeleton criterion).
Skeleton9 reduce_keypoints(const Skeleton17& s, const BBox& box);

NormalizedSkeleton9 normalize_skeleton(const Skeleton9& s);

// Visible-source count used by the found-skeleton rule (neck counts as
// visible when both shoulders are).
int count_visible_sources(const Skeleton17& s);

}  // namespace fussi
