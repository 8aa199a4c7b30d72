#include "fussi/skeleton.hpp"

#include <cmath>

#include "fussi/errors.hpp"

namespace fussi {

namespace {

// COCO source index for each Skeleton9 slot (neck handled separately).
constexpr int kSourceIdx[9] = {-1,           kLeftShoulder, kRightShoulder,
                               kLeftHip,     kRightHip,     kLeftKnee,
                               kRightKnee,   kLeftAnkle,    kRightAnkle};

// Canonical standing pose in box-relative coordinates (u across, v down).
constexpr double kCanonicalPose[9][2] = {
    {0.50, 0.22},  // neck
    {0.36, 0.22}, {0.64, 0.22},  // shoulders
    {0.41, 0.52}, {0.59, 0.52},  // hips
    {0.41, 0.74}, {0.59, 0.74},  // knees
    {0.41, 0.94}, {0.59, 0.94},  // ankles
};

Keypoint canonical_point(int slot, const BBox& box) {
  return {box.x + kCanonicalPose[slot][0] * box.w,
          box.y + kCanonicalPose[slot][1] * box.h, kOccluded};
}

}  // namespace

int count_visible_sources(const Skeleton17& s) {
  int n = 0;
  for (int slot = 1; slot < 9; ++slot)
    if (s.points[kSourceIdx[slot]].present()) ++n;
  if (s.points[kLeftShoulder].present() && s.points[kRightShoulder].present())
    ++n;  // neck
  return n;
}

Skeleton9 reduce_keypoints(const Skeleton17& s, const BBox& box) {
  int visible = count_visible_sources(s);
  if (visible < 4) throw TooFewKeypoints(visible);

  Skeleton9 out;
  out.source_bbox = box;
  for (int slot = 1; slot < 9; ++slot) {
    const Keypoint& src = s.points[kSourceIdx[slot]];
    out.points[slot] = src.present() ? src : canonical_point(slot, box);
  }
  const Keypoint& ls = s.points[kLeftShoulder];
  const Keypoint& rs = s.points[kRightShoulder];
  if (ls.present() && rs.present()) {
    out.points[kNeck] = {(ls.x + rs.x) / 2, (ls.y + rs.y) / 2, kVisible};
  } else {
    out.points[kNeck] = canonical_point(kNeck, box);
  }
  return out;
}

NormalizedSkeleton9 normalize_skeleton(const Skeleton9& s) {
  const Keypoint& neck = s.points[kNeck];
  double hip_mx = (s.points[kSLeftHip].x + s.points[kSRightHip].x) / 2;
  double hip_my = (s.points[kSLeftHip].y + s.points[kSRightHip].y) / 2;
  double torso = std::hypot(hip_mx - neck.x, hip_my - neck.y);

  NormalizedSkeleton9 out;
  double scale = torso;
  if (torso < 1e-6) {
    double diag = std::hypot(s.source_bbox.w, s.source_bbox.h);
    if (diag < 1e-6) throw DegenerateSkeleton();
    scale = diag;
    out.fallback_used = true;
  }
  out.torso_len = scale;
  for (int i = 0; i < 9; ++i) {
    out.points[i] = {(s.points[i].x - neck.x) / scale,
                     (s.points[i].y - neck.y) / scale, s.points[i].visibility};
  }
  return out;
}

}  // namespace fussi
