#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fussi/errors.hpp"
#include "fussi/image.hpp"

namespace fussi {

// Frames are acquired at 30 fps; 16 frames ~ 0.53 s.
inline constexpr double kFrameRate = 30.0;

// Axis-aligned pixel box, (x, y) = top-left corner.
struct BBox {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  BBox() = default;
  BBox(double x_, double y_, double w_, double h_) : x(x_), y(y_), w(w_), h(h_) {
    if (!(w > 0) || !(h > 0))
      throw InvalidArgument("BBox requires w > 0 and h > 0");
  }

  double area() const { return w * h; }
  double right() const { return x + w; }
  double bottom() const { return y + h; }
  double cx() const { return x + w / 2; }
  double cy() const { return y + h / 2; }
};

// Measurement mapping used by the tracker: box -> [cx, cy, s, r].
struct CenterScale {
  double cx = 0, cy = 0, s = 0, r = 0;
};

inline CenterScale bbox_center_scale(const BBox& b) {
  return {b.x + b.w / 2, b.y + b.h / 2, b.w * b.h, b.w / b.h};
}

inline BBox bbox_from_center_scale(const CenterScale& m) {
  double w = std::sqrt(m.s * m.r);
  double h = m.s / w;
  return BBox(m.cx - w / 2, m.cy - h / 2, w, h);
}

struct Detection {
  int frame = 0;
  BBox bbox;
  double confidence = 0;
  int class_id = 0;

  Detection() = default;
  Detection(int frame_, BBox box_, double conf_, int cls_ = 0)
      : frame(frame_), bbox(box_), confidence(conf_), class_id(cls_) {
    if (frame < 0) throw InvalidArgument("Detection frame must be >= 0");
    if (confidence < 0 || confidence > 1)
      throw InvalidArgument("Detection confidence must be in [0,1]");
  }
};

enum Visibility : int { kAbsent = 0, kOccluded = 1, kVisible = 2 };

struct Keypoint {
  double x = 0;
  double y = 0;
  int visibility = kAbsent;

  bool present() const { return visibility > 0; }
};

inline void check_visibility_value(int v) {
  if (v < 0 || v > 2) throw InvalidArgument("visibility must be in {0,1,2}");
}

// COCO keypoint indices (fixed order, see README for the full table).
enum CocoKeypoint : int {
  kNose = 0,
  kLeftEye = 1,
  kRightEye = 2,
  kLeftEar = 3,
  kRightEar = 4,
  kLeftShoulder = 5,
  kRightShoulder = 6,
  kLeftElbow = 7,
  kRightElbow = 8,
  kLeftWrist = 9,
  kRightWrist = 10,
  kLeftHip = 11,
  kRightHip = 12,
  kLeftKnee = 13,
  kRightKnee = 14,
  kLeftAnkle = 15,
  kRightAnkle = 16,
};

struct Skeleton17 {
  std::array<Keypoint, 17> points{};

  Skeleton17() = default;
  static Skeleton17 from_points(const std::vector<Keypoint>& pts) {
    if (pts.size() != 17)
      throw InvalidArgument("Skeleton17 requires exactly 17 keypoints");
    Skeleton17 s;
    for (int i = 0; i < 17; ++i) {
      check_visibility_value(pts[i].visibility);
      s.points[i] = pts[i];
    }
    return s;
  }
};

// Reduced 9-point skeleton order.
enum SkelPoint : int {
  kNeck = 0,
  kSLeftShoulder = 1,
  kSRightShoulder = 2,
  kSLeftHip = 3,
  kSRightHip = 4,
  kSLeftKnee = 5,
  kSRightKnee = 6,
  kSLeftAnkle = 7,
  kSRightAnkle = 8,
};

struct Skeleton9 {
  std::array<Keypoint, 9> points{};
  BBox source_bbox;

  Skeleton9() = default;
  static Skeleton9 from_points(const std::vector<Keypoint>& pts, const BBox& box) {
    if (pts.size() != 9)
      throw InvalidArgument("Skeleton9 requires exactly 9 keypoints");
    Skeleton9 s;
    for (int i = 0; i < 9; ++i) {
      check_visibility_value(pts[i].visibility);
      s.points[i] = pts[i];
    }
    s.source_bbox = box;
    return s;
  }
};

inline constexpr int kFeatureDim = 396;

struct FeatureVector396 {
  std::array<double, kFeatureDim> values{};
  std::array<bool, kFeatureDim> valid{};

  static FeatureVector396 from_values(const std::vector<double>& v,
                                      const std::vector<bool>& mask) {
    if (v.size() != kFeatureDim || mask.size() != kFeatureDim)
      throw InvalidArgument("FeatureVector396 requires exactly 396 entries");
    FeatureVector396 f;
    for (int i = 0; i < kFeatureDim; ++i) {
      f.values[i] = v[i];
      f.valid[i] = mask[i];
    }
    return f;
  }
};

// Crossing label, onset-frame granularity. onset_frame present iff crossing.
struct IntentLabel {
  int pedestrian_id = 0;
  bool crossing = false;
  std::optional<int> onset_frame;

  IntentLabel() = default;
  IntentLabel(int ped, bool cross, std::optional<int> onset)
      : pedestrian_id(ped), crossing(cross), onset_frame(onset) {
    if (crossing != onset_frame.has_value())
      throw InvalidArgument("onset_frame must be present iff crossing");
  }
};

inline constexpr int kTrackStateDim = 7;
inline constexpr int kGalleryCapacity = 100;

// Kalman state over [cx, cy, s, r, v_cx, v_cy, v_s] plus lifecycle counters.
struct TrackState {
  int track_id = 0;
  Eigen::Matrix<double, 7, 1> mean = Eigen::Matrix<double, 7, 1>::Zero();
  Eigen::Matrix<double, 7, 7> cov = Eigen::Matrix<double, 7, 7>::Identity();
  int hits = 0;
  int hit_streak = 0;
  int age = 0;
  int time_since_update = 0;

  // Appearance gallery: ring buffer of at most kGalleryCapacity descriptors.
  std::vector<Eigen::VectorXd> gallery;
  int gallery_head = 0;

  void push_descriptor(const Eigen::VectorXd& d) {
    if ((int)gallery.size() < kGalleryCapacity) {
      gallery.push_back(d);
    } else {
      gallery[gallery_head] = d;
      gallery_head = (gallery_head + 1) % kGalleryCapacity;
    }
  }
};

// One observed frame of a track, as consumed by the classifiers.
struct WindowFrame {
  int frame = 0;
  Image crop;
  std::optional<Skeleton9> skeleton;
  std::optional<FeatureVector396> features;
};

// Fixed-length per-pedestrian observation window (16 densenet / 14 RF).
struct SequenceWindow {
  int track_id = 0;
  std::vector<WindowFrame> frames;
  int window_len = 16;

  static SequenceWindow make(int track_id, std::vector<WindowFrame> fr, int len) {
    if ((int)fr.size() != len)
      throw InvalidArgument("SequenceWindow length must equal window_len");
    for (size_t i = 1; i < fr.size(); ++i)
      if (fr[i].frame != fr[i - 1].frame + 1)
        throw InvalidArgument("SequenceWindow frames must increase by 1");
    SequenceWindow w;
    w.track_id = track_id;
    w.frames = std::move(fr);
    w.window_len = len;
    return w;
  }
};

}  // namespace fussi
