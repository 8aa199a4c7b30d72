#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fussi/image.hpp"
#include "fussi/types.hpp"

namespace fussi {

// One pedestrian as annotated in one frame.
struct FramePedestrian {
  int pedestrian_id = 0;
  BBox bbox;
  Skeleton17 skeleton;
};

// Full per-frame annotation of a scene; stands in for dataset ground truth.
struct SceneGroundTruth {
  int image_width = 0;
  int image_height = 0;
  int frame_count = 0;
  std::vector<std::vector<FramePedestrian>> frames;  // index = frame
  std::vector<IntentLabel> labels;                   // one per pedestrian

  const IntentLabel& label_of(int pedestrian_id) const;
};

struct SynthConfig {
  int n_pedestrians = 10;
  int frame_count = 120;
  double crossing_fraction = 0.5;
  double detection_dropout = 0.0;
  double noise_px = 0.0;
  std::uint64_t seed = 1;
  int image_width = 640;
  int image_height = 360;
};

// Per-frame pose parameters driving both keypoints and rendering.
struct PedPose {
  double cx = 0, cy = 0;     // body center, pixels
  double orient = 0;         // 0 = side profile, 1 = front profile
  double phase = 0;          // gait phase, radians
  int dir = 1;               // walk direction along x
  bool active = true;
};

// Deterministic synthetic pedestrian scene with full ground truth.
// Pedestrians walk a sidewalk at constant speed; crossing pedestrians turn
// 90 degrees toward the road at their onset frame, with the torso rotating
// over the preceding 12 frames. Keypoints come from a sinusoidal gait model
// phased on walked distance.
class SynthScene {
 public:
  SynthConfig cfg;
  SceneGroundTruth gt;
  std::vector<Detection> detections;

  // Renders the frame image (background + shaded pedestrian silhouettes).
  Image render_frame(int frame) const;

  // Crop helper: renders the frame and resizes `box` to out_w x out_h.
  Image crop(int frame, const BBox& box, int out_w = 64, int out_h = 64) const;

  const std::vector<std::vector<PedPose>>& poses() const { return poses_; }

 private:
  friend SynthScene synth_scene(const SynthConfig&);
  std::vector<std::vector<PedPose>> poses_;  // [ped][frame]
  std::vector<double> body_height_;          // per pedestrian
  std::vector<Rgb> shirt_, pants_;           // per-pedestrian shading
};

SynthScene synth_scene(const SynthConfig& cfg);

// --- file parsers -----------------------------------------------------------
// Formats (0-based indices, comma separated, optional header, `#` comments):
//   detections.csv: frame,x,y,w,h,confidence,class
//   keypoints.csv:  frame,ped_id,x1,y1,v1,...,x17,y17,v17
//   labels.csv:     ped_id,crossing,onset_frame  (onset empty when crossing=0)

// Keeps only rows with confidence > 0.5 and class 0; output sorted by frame
// (stable within a frame). An empty file parses to an empty list.
std::vector<Detection> parse_detections(const std::string& path);

struct KeypointRecord {
  int frame = 0;
  int pedestrian_id = 0;
  Skeleton17 skeleton;
};

std::vector<KeypointRecord> parse_keypoints(const std::string& path);

std::vector<IntentLabel> parse_labels(const std::string& path);

// --- file writers (CLI artifacts) --------------------------------------------

void write_detections_csv(const std::string& path,
                          const std::vector<Detection>& dets,
                          const std::string& manifest_digest = "");
void write_keypoints_csv(const std::string& path, const SceneGroundTruth& gt,
                         const std::string& manifest_digest = "");
void write_labels_csv(const std::string& path,
                      const std::vector<IntentLabel>& labels,
                      const std::string& manifest_digest = "");
// GT identity boxes for tracking evaluation: frame,ped_id,x,y,w,h
void write_gt_boxes_csv(const std::string& path, const SceneGroundTruth& gt,
                        const std::string& manifest_digest = "");

struct GtBoxRecord {
  int frame = 0;
  int pedestrian_id = 0;
  BBox bbox;
};

std::vector<GtBoxRecord> parse_gt_boxes(const std::string& path);

}  // namespace fussi
