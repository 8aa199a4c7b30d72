#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fussi/image.hpp"
#include "fussi/types.hpp"

namespace fussi {

double iou(const BBox& a, const BBox& b);

// L2-normalized 8x8x8 RGB color histogram (512 bins). Stands in for a
// learned re-id embedding behind the same association interface.
Eigen::VectorXd appearance_descriptor(const Image& crop);

inline double cosine_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return 1.0 - a.dot(b);
}

enum class TrackerMode { kSort, kDeepSortLite };

struct TrackerConfig {
  TrackerMode mode = TrackerMode::kSort;
  double iou_threshold = 0.3;
  int max_age = 1;             // frames a track may go unseen before removal
  int min_hits = 3;            // hits needed before a track's boxes are emitted
  double appearance_weight = 0.5;  // lambda, deepsort_lite only

  static TrackerConfig sort_defaults();
  static TrackerConfig deepsort_defaults();
  void validate() const;
};

struct TrackedBox {
  int frame = 0;
  int track_id = 0;
  BBox bbox;
};

// Online tracker: Kalman prediction, IoU(+appearance) cost, Hungarian
// assignment. Boxes of a track are buffered until the track reaches
// min_hits, then flushed with their original frame indices, so confirmed
// tracks are covered from their first detection.
class Tracker {
 public:
  explicit Tracker(const TrackerConfig& cfg);

  // Processes one frame of detections (all with the same frame index,
  // frames strictly increasing between calls; gaps are coasted).
  // deepsort_lite requires one crop per detection.
  std::vector<TrackedBox> step(int frame, const std::vector<Detection>& dets,
                               const std::vector<Image>& crops = {});

  const std::vector<TrackState>& live_tracks() const;

 private:
  struct InternalTrack {
    TrackState state;
    std::vector<TrackedBox> pending;
    bool confirmed = false;
  };

  TrackerConfig cfg_;
  std::vector<InternalTrack> tracks_;
  mutable std::vector<TrackState> live_view_;
  int next_id_ = 1;
  int last_frame_ = -1;

  void emit_box(InternalTrack& t, int frame, const BBox& box,
                std::vector<TrackedBox>& out);
};

void write_tracks_csv(const std::string& path,
                      const std::vector<TrackedBox>& tracks,
                      const std::string& manifest_digest = "");
std::vector<TrackedBox> parse_tracks(const std::string& path);

}  // namespace fussi
