#include "fussi/tracker.hpp"

#include <algorithm>
#include <limits>

#include "fussi/csv.hpp"
#include "fussi/errors.hpp"
#include "fussi/hungarian.hpp"
#include "fussi/kalman.hpp"

namespace fussi {

double iou(const BBox& a, const BBox& b) {
  double ix0 = std::max(a.x, b.x);
  double iy0 = std::max(a.y, b.y);
  double ix1 = std::min(a.right(), b.right());
  double iy1 = std::min(a.bottom(), b.bottom());
  double iw = std::max(0.0, ix1 - ix0);
  double ih = std::max(0.0, iy1 - iy0);
  double inter = iw * ih;
  double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

Eigen::VectorXd appearance_descriptor(const Image& crop) {
  if (crop.empty()) throw EmptyCrop();
  Eigen::VectorXd hist = Eigen::VectorXd::Zero(512);
  for (std::size_t i = 0; i < crop.rgb.size(); i += 3) {
    int bin = (crop.rgb[i] >> 5) * 64 + (crop.rgb[i + 1] >> 5) * 8 +
              (crop.rgb[i + 2] >> 5);
    hist[bin] += 1.0;
  }
  double norm = hist.norm();
  if (norm > 0) hist /= norm;
  return hist;
}

TrackerConfig TrackerConfig::sort_defaults() { return TrackerConfig{}; }

TrackerConfig TrackerConfig::deepsort_defaults() {
  TrackerConfig c;
  c.mode = TrackerMode::kDeepSortLite;
  c.max_age = 30;
  return c;
}

void TrackerConfig::validate() const {
  if (iou_threshold < 0 || iou_threshold > 1)
    throw InvalidConfig("iou_threshold outside [0,1]");
  if (max_age < 1) throw InvalidConfig("max_age must be >= 1");
  if (min_hits < 1) throw InvalidConfig("min_hits must be >= 1");
  if (appearance_weight < 0 || appearance_weight > 1)
    throw InvalidConfig("appearance_weight outside [0,1]");
}

Tracker::Tracker(const TrackerConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

void Tracker::emit_box(InternalTrack& t, int frame, const BBox& box,
                       std::vector<TrackedBox>& out) {
  TrackedBox tb{frame, t.state.track_id, box};
  if (t.confirmed) {
    out.push_back(tb);
    return;
  }
  t.pending.push_back(tb);
  if (t.state.hits >= cfg_.min_hits) {
    t.confirmed = true;
    for (auto& p : t.pending) out.push_back(p);
    t.pending.clear();
  }
}

std::vector<TrackedBox> Tracker::step(int frame,
                                      const std::vector<Detection>& dets,
                                      const std::vector<Image>& crops) {
  if (frame <= last_frame_) throw OutOfOrderFrame(frame, last_frame_);
  for (const auto& d : dets)
    if (d.frame != frame)
      throw InvalidArgument("detections must all carry the step's frame index");
  const bool use_appearance = cfg_.mode == TrackerMode::kDeepSortLite;
  if (use_appearance && crops.size() != dets.size())
    throw InvalidArgument("deepsort_lite needs one crop per detection");

  // Coast through skipped frames so kinematics stay calibrated.
  int steps = last_frame_ < 0 ? 1 : frame - last_frame_;
  for (int s = 0; s < steps; ++s)
    for (auto& t : tracks_) kalman::predict(t.state);
  last_frame_ = frame;

  std::vector<Eigen::VectorXd> det_desc;
  if (use_appearance) {
    det_desc.reserve(dets.size());
    for (const auto& c : crops) det_desc.push_back(appearance_descriptor(c));
  }

  // Association cost: (1 - IoU), blended with gallery appearance distance in
  // deepsort_lite mode. Pairs under the IoU gate are forbidden outright.
  const double kForbidden = 1e6;
  const int nt = int(tracks_.size());
  const int nd = int(dets.size());
  std::vector<int> det_of_track(nt, -1);
  if (nt > 0 && nd > 0) {
    Eigen::MatrixXd cost(nt, nd);
    for (int i = 0; i < nt; ++i) {
      BBox pred = kalman::state_box(tracks_[i].state);
      for (int j = 0; j < nd; ++j) {
        double overlap = iou(pred, dets[j].bbox);
        if (overlap < cfg_.iou_threshold) {
          cost(i, j) = kForbidden;
          continue;
        }
        if (use_appearance) {
          double best = 1.0;
          for (const auto& g : tracks_[i].state.gallery)
            best = std::min(best, cosine_distance(g, det_desc[j]));
          cost(i, j) = cfg_.appearance_weight * (1.0 - overlap) +
                       (1.0 - cfg_.appearance_weight) * best;
        } else {
          cost(i, j) = 1.0 - overlap;
        }
      }
    }
    Assignment a = hungarian_min_cost(cost);
    for (auto [ti, dj] : a.pairs)
      if (cost(ti, dj) < kForbidden) det_of_track[ti] = dj;
  }

  std::vector<TrackedBox> out;
  std::vector<bool> det_used(nd, false);
  for (int i = 0; i < nt; ++i) {
    int j = det_of_track[i];
    if (j < 0) continue;
    det_used[j] = true;
    kalman::update(tracks_[i].state, dets[j].bbox);
    if (use_appearance) tracks_[i].state.push_descriptor(det_desc[j]);
    // Emit the associated detection box: exact when detections are exact.
    emit_box(tracks_[i], frame, dets[j].bbox, out);
  }

  for (int j = 0; j < nd; ++j) {
    if (det_used[j]) continue;
    InternalTrack t;
    t.state = kalman::init_track(next_id_++, dets[j].bbox);
    if (use_appearance) t.state.push_descriptor(det_desc[j]);
    emit_box(t, frame, dets[j].bbox, out);
    tracks_.push_back(std::move(t));
  }

  std::erase_if(tracks_, [this](const InternalTrack& t) {
    return t.state.time_since_update > cfg_.max_age;
  });

  std::sort(out.begin(), out.end(), [](const TrackedBox& a, const TrackedBox& b) {
    return a.frame != b.frame ? a.frame < b.frame : a.track_id < b.track_id;
  });
  return out;
}

const std::vector<TrackState>& Tracker::live_tracks() const {
  live_view_.clear();
  for (const auto& t : tracks_) live_view_.push_back(t.state);
  return live_view_;
}

void write_tracks_csv(const std::string& path,
                      const std::vector<TrackedBox>& tracks,
                      const std::string& manifest_digest) {
  csv::Writer w(path, "frame,track_id,x,y,w,h", manifest_digest);
  for (const auto& t : tracks) {
    w.field(t.frame)
        .field(t.track_id)
        .field(t.bbox.x)
        .field(t.bbox.y)
        .field(t.bbox.w)
        .field(t.bbox.h);
    w.end_row();
  }
}

std::vector<TrackedBox> parse_tracks(const std::string& path) {
  std::vector<TrackedBox> out;
  for (const auto& row : csv::read_rows(path)) {
    if (row.fields.size() != 6)
      throw MalformedLine(row.line_no, "expected 6 columns, got " +
                                           std::to_string(row.fields.size()));
    auto fr = csv::parse_int(row.fields[0]);
    auto id = csv::parse_int(row.fields[1]);
    auto x = csv::parse_double(row.fields[2]);
    auto y = csv::parse_double(row.fields[3]);
    auto w = csv::parse_double(row.fields[4]);
    auto h = csv::parse_double(row.fields[5]);
    if (!fr || !id || !x || !y || !w || !h)
      throw MalformedLine(row.line_no, "non-numeric field");
    out.push_back({int(*fr), int(*id), BBox(*x, *y, *w, *h)});
  }
  return out;
}

}  // namespace fussi
