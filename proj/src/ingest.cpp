#include "fussi/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fussi/csv.hpp"
#include "fussi/errors.hpp"
#include "fussi/rng.hpp"

namespace fussi {

const IntentLabel& SceneGroundTruth::label_of(int pedestrian_id) const {
  for (const auto& l : labels)
    if (l.pedestrian_id == pedestrian_id) return l;
  throw Error("no label for pedestrian " + std::to_string(pedestrian_id));
}

// --- parsers -----------------------------------------------------------------

static double need_double(const csv::Row& row, std::size_t col) {
  auto v = csv::parse_double(row.fields[col]);
  if (!v)
    throw MalformedLine(row.line_no,
                        "field " + std::to_string(col) + " is not numeric");
  return *v;
}

static std::int64_t need_int(const csv::Row& row, std::size_t col) {
  auto v = csv::parse_int(row.fields[col]);
  if (!v)
    throw MalformedLine(row.line_no,
                        "field " + std::to_string(col) + " is not an integer");
  return *v;
}

std::vector<Detection> parse_detections(const std::string& path) {
  std::vector<Detection> out;
  for (const auto& row : csv::read_rows(path)) {
    if (row.fields.size() != 7)
      throw MalformedLine(row.line_no, "expected 7 columns, got " +
                                           std::to_string(row.fields.size()));
    int frame = int(need_int(row, 0));
    double x = need_double(row, 1), y = need_double(row, 2);
    double w = need_double(row, 3), h = need_double(row, 4);
    double conf = need_double(row, 5);
    int cls = int(need_int(row, 6));
    if (frame < 0) throw MalformedLine(row.line_no, "negative frame index");
    if (w <= 0 || h <= 0) throw MalformedLine(row.line_no, "non-positive box size");
    if (conf < 0 || conf > 1)
      throw MalformedLine(row.line_no, "confidence outside [0,1]");
    if (conf <= 0.5 || cls != 0) continue;  // detector threshold, pedestrians only
    out.emplace_back(frame, BBox(x, y, w, h), conf, cls);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.frame < b.frame;
                   });
  return out;
}

std::vector<KeypointRecord> parse_keypoints(const std::string& path) {
  std::vector<KeypointRecord> out;
  for (const auto& row : csv::read_rows(path)) {
    if (row.fields.size() != 2 + 17 * 3)
      throw MalformedLine(row.line_no, "expected 53 columns, got " +
                                           std::to_string(row.fields.size()));
    KeypointRecord rec;
    rec.frame = int(need_int(row, 0));
    rec.pedestrian_id = int(need_int(row, 1));
    std::vector<Keypoint> pts(17);
    for (int k = 0; k < 17; ++k) {
      pts[k].x = need_double(row, 2 + 3 * k);
      pts[k].y = need_double(row, 3 + 3 * k);
      int vis = int(need_int(row, 4 + 3 * k));
      if (vis < 0 || vis > 2) throw BadVisibility(row.line_no, vis);
      pts[k].visibility = vis;
    }
    rec.skeleton = Skeleton17::from_points(pts);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<IntentLabel> parse_labels(const std::string& path) {
  std::vector<IntentLabel> out;
  for (const auto& row : csv::read_rows(path)) {
    if (row.fields.size() != 3)
      throw MalformedLine(row.line_no, "expected 3 columns, got " +
                                           std::to_string(row.fields.size()));
    int ped = int(need_int(row, 0));
    int crossing = int(need_int(row, 1));
    if (crossing != 0 && crossing != 1)
      throw MalformedLine(row.line_no, "crossing flag must be 0 or 1");
    const std::string& onset_field = row.fields[2];
    if (crossing == 1) {
      auto onset = csv::parse_int(onset_field);
      if (!onset) throw MalformedLine(row.line_no, "missing onset frame");
      out.emplace_back(ped, true, int(*onset));
    } else {
      if (!onset_field.empty()) throw InconsistentLabel(row.line_no);
      out.emplace_back(ped, false, std::nullopt);
    }
  }
  return out;
}

std::vector<GtBoxRecord> parse_gt_boxes(const std::string& path) {
  std::vector<GtBoxRecord> out;
  for (const auto& row : csv::read_rows(path)) {
    if (row.fields.size() != 6)
      throw MalformedLine(row.line_no, "expected 6 columns, got " +
                                           std::to_string(row.fields.size()));
    GtBoxRecord rec;
    rec.frame = int(need_int(row, 0));
    rec.pedestrian_id = int(need_int(row, 1));
    rec.bbox = BBox(need_double(row, 2), need_double(row, 3),
                    need_double(row, 4), need_double(row, 5));
    out.push_back(rec);
  }
  return out;
}

// --- writers ------------------------------------------------------------------

void write_detections_csv(const std::string& path,
                          const std::vector<Detection>& dets,
                          const std::string& manifest_digest) {
  csv::Writer w(path, "frame,x,y,w,h,confidence,class", manifest_digest);
  for (const auto& d : dets) {
    w.field(d.frame)
        .field(d.bbox.x)
        .field(d.bbox.y)
        .field(d.bbox.w)
        .field(d.bbox.h)
        .field(d.confidence)
        .field(d.class_id);
    w.end_row();
  }
}

void write_keypoints_csv(const std::string& path, const SceneGroundTruth& gt,
                         const std::string& manifest_digest) {
  std::string header = "frame,ped_id";
  for (int k = 1; k <= 17; ++k) {
    header += ",x" + std::to_string(k) + ",y" + std::to_string(k) + ",v" +
              std::to_string(k);
  }
  csv::Writer w(path, header, manifest_digest);
  for (int f = 0; f < gt.frame_count; ++f) {
    for (const auto& fp : gt.frames[f]) {
      w.field(f).field(fp.pedestrian_id);
      for (const auto& p : fp.skeleton.points)
        w.field(p.x).field(p.y).field(p.visibility);
      w.end_row();
    }
  }
}

void write_labels_csv(const std::string& path,
                      const std::vector<IntentLabel>& labels,
                      const std::string& manifest_digest) {
  csv::Writer w(path, "ped_id,crossing,onset_frame", manifest_digest);
  for (const auto& l : labels) {
    w.field(l.pedestrian_id).field(l.crossing ? 1 : 0);
    if (l.onset_frame)
      w.field(std::int64_t(*l.onset_frame));
    else
      w.field(std::string());
    w.end_row();
  }
}

void write_gt_boxes_csv(const std::string& path, const SceneGroundTruth& gt,
                        const std::string& manifest_digest) {
  csv::Writer w(path, "frame,ped_id,x,y,w,h", manifest_digest);
  for (int f = 0; f < gt.frame_count; ++f) {
    for (const auto& fp : gt.frames[f]) {
      w.field(f)
          .field(fp.pedestrian_id)
          .field(fp.bbox.x)
          .field(fp.bbox.y)
          .field(fp.bbox.w)
          .field(fp.bbox.h);
      w.end_row();
    }
  }
}

// --- synthetic scene -----------------------------------------------------------

namespace {

Rgb hsv_to_rgb(double h, double s, double v) {
  double c = v * s;
  double hp = h * 6.0;
  double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  double m = v - c;
  auto u8 = [m](double t) { return std::uint8_t(std::lround((t + m) * 255)); };
  return {u8(r), u8(g), u8(b)};
}

struct PedParams {
  double body_height;
  double speed;
  double y_lane;       // sidewalk lane (body center y)
  double x0;
  int dir;
  bool crossing;
  int onset = -1;
  double cross_speed = 0;
};

// Gait keypoints in image pixels for one pose sample.
std::array<Keypoint, 17> gait_keypoints(const PedPose& p, double H) {
  std::array<Keypoint, 17> k{};
  auto put = [&](int idx, double x, double y) {
    k[idx] = {x, y, kVisible};
  };
  double side = 1.0 - p.orient;
  double sho_half = H * (0.055 + 0.105 * p.orient);
  double hip_half = H * (0.045 + 0.075 * p.orient);
  double swing = std::sin(p.phase);
  double arm_swing = -swing;

  double y_sho = p.cy - 0.22 * H;
  double y_hip = p.cy + 0.02 * H;
  double y_knee = p.cy + 0.26 * H;
  double y_ank = p.cy + 0.46 * H;
  double y_head = p.cy - 0.40 * H;

  double lead = side * p.dir * 0.10 * H;  // stride reach, side view only
  double lift = p.orient * 0.035 * H;     // step bounce, front view

  put(kNose, p.cx + side * p.dir * 0.06 * H, y_head);
  put(kLeftEye, p.cx + side * p.dir * 0.045 * H - p.orient * 0.025 * H,
      y_head - 0.02 * H);
  put(kRightEye, p.cx + side * p.dir * 0.045 * H + p.orient * 0.025 * H,
      y_head - 0.02 * H);
  put(kLeftEar, p.cx - p.orient * 0.045 * H, y_head - 0.01 * H);
  put(kRightEar, p.cx + p.orient * 0.045 * H, y_head - 0.01 * H);

  put(kLeftShoulder, p.cx - sho_half, y_sho);
  put(kRightShoulder, p.cx + sho_half, y_sho);
  put(kLeftElbow, p.cx - sho_half - side * 0.02 * H + lead * 0.5 * arm_swing,
      p.cy - 0.06 * H);
  put(kRightElbow, p.cx + sho_half + side * 0.02 * H - lead * 0.5 * arm_swing,
      p.cy - 0.06 * H);
  put(kLeftWrist, p.cx - sho_half - side * 0.02 * H + lead * arm_swing,
      p.cy + 0.08 * H);
  put(kRightWrist, p.cx + sho_half + side * 0.02 * H - lead * arm_swing,
      p.cy + 0.08 * H);

  put(kLeftHip, p.cx - hip_half, y_hip);
  put(kRightHip, p.cx + hip_half, y_hip);
  put(kLeftKnee, p.cx - hip_half + lead * 0.55 * swing, y_knee);
  put(kRightKnee, p.cx + hip_half - lead * 0.55 * swing, y_knee);
  put(kLeftAnkle, p.cx - hip_half + lead * swing,
      y_ank - lift * std::max(0.0, swing));
  put(kRightAnkle, p.cx + hip_half - lead * swing,
      y_ank - lift * std::max(0.0, -swing));
  return k;
}

BBox bbox_of_keypoints(const std::array<Keypoint, 17>& pts, double H) {
  double x0 = 1e18, y0 = 1e18, x1 = -1e18, y1 = -1e18;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  double pad_x = 0.06 * H, pad_y = 0.07 * H;
  return BBox(x0 - pad_x, y0 - pad_y, (x1 - x0) + 2 * pad_x,
              (y1 - y0) + 2 * pad_y);
}

}  // namespace

SynthScene synth_scene(const SynthConfig& cfg) {
  if (cfg.n_pedestrians < 1) throw InvalidConfig("need at least 1 pedestrian");
  if (cfg.frame_count < 1) throw InvalidConfig("need at least 1 frame");
  if (cfg.crossing_fraction < 0 || cfg.crossing_fraction > 1)
    throw InvalidConfig("crossing_fraction outside [0,1]");
  if (cfg.detection_dropout < 0 || cfg.detection_dropout >= 1)
    throw InvalidConfig("detection_dropout outside [0,1)");
  if (cfg.noise_px < 0) throw InvalidConfig("noise_px must be >= 0");
  if (cfg.image_width < 160 || cfg.image_height < 120)
    throw InvalidConfig("image must be at least 160x120");

  int n_cross = int(std::llround(cfg.n_pedestrians * cfg.crossing_fraction));
  if (n_cross > 0 && cfg.frame_count < 64)
    throw InvalidConfig("crossing pedestrians need frame_count >= 64");

  Rng root(cfg.seed);
  SynthScene scene;
  scene.cfg = cfg;
  scene.gt.image_width = cfg.image_width;
  scene.gt.image_height = cfg.image_height;
  scene.gt.frame_count = cfg.frame_count;
  scene.gt.frames.resize(cfg.frame_count);

  // Pick which pedestrians cross: seeded shuffle, first n_cross ids.
  std::vector<int> ids(cfg.n_pedestrians);
  std::iota(ids.begin(), ids.end(), 1);
  {
    Rng shuffle_rng = root.derive(0);
    for (int i = cfg.n_pedestrians - 1; i > 0; --i) {
      int j = int(shuffle_rng.uniform_int(i + 1));
      std::swap(ids[i], ids[j]);
    }
  }
  std::vector<bool> crosses(cfg.n_pedestrians + 1, false);
  for (int i = 0; i < n_cross; ++i) crosses[ids[i]] = true;

  const double W = cfg.image_width, H_img = cfg.image_height;
  std::vector<PedParams> params(cfg.n_pedestrians + 1);
  for (int id = 1; id <= cfg.n_pedestrians; ++id) {
    Rng r = root.derive(100 + id);
    PedParams& pp = params[id];
    pp.body_height = r.uniform(0.20, 0.26) * H_img;
    pp.speed = r.uniform(1.2, 2.2);
    pp.y_lane = r.uniform(0.70, 0.88) * H_img;
    pp.x0 = r.uniform(0.12, 0.88) * W;
    pp.dir = r.uniform() < 0.5 ? -1 : 1;
    pp.crossing = crosses[id];
    if (pp.crossing) {
      pp.onset = 40 + int(r.uniform_int(std::max(1, cfg.frame_count - 60)));
      double travel_frames = std::max(1, cfg.frame_count - pp.onset);
      double max_speed = (pp.y_lane - 0.22 * H_img) / travel_frames;
      pp.cross_speed = std::min(r.uniform(1.0, 1.8), max_speed);
      scene.gt.labels.emplace_back(id, true, pp.onset);
    } else {
      scene.gt.labels.emplace_back(id, false, std::nullopt);
    }
  }

  // Simulate poses frame by frame.
  scene.poses_.assign(cfg.n_pedestrians + 1, {});
  scene.body_height_.assign(cfg.n_pedestrians + 1, 0);
  scene.shirt_.assign(cfg.n_pedestrians + 1, Rgb{0, 0, 0});
  scene.pants_.assign(cfg.n_pedestrians + 1, Rgb{0, 0, 0});
  const double margin = 0.06 * W;
  for (int id = 1; id <= cfg.n_pedestrians; ++id) {
    const PedParams& pp = params[id];
    scene.body_height_[id] = pp.body_height;
    double hue = std::fmod(0.61803398875 * id, 1.0);
    scene.shirt_[id] = hsv_to_rgb(hue, 0.75, 0.85);
    scene.pants_[id] = hsv_to_rgb(std::fmod(hue + 0.45, 1.0), 0.55, 0.40);

    double x = pp.x0, y = pp.y_lane;
    int dir = pp.dir;
    double walked = root.derive(200 + id).uniform(0.0, 36.0);  // phase offset
    auto& track = scene.poses_[id];
    track.resize(cfg.frame_count);
    for (int f = 0; f < cfg.frame_count; ++f) {
      PedPose pose;
      bool turned = pp.crossing && f >= pp.onset;
      if (turned) {
        y -= pp.cross_speed;
        walked += pp.cross_speed;
      } else {
        x += dir * pp.speed;
        if (x < margin) { x = margin; dir = 1; }
        if (x > W - margin) { x = W - margin; dir = -1; }
        walked += pp.speed;
      }
      pose.cx = x;
      pose.cy = y;
      pose.dir = dir;
      pose.phase = walked * (2.0 * 3.14159265358979323846 / 36.0);
      if (pp.crossing) {
        double ramp = (f - (pp.onset - 12)) / 12.0;
        pose.orient = std::clamp(ramp, 0.0, 1.0);
      }
      track[f] = pose;

      FramePedestrian fp;
      fp.pedestrian_id = id;
      auto pts = gait_keypoints(pose, pp.body_height);
      std::vector<Keypoint> v(pts.begin(), pts.end());
      fp.skeleton = Skeleton17::from_points(v);
      fp.bbox = bbox_of_keypoints(pts, pp.body_height);
      scene.gt.frames[f].push_back(std::move(fp));
    }
  }

  // Detections: GT boxes + uniform noise, independent dropout.
  Rng det_rng = root.derive(7777);
  for (int f = 0; f < cfg.frame_count; ++f) {
    for (const auto& fp : scene.gt.frames[f]) {
      double drop = det_rng.uniform();
      double nx = det_rng.uniform(-cfg.noise_px, cfg.noise_px);
      double ny = det_rng.uniform(-cfg.noise_px, cfg.noise_px);
      double nw = det_rng.uniform(-cfg.noise_px, cfg.noise_px);
      double nh = det_rng.uniform(-cfg.noise_px, cfg.noise_px);
      double conf = 0.6 + 0.4 * det_rng.uniform();
      if (drop < cfg.detection_dropout) continue;
      BBox b(fp.bbox.x + nx, fp.bbox.y + ny, std::max(4.0, fp.bbox.w + nw),
             std::max(4.0, fp.bbox.h + nh));
      scene.detections.emplace_back(f, b, conf, 0);
    }
  }
  return scene;
}

Image SynthScene::render_frame(int frame) const {
  if (frame < 0 || frame >= cfg.frame_count)
    throw InvalidArgument("frame out of range");
  Image img(cfg.image_width, cfg.image_height);
  int curb = int(0.52 * cfg.image_height);
  fill_rect(img, 0, 0, cfg.image_width - 1, curb - 1, {72, 72, 78});
  fill_rect(img, 0, curb, cfg.image_width - 1, cfg.image_height - 1,
            {168, 168, 160});
  fill_rect(img, 0, curb - 3, cfg.image_width - 1, curb - 1, {120, 120, 118});
  int lane_y = int(0.26 * cfg.image_height);
  for (int x = 0; x < cfg.image_width; x += 40)
    fill_rect(img, x, lane_y, std::min(x + 18, cfg.image_width - 1), lane_y + 2,
              {225, 225, 225});

  for (int id = 1; id <= cfg.n_pedestrians; ++id) {
    const PedPose& p = poses_[id][frame];
    double H = body_height_[id];
    auto pts = gait_keypoints(p, H);
    Rgb shirt = shirt_[id], pants = pants_[id];
    Rgb skin = {205, 168, 138};
    int limb = std::max(2, int(H * 0.07));

    auto seg = [&](int a, int b, Rgb c, int t) {
      draw_line(img, pts[a].x, pts[a].y, pts[b].x, pts[b].y, c, t);
    };
    // legs
    seg(kLeftHip, kLeftKnee, pants, limb);
    seg(kLeftKnee, kLeftAnkle, pants, limb);
    seg(kRightHip, kRightKnee, pants, limb);
    seg(kRightKnee, kRightAnkle, pants, limb);
    // torso
    double tx = (pts[kLeftShoulder].x + pts[kRightShoulder].x +
                 pts[kLeftHip].x + pts[kRightHip].x) / 4.0;
    double ty = (pts[kLeftShoulder].y + pts[kLeftHip].y) / 2.0;
    double half_w = std::max(
        {std::fabs(pts[kRightShoulder].x - pts[kLeftShoulder].x) / 2,
         std::fabs(pts[kRightHip].x - pts[kLeftHip].x) / 2, 0.05 * H});
    fill_ellipse(img, tx, ty, half_w + 0.035 * H,
                 (pts[kLeftHip].y - pts[kLeftShoulder].y) / 2 + 0.05 * H, shirt);
    // arms
    seg(kLeftShoulder, kLeftElbow, shirt, std::max(1, limb - 1));
    seg(kLeftElbow, kLeftWrist, skin, std::max(1, limb - 1));
    seg(kRightShoulder, kRightElbow, shirt, std::max(1, limb - 1));
    seg(kRightElbow, kRightWrist, skin, std::max(1, limb - 1));
    // head
    fill_circle(img, (pts[kLeftEar].x + pts[kRightEar].x) / 2 +
                         (1.0 - p.orient) * p.dir * 0.01 * H,
                pts[kNose].y, 0.085 * H, skin);
  }
  return img;
}

Image SynthScene::crop(int frame, const BBox& box, int out_w, int out_h) const {
  Image full = render_frame(frame);
  return crop_resize(full, box, out_w, out_h);
}

}  // namespace fussi
