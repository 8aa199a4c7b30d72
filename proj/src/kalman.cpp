#include "fussi/kalman.hpp"

#include "fussi/errors.hpp"

namespace fussi::kalman {

namespace {

Eigen::Matrix<double, 7, 7> transition() {
  Eigen::Matrix<double, 7, 7> f = Eigen::Matrix<double, 7, 7>::Identity();
  f(0, 4) = 1;
  f(1, 5) = 1;
  f(2, 6) = 1;
  return f;
}

Eigen::Matrix<double, 4, 7> observation() {
  Eigen::Matrix<double, 4, 7> h = Eigen::Matrix<double, 4, 7>::Zero();
  h(0, 0) = 1;
  h(1, 1) = 1;
  h(2, 2) = 1;
  h(3, 3) = 1;
  return h;
}

Cov7 process_noise() {
  Cov7 q = Cov7::Identity();
  q(4, 4) = 0.01;
  q(5, 5) = 0.01;
  q(6, 6) = 1e-4;
  return q;
}

Eigen::Matrix4d measurement_noise() {
  Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
  r(2, 2) = 10;
  r(3, 3) = 10;
  return r;
}

void check_health(const Cov7& p) {
  if (symmetry_defect(p) > 1e-9 || min_eigenvalue(p) < -1e-9)
    throw NumericalBlowup("track covariance lost positive semi-definiteness");
}

}  // namespace

double symmetry_defect(const Cov7& p) {
  return (p - p.transpose()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Cov7& p) {
  Eigen::SelfAdjointEigenSolver<Cov7> es(p);
  return es.eigenvalues().minCoeff();
}

TrackState init_track(int track_id, const BBox& box) {
  TrackState t;
  t.track_id = track_id;
  CenterScale m = bbox_center_scale(box);
  t.mean << m.cx, m.cy, m.s, m.r, 0, 0, 0;
  Cov7 p = Cov7::Identity() * 10.0;
  p(4, 4) = p(5, 5) = p(6, 6) = 1e4;
  t.cov = p;
  t.hits = 1;
  t.hit_streak = 1;
  return t;
}

void predict(TrackState& t) {
  static const auto f = transition();
  static const auto q = process_noise();
  // Guard against a negative predicted area driving w = sqrt(s*r) complex.
  if (t.mean(2) + t.mean(6) <= 0) t.mean(6) = 0;
  t.mean = f * t.mean;
  t.cov = f * t.cov * f.transpose() + q;
  t.cov = ((t.cov + t.cov.transpose()) / 2).eval();
  t.age += 1;
  t.time_since_update += 1;
  if (t.time_since_update > 1) t.hit_streak = 0;
  check_health(t.cov);
}

void update(TrackState& t, const BBox& z) {
  static const auto h = observation();
  static const auto r = measurement_noise();
  CenterScale m = bbox_center_scale(z);
  Meas4 zvec;
  zvec << m.cx, m.cy, m.s, m.r;

  Meas4 innovation = zvec - h * t.mean;
  Eigen::Matrix4d s = h * t.cov * h.transpose() + r;
  Eigen::Matrix<double, 7, 4> k = t.cov * h.transpose() * s.inverse();
  t.mean += k * innovation;
  // Joseph form keeps the posterior symmetric PSD.
  Cov7 ikh = Cov7::Identity() - k * h;
  t.cov = ikh * t.cov * ikh.transpose() + k * r * k.transpose();
  t.cov = ((t.cov + t.cov.transpose()) / 2).eval();
  t.hits += 1;
  t.hit_streak += 1;
  t.time_since_update = 0;
  check_health(t.cov);
}

BBox state_box(const TrackState& t) {
  CenterScale m{t.mean(0), t.mean(1), std::max(t.mean(2), 1e-6),
                std::max(t.mean(3), 1e-6)};
  return bbox_from_center_scale(m);
}

Meas4 predicted_measurement(const TrackState& t) {
  return t.mean.head<4>();
}

}  // namespace fussi::kalman
