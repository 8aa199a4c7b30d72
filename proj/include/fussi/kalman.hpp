#pragma once

#include <Eigen/Dense>

#include "fussi/types.hpp"

namespace fussi {

// Constant-velocity Kalman filter over [cx, cy, s, r, v_cx, v_cy, v_s].
// The aspect ratio r is modeled as static; measurements are center/scale
// mapped boxes [cx, cy, s, r]. Noise constants follow the reference SORT
// configuration.
namespace kalman {

using State7 = Eigen::Matrix<double, 7, 1>;
using Cov7 = Eigen::Matrix<double, 7, 7>;
using Meas4 = Eigen::Matrix<double, 4, 1>;

// Fresh track state at a detection, with the SORT initial covariance
// (high uncertainty on the unobserved velocities).
TrackState init_track(int track_id, const BBox& box);

// In-place prediction step. Throws NumericalBlowup when the covariance
// loses positive semi-definiteness beyond tolerance.
void predict(TrackState& t);

// In-place measurement update with a detection box. Resets
// time_since_update, increments hits.
void update(TrackState& t, const BBox& z);

// Current state as a box (may be invalid mid-blowup; callers guard s > 0).
BBox state_box(const TrackState& t);

// Predicted measurement H * mean.
Meas4 predicted_measurement(const TrackState& t);

// Covariance health check: symmetry defect and min eigenvalue.
double symmetry_defect(const Cov7& p);
double min_eigenvalue(const Cov7& p);

}  // namespace kalman
}  // namespace fussi
