#pragma once

#include <Eigen/Dense>

namespace gatesynth {

/// Piecewise-constant controls on [0, T]: K equal segments, one value of the
/// coherent control u and of the two incoherent controls n1, n2 per segment.
/// Segments are left-closed; the last value continues at t = T.
struct ControlSchedule {
  double horizon = 20.0;
  Eigen::VectorXd u;
  Eigen::VectorXd n1;
  Eigen::VectorXd n2;
  double u_max = 20.0;
  double n_max = 20.0;

  Eigen::Index segments() const { return u.size(); }
};

/// Grid and box parameters shared by a family of schedules.
struct ScheduleTemplate {
  double horizon = 20.0;
  int segments = 200;
  double u_max = 20.0;
  double n_max = 20.0;
};

ControlSchedule zero_schedule(const ScheduleTemplate& tmpl);

/// Throws std::invalid_argument on K < 1, mismatched lengths, T < 0,
/// non-positive bounds, or any value outside the box.
void validate_schedule(const ControlSchedule& s);

/// Parameter vector layout [u^1..u^K, n1^1..n1^K, n2^1..n2^K].
Eigen::VectorXd encode(const ControlSchedule& s);

/// Inverse of encode. Values within `boundary_slack` of the box are clipped
/// onto it before validation; anything further out is rejected.
ControlSchedule decode(const Eigen::VectorXd& p, const ScheduleTemplate& tmpl,
                       double boundary_slack = 0.0);

}  // namespace gatesynth
