#include "gatesynth/controls.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gatesynth {

namespace {

void check_template(double horizon, int segments, double u_max, double n_max) {
  if (segments < 1)
    throw std::invalid_argument("K must be >= 1, got " + std::to_string(segments));
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("T must be finite and >= 0, got " +
                                std::to_string(horizon));
  if (!(u_max > 0.0))
    throw std::invalid_argument("u_max must be > 0, got " + std::to_string(u_max));
  if (!(n_max > 0.0))
    throw std::invalid_argument("n_max must be > 0, got " + std::to_string(n_max));
}

// Clips x onto [lo, hi] when within slack of the box; throws otherwise.
double clip_or_reject(double x, double lo, double hi, double slack,
                      const char* name, Eigen::Index i) {
  if (!std::isfinite(x))
    throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) +
                                "] is not finite");
  if (x < lo) {
    if (lo - x <= slack) return lo;
    throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) + "] = " +
                                std::to_string(x) + " below bound " + std::to_string(lo));
  }
  if (x > hi) {
    if (x - hi <= slack) return hi;
    throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) + "] = " +
                                std::to_string(x) + " above bound " + std::to_string(hi));
  }
  return x;
}

}  // namespace

ControlSchedule zero_schedule(const ScheduleTemplate& tmpl) {
  check_template(tmpl.horizon, tmpl.segments, tmpl.u_max, tmpl.n_max);
  ControlSchedule s;
  s.horizon = tmpl.horizon;
  s.u = Eigen::VectorXd::Zero(tmpl.segments);
  s.n1 = Eigen::VectorXd::Zero(tmpl.segments);
  s.n2 = Eigen::VectorXd::Zero(tmpl.segments);
  s.u_max = tmpl.u_max;
  s.n_max = tmpl.n_max;
  return s;
}

void validate_schedule(const ControlSchedule& s) {
  check_template(s.horizon, static_cast<int>(s.segments()), s.u_max, s.n_max);
  if (s.n1.size() != s.segments() || s.n2.size() != s.segments())
    throw std::invalid_argument("control arrays have mismatched lengths");
  for (Eigen::Index i = 0; i < s.segments(); ++i) {
    clip_or_reject(s.u[i], -s.u_max, s.u_max, 0.0, "u", i);
    clip_or_reject(s.n1[i], 0.0, s.n_max, 0.0, "n1", i);
    clip_or_reject(s.n2[i], 0.0, s.n_max, 0.0, "n2", i);
  }
}

Eigen::VectorXd encode(const ControlSchedule& s) {
  validate_schedule(s);
  const Eigen::Index k = s.segments();
  Eigen::VectorXd p(3 * k);
  p.segment(0, k) = s.u;
  p.segment(k, k) = s.n1;
  p.segment(2 * k, k) = s.n2;
  return p;
}

ControlSchedule decode(const Eigen::VectorXd& p, const ScheduleTemplate& tmpl,
                       double boundary_slack) {
  check_template(tmpl.horizon, tmpl.segments, tmpl.u_max, tmpl.n_max);
  const Eigen::Index k = tmpl.segments;
  if (p.size() != 3 * k)
    throw std::invalid_argument("parameter vector has length " +
                                std::to_string(p.size()) + ", expected " +
                                std::to_string(3 * k));
  ControlSchedule s;
  s.horizon = tmpl.horizon;
  s.u_max = tmpl.u_max;
  s.n_max = tmpl.n_max;
  s.u.resize(k);
  s.n1.resize(k);
  s.n2.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    s.u[i] = clip_or_reject(p[i], -tmpl.u_max, tmpl.u_max, boundary_slack, "u", i);
    s.n1[i] = clip_or_reject(p[k + i], 0.0, tmpl.n_max, boundary_slack, "n1", i);
    s.n2[i] = clip_or_reject(p[2 * k + i], 0.0, tmpl.n_max, boundary_slack, "n2", i);
  }
  return s;
}

}  // namespace gatesynth
