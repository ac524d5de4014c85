// Copyright 2026 The quadloco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Three locomotion policy structures:
//
//  * direct: observation -> joint torques;
//  * structured: observation -> per-leg foot targets and shared polar
//    impedance gains;
//  * highly structured: desired velocity -> scalings of a nominal trot
//    trajectory (gait modulator + Bezier/sinusoid leg planner) and gains.
//
// Every actor emits a unit action in [-1, 1]^n which is mapped affinely
// into the configured bounds.

#ifndef QUADLOCO_CONTROLLERS_H_
#define QUADLOCO_CONTROLLERS_H_

#include <array>

#include <Eigen/Core>

#include "quadloco/dynamics.h"
#include "quadloco/kinematics.h"
#include "quadloco/nn.h"

namespace quadloco {

inline constexpr int kObservationSize = 26;
inline constexpr int kDirectActionSize = 8;
inline constexpr int kStructuredActionSize = 20;
inline constexpr int kNumControlPoints = 12;
inline constexpr int kHighlyStructuredActionSize = 1 + kNumControlPoints + 1 + 4;

struct Observation {
  double v_d = 0.0;
  double com_height = 0.0;
  double pitch = 0.0;
  double com_vx = 0.0;
  double com_vz = 0.0;
  double pitch_rate = 0.0;
  JointVector joint_angles = JointVector::Zero();
  JointVector joint_rates = JointVector::Zero();
  std::array<bool, kNumLegs> contact_flags{};

  // Length-26 vector in field order, booleans as 0/1.
  Eigen::VectorXd Flatten() const;
  static Observation FromState(const SimState& state, double v_d);
};

struct ImpedanceGains {
  double k_r = 0.0;
  double b_r = 0.0;
  double k_theta = 0.0;
  double b_theta = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  double half() const { return 0.5 * (hi - lo); }
  // Maps u in [-1, 1] onto [lo, hi]; u is clamped first.
  double FromUnit(double u) const;
  double ToUnit(double value) const;
  bool Contains(double value, double tol = 1e-12) const {
    return value >= lo - tol && value <= hi + tol;
  }
};

struct ActionBounds {
  Interval foot_x{-0.25, 0.25};
  Interval foot_y{-0.55, -0.25};
  Interval foot_velocity{-3.0, 3.0};
  Interval k_r{500.0, 10000.0};
  Interval b_r{10.0, 300.0};
  Interval k_theta{20.0, 400.0};
  Interval b_theta{0.5, 20.0};
  Interval k_T{0.5, 1.5};
  Interval k_C{0.5, 1.5};
  Interval k_delta{0.0, 2.0};
};

struct TrajectoryParams {
  double T_st = 0.25;
  double T_sw = 0.25;
  std::array<Eigen::Vector2d, kNumControlPoints> C;
  double l_span = 0.10;
  double delta = 0.02;
  Eigen::Vector2d P_0{0.0, -0.45};

  double period() const { return T_st + T_sw; }
  double stance_fraction() const { return T_st / period(); }
  Eigen::Vector2d stance_start() const { return P_0 + Eigen::Vector2d(l_span, 0.0); }
  Eigen::Vector2d stance_end() const { return P_0 - Eigen::Vector2d(l_span, 0.0); }

  // Nominal trot trajectory: swing arc of height `swing_height` from stance
  // exit to stance entry.
  static TrajectoryParams Nominal(double T_st, double T_sw, double l_span,
                                  double delta, const Eigen::Vector2d& P_0,
                                  double swing_height);
};

struct ScalingParams {
  double k_T = 1.0;
  std::array<double, kNumControlPoints> k_C{};
  double k_delta = 1.0;
  ImpedanceGains gains;

  // [k_T, k_C x12, k_delta, k_r, b_r, k_theta, b_theta].
  Eigen::VectorXd Flatten() const;
  static ScalingParams Identity(const ImpedanceGains& gains);
};

enum class LegMode { kStance, kSwing };

struct GaitPhase {
  // Phase of the reference leg (FL) over one cycle, in [0, 1).
  double reference = 0.0;
  std::array<double, kNumLegs> phi{0.0, 0.5, 0.5, 0.0};
  std::array<LegMode, kNumLegs> mode{LegMode::kStance, LegMode::kSwing,
                                     LegMode::kSwing, LegMode::kStance};
  double time = 0.0;
  double touchdown_time = 0.0;

  // Reference leg at phase 0 (stance start) at time `t`.
  static GaitPhase Start(double t, const TrajectoryParams& params);
};

// ---- direct policy ----

// Torques = max_torque * unit action.
JointVector DirectTorques(const Eigen::VectorXd& unit_action, double max_torque);
JointVector DirectPolicy(const Mlp& actor, const Observation& obs,
                         double max_torque);

// ---- structured policy ----

struct StructuredCommand {
  std::array<FootTarget, kNumLegs> targets;
  ImpedanceGains gains;
};

// Action layout: [x_des x4, y_des x4, xdot_des x4, ydot_des x4, k_r, b_r,
// k_theta, b_theta].
StructuredCommand MapStructuredAction(const Eigen::VectorXd& unit_action,
                                      const ActionBounds& bounds);
StructuredCommand StructuredPolicy(const Mlp& actor, const Observation& obs,
                                   const ActionBounds& bounds);

// Per leg, tau = J^T [k_r e_r + b_r e_rdot, k_theta e_theta + b_theta
// e_thetadot], then clamped to +-max_torque.
JointVector ImpedanceTorques(const ImpedanceGains& gains,
                             const std::array<PolarFootState, kNumLegs>& desired,
                             const std::array<PolarFootState, kNumLegs>& actual,
                             const std::array<Eigen::Matrix2d, kNumLegs>& jacobians,
                             double max_torque);

// Actual polar states and Jacobians read from a simulation state.
std::array<PolarFootState, kNumLegs> ActualPolarStates(const RobotModel& model,
                                                      const SimState& state);
std::array<Eigen::Matrix2d, kNumLegs> LegJacobians(const RobotModel& model,
                                                   const SimState& state);

// Impedance torques tracking Cartesian foot targets.
JointVector TrackFootTargets(const RobotModel& model, const SimState& state,
                             const std::array<FootTarget, kNumLegs>& targets,
                             const ImpedanceGains& gains);

// ---- highly structured policy ----

// Advances all legs by (t - phase.time) / period. A reference-leg touchdown
// resets FL and BR to phase 0 and FR, BL to 0.5.
GaitPhase GaitModulator(const GaitPhase& phase, double t,
                        const TrajectoryParams& params, bool fl_touchdown);

// Foot target at local progress u in [0, 1] of the given mode.
FootTarget LegTrajectory(const TrajectoryParams& params, LegMode mode,
                         double u);
// Foot target at cycle phase phi in [0, 1).
FootTarget LegTarget(const TrajectoryParams& params, double phi);

struct ScalingBounds {
  Interval k_T;
  Interval k_C;
  Interval k_delta;
};

// Throws BoundsViolation if a scaling lies outside `bounds`.
TrajectoryParams ApplyScaling(const TrajectoryParams& nominal,
                              const ScalingParams& scaling,
                              const ScalingBounds& bounds);

// Sets the half stroke so the stance sweep speed 2 l_span / T_st matches
// `v_d` (capped at `max_l_span`); swing control points stretch
// horizontally about P_0 by the same ratio.
TrajectoryParams MatchStride(const TrajectoryParams& params, double v_d,
                             double max_l_span);

ScalingParams MapHighlyStructuredAction(const Eigen::VectorXd& unit_action,
                                        const ActionBounds& bounds);
ScalingParams HighlyStructuredPolicy(const Mlp& actor, double v_d,
                                     const ActionBounds& bounds);

// Trot controller: gait modulator + leg planner + polar impedance. Holds
// the only mutable controller state (the gait phase).
class TrotController {
 public:
  struct Options {
    // A FL contact rising edge only counts as touchdown once this fraction
    // of the swing phase has elapsed.
    double touchdown_min_swing_fraction = 0.5;
  };

  TrotController() = default;
  TrotController(const TrajectoryParams& params, const ImpedanceGains& gains,
                 Options options);

  void Reset(double t, bool fl_contact);
  // Called once per control step after the dynamics advanced.
  void Update(double t, bool fl_contact);
  // Replaces the trajectory while keeping the phase.
  void SetPlan(const TrajectoryParams& params, const ImpedanceGains& gains);

  std::array<FootTarget, kNumLegs> FootTargets(double t) const;
  JointVector Torques(const RobotModel& model, const SimState& state) const;

  const GaitPhase& phase() const { return phase_; }
  const TrajectoryParams& params() const { return params_; }
  const ImpedanceGains& gains() const { return gains_; }

 private:
  TrajectoryParams params_;
  ImpedanceGains gains_;
  Options options_;
  GaitPhase phase_;
  bool last_fl_contact_ = false;
};

}  // namespace quadloco

#endif  // QUADLOCO_CONTROLLERS_H_
