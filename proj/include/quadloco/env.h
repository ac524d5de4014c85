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

// Velocity-tracking environment: reward, early stop, episode lifecycle and
// observation assembly around the simulator and the three controllers.

#ifndef QUADLOCO_ENV_H_
#define QUADLOCO_ENV_H_

#include <array>
#include <fstream>
#include <string>

#include <Eigen/Core>

#include "quadloco/controllers.h"
#include "quadloco/dynamics.h"
#include "quadloco/nn.h"

namespace quadloco {

enum class PolicyKind { kDirect, kStructured, kHighlyStructured };

const char* PolicyKindName(PolicyKind kind);
// Accepts "direct", "structured", "highly" and "highly_structured".
PolicyKind ParsePolicyKind(const std::string& name);
int ActionSize(PolicyKind kind);

struct EpisodeConfig {
  int max_steps = 1000;
  double v_d_min = 1.0;
  double v_d_max = 5.0;
  bool early_stop_enabled = true;
  double pitch_limit = 1.0;
  double height_limit = 0.3;
  double initial_height = 0.45;
  double joint_perturbation = 0.02;
};

// Settings of the structured and highly structured controllers.
struct ControllerConfig {
  ActionBounds bounds;
  TrajectoryParams nominal = TrajectoryParams::Nominal(
      0.25, 0.25, 0.10, 0.02, Eigen::Vector2d(0.0, -0.45), 0.10);
  double swing_height = 0.10;
  bool stride_from_velocity = true;
  double max_l_span = 0.25;
  TrotController::Options trot;

  ScalingBounds scaling_bounds() const {
    return {bounds.k_T, bounds.k_C, bounds.k_delta};
  }
  // Fully resolved trot plan for a highly structured action at v_d.
  TrajectoryParams Plan(const ScalingParams& scaling, double v_d) const;
};

struct StepInfo {
  double com_vx = 0.0;
  // Substep average of sum_j |tau_j * omega_j|.
  double mechanical_power = 0.0;
  // Substep average of the applied (clamped) joint torques.
  JointVector torques = JointVector::Zero();
  std::array<bool, kNumLegs> contact_flags{};
  bool non_finite = false;
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  StepInfo info;
};

// 1 - |v_t - v_d| / v_d. Throws InvalidDesiredVelocity if v_d <= 0.
double Reward(double v_t, double v_d);

// Failure test, independent of whether early stop is enabled.
bool IsFailure(const SimState& state, const EpisodeConfig& cfg);
bool CheckEarlyStop(const SimState& state, const EpisodeConfig& cfg);

class LocomotionEnv {
 public:
  LocomotionEnv(const RobotModel& model, const SimConfig& sim,
                const EpisodeConfig& episode,
                const ControllerConfig& controller, PolicyKind kind);

  // Samples v_d ~ U(v_d_min, v_d_max) and restarts from a perturbed stance.
  Observation Reset(Rng& rng);
  Observation Reset(Rng& rng, double v_d);

  // Applies a unit action; see ActionSize(kind) for its length. The highly
  // structured action is re-planned only when it changes.
  StepResult Step(const Eigen::VectorXd& unit_action,
                  const Eigen::Vector2d& external_force = Eigen::Vector2d::Zero());

  // Changes v_d mid-episode (the disturbance script uses this).
  void SetDesiredVelocity(double v_d);

  Observation observation() const;
  const SimState& state() const { return state_; }
  double desired_velocity() const { return v_d_; }
  int steps() const { return steps_; }
  PolicyKind kind() const { return kind_; }
  int action_size() const { return ActionSize(kind_); }
  const TrotController& trot() const { return trot_; }
  const RobotModel& model() const { return model_; }
  const SimConfig& sim_config() const { return sim_; }
  const EpisodeConfig& episode_config() const { return episode_; }
  int non_finite_events() const { return non_finite_events_; }

 private:
  TorqueFunction Controller(const Eigen::VectorXd& unit_action);

  RobotModel model_;
  SimConfig sim_;
  EpisodeConfig episode_;
  ControllerConfig controller_;
  PolicyKind kind_;

  SimState state_;
  double v_d_ = 1.0;
  int steps_ = 0;
  double min_reward_ = 0.0;
  int non_finite_events_ = 0;

  TrotController trot_;
  Eigen::VectorXd planned_action_;
  double planned_v_d_ = -1.0;
};

// Streams per-step episode traces. Columns:
//   t, q0..q10, qd0..qd10, tau0..tau7, reward, c_fl, c_fr, c_bl, c_br
class TraceWriter {
 public:
  explicit TraceWriter(const std::string& path);
  void Write(const SimState& state, const StepResult& result);
  static std::string Header();

 private:
  std::ofstream out_;
};

}  // namespace quadloco

#endif  // QUADLOCO_ENV_H_
