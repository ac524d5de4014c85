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

// Planar articulated rigid-body model of an 11-DoF quadruped: floating base
// (x, z, pitch) plus hip and knee joints on four legs, penalty ground contact
// and semi-implicit Euler stepping.
//
// Conventions. World frame is (x forward, z up). Positive angles rotate
// counter-clockwise in the x-z plane, so positive pitch lifts the nose and a
// positive hip angle swings the leg forward. A leg segment with absolute
// angle a points along (sin a, -cos a). The thigh angle is pitch + hip, the
// shank angle is pitch + hip - knee, i.e. the knee angle is the interior
// flexion measured from the straight leg.

#ifndef QUADLOCO_DYNAMICS_H_
#define QUADLOCO_DYNAMICS_H_

#include <array>
#include <functional>
#include <numbers>
#include <optional>

#include <Eigen/Core>

namespace quadloco {

inline constexpr int kNumDof = 11;
inline constexpr int kNumLegs = 4;
inline constexpr int kNumJoints = 8;

// Feet, then knees, then the front and back body ends.
inline constexpr int kNumContactPoints = 10;

enum Leg : int { kFL = 0, kFR = 1, kBL = 2, kBR = 3 };

using GenVector = Eigen::Matrix<double, kNumDof, 1>;
using GenMatrix = Eigen::Matrix<double, kNumDof, kNumDof>;
using JointVector = Eigen::Matrix<double, kNumJoints, 1>;
using PointJacobian = Eigen::Matrix<double, 2, kNumDof>;

// Generalized coordinate layout.
inline constexpr int kBaseX = 0;
inline constexpr int kBaseZ = 1;
inline constexpr int kPitch = 2;
constexpr int HipIndex(int leg) { return 3 + 2 * leg; }
constexpr int KneeIndex(int leg) { return 4 + 2 * leg; }

constexpr double DegToRad(double deg) { return deg * std::numbers::pi / 180.0; }

// Unit direction of a segment with absolute angle `angle` from the downward
// vertical.
inline Eigen::Vector2d SegmentDirection(double angle) {
  return {std::sin(angle), -std::cos(angle)};
}

struct RobotModel {
  double body_length = 0.6;
  double body_radius = 0.05;
  double thigh_length = 0.283;
  double thigh_radius = 0.03;
  double shank_length = 0.283;
  double shank_radius = 0.03;
  double total_mass = 14.0;

  std::array<double, 2> hip_range{DegToRad(-80.0), DegToRad(80.0)};
  std::array<double, 2> knee_range{DegToRad(10.0), DegToRad(170.0)};
  double max_torque = 100.0;
  double gravity = 9.81;

  double ground_stiffness = 1e5;    // N/m
  double ground_damping = 1e3;      // N s/m, compression only
  double friction_coeff = 0.8;
  double tangential_stiffness = 5e4;  // N/m, anchor spring
  double tangential_damping = 100.0;  // N s/m

  double joint_limit_stiffness = 1e3;  // N m/rad beyond the range
  double joint_limit_damping = 10.0;   // N m s/rad beyond the range

  // Hip positions in the body frame, indexed by Leg.
  std::array<Eigen::Vector2d, kNumLegs> hip_offsets{
      Eigen::Vector2d(0.3, 0.0), Eigen::Vector2d(0.3, 0.0),
      Eigen::Vector2d(-0.3, 0.0), Eigen::Vector2d(-0.3, 0.0)};

  // Segment masses are proportional to cylinder volume and sum to
  // total_mass.
  double body_mass() const;
  double thigh_mass() const;
  double shank_mass() const;
  // Body, then thigh/shank for FL, FR, BL, BR.
  std::array<double, 1 + 2 * kNumLegs> segment_masses() const;

  // Rotational inertia of each segment about its own centre of mass.
  double body_inertia() const;
  double thigh_inertia() const;
  double shank_inertia() const;

  double leg_length() const { return thigh_length + shank_length; }
  double weight() const { return total_mass * gravity; }

  // Throws ConfigError if a length, radius or mass is non-positive.
  void Validate() const;
};

struct SimConfig {
  double control_dt = 0.01;
  int substeps = 10;
  double ground_height = 0.0;

  double physics_dt() const { return control_dt / substeps; }
  void Validate() const;
};

struct SimState {
  GenVector q = GenVector::Zero();
  GenVector qdot = GenVector::Zero();
  double time = 0.0;
  // Ground anchor x for the tangential spring of each contact point.
  std::array<std::optional<double>, kNumContactPoints> anchors{};
  std::array<bool, kNumLegs> contact_flags{};
};

// World-frame positions of the kinematic tree at one configuration.
struct Frames {
  Eigen::Vector2d base;
  double pitch = 0.0;
  std::array<Eigen::Vector2d, kNumLegs> hip;
  std::array<Eigen::Vector2d, kNumLegs> knee;
  std::array<Eigen::Vector2d, kNumLegs> foot;
  std::array<double, kNumLegs> thigh_angle{};
  std::array<double, kNumLegs> shank_angle{};
};

Frames ComputeFrames(const RobotModel& model, const GenVector& q);

// World position of contact point `index` (feet 0-3, knees 4-7, body front
// end 8, back end 9).
Eigen::Vector2d ContactPointPosition(const Frames& frames, int index);
PointJacobian ContactPointJacobian(const RobotModel& model,
                                   const GenVector& q, int index);

// Joint-space inertia M(q).
GenMatrix MassMatrix(const RobotModel& model, const GenVector& q);

// Coriolis, centrifugal and gravity forces h with M qddot = tau - h.
GenVector BiasForces(const RobotModel& model, const GenVector& q,
                     const GenVector& qdot);

struct PointContact {
  Eigen::Vector2d force = Eigen::Vector2d::Zero();
  std::optional<double> anchor;
};

// Penalty contact for a single point against a flat ground.
PointContact ComputePointContact(const RobotModel& model, double ground_height,
                                 const Eigen::Vector2d& position,
                                 const Eigen::Vector2d& velocity,
                                 std::optional<double> anchor);

struct ContactResult {
  std::array<Eigen::Vector2d, kNumContactPoints> forces;
  std::array<std::optional<double>, kNumContactPoints> anchors;
};

ContactResult ContactForces(const RobotModel& model, double ground_height,
                            const SimState& state);

// Clamps actuator torques to +-max_torque.
JointVector ClampTorques(const RobotModel& model, const JointVector& torques);

// Soft joint-limit torques, non-zero only outside the joint ranges.
JointVector JointLimitTorques(const RobotModel& model, const GenVector& q,
                              const GenVector& qdot);

// Torque source evaluated once per physics substep.
using TorqueFunction = std::function<JointVector(const SimState&)>;

// Advances the state by one control step using config.substeps
// semi-implicit Euler substeps. Torques are clamped internally. Throws
// NonFiniteState if the integration produces NaN or Inf.
SimState Step(const RobotModel& model, const SimConfig& config,
              const SimState& state, const JointVector& joint_torques,
              const Eigen::Vector2d& external_force);
SimState Step(const RobotModel& model, const SimConfig& config,
              const SimState& state, const TorqueFunction& torque_function,
              const Eigen::Vector2d& external_force);

// Per-leg touchdown flags: foot height <= ground height.
std::array<bool, kNumLegs> FootContactFlags(const RobotModel& model,
                                            const SimConfig& config,
                                            const GenVector& q);

double KineticEnergy(const RobotModel& model, const SimState& state);
double PotentialEnergy(const RobotModel& model, const GenVector& q);

// Standing configuration with the base at `base_height` and every foot
// directly below its hip on the ground plane.
SimState NominalStance(const RobotModel& model, const SimConfig& config,
                       double base_height);

}  // namespace quadloco

#endif  // QUADLOCO_DYNAMICS_H_
