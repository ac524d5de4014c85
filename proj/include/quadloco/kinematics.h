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

// Leg kinematics in the hip-attached body frame: forward kinematics, the
// Cartesian/polar task-space maps and the polar Jacobian. The polar angle
// theta is measured from the downward body vertical, positive forward.

#ifndef QUADLOCO_KINEMATICS_H_
#define QUADLOCO_KINEMATICS_H_

#include <Eigen/Core>

#include "quadloco/dynamics.h"

namespace quadloco {

struct PolarFootState {
  double r = 0.0;
  double theta = 0.0;
  double rdot = 0.0;
  double thetadot = 0.0;
};

// Foot position and velocity relative to the hip, body frame.
struct FootTarget {
  double x = 0.0;
  double y = 0.0;
  double xdot = 0.0;
  double ydot = 0.0;
};

Eigen::Vector2d FootFk(const RobotModel& model, double hip_angle,
                       double knee_angle);

// Throws DegenerateRadius when the point is within 1e-6 m of the hip.
PolarFootState CartToPolar(const FootTarget& target);
FootTarget PolarToCart(const PolarFootState& polar);

// d(r, theta) / d(hip, knee). Throws SingularConfiguration for a straight
// or fully folded knee.
Eigen::Matrix2d PolarJacobian(const RobotModel& model, double hip_angle,
                              double knee_angle);

// Same map without the singularity check; finite for every knee angle.
Eigen::Matrix2d PolarJacobianUnchecked(const RobotModel& model,
                                       double knee_angle);

// Actual polar state of a leg from its joint angles and rates.
PolarFootState LegPolarState(const RobotModel& model, double hip_angle,
                             double knee_angle, double hip_rate,
                             double knee_rate);

}  // namespace quadloco

#endif  // QUADLOCO_KINEMATICS_H_
