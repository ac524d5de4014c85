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

// Training runs, evaluation, the disturbance test, periodicity analysis and
// metric aggregation.
//
// Run directory layout (one per policy and seed):
//
//   <out>/<policy>/seed_<n>/learning_curve.csv   step,mean_reward,std_reward
//   <out>/<policy>/seed_<n>/best_policy.ckpt
//   <out>/<policy>/seed_<n>/trainer_state.bin
//   <out>/<policy>/seed_<n>/run.json              wall times and counters
//   <out>/<policy>/seed_<n>/config.cfg            resolved configuration
//
// `disturb` and `trace` write disturb_trace.csv, disturb_summary.json,
// orbits.csv and periodicity.json next to the checkpoint.

#ifndef QUADLOCO_EXPERIMENT_H_
#define QUADLOCO_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "quadloco/config.h"
#include "quadloco/controllers.h"
#include "quadloco/dynamics.h"
#include "quadloco/env.h"
#include "quadloco/nn.h"
#include "quadloco/rl.h"

namespace quadloco {

inline constexpr double kRiseThreshold = 700.0;

struct EvalProtocol {
  int eval_interval = 5000;
  int eval_episodes = 10;
  bool noise_free = true;
  // Seeds the fixed list of evaluation velocities and initial perturbations.
  std::uint64_t seed = 20200;
};

struct DisturbanceScript {
  // (time s, v_d m/s), times strictly increasing, first at 0.
  std::vector<std::pair<double, double>> schedule{{0.0, 2.0}, {4.0, 4.0}, {8.0, 3.0}};
  // (onset s, horizontal force N).
  std::vector<std::pair<double, double>> forces{{12.0, 10.0}, {16.0, -10.0}};
  double force_duration = 0.5;
  double total_time = 20.0;
  int seeds = 5;
  // Recovery is judged `recovery_delay` after each force onset on the
  // velocity averaged over the trailing `velocity_window`.
  double recovery_delay = 2.0;
  double recovery_tolerance = 0.2;
  double velocity_window = 0.5;

  double DesiredVelocity(double t) const;
  double Force(double t) const;
  void Validate() const;
};

struct PeriodicityConfig {
  double v_d = 2.0;
  double duration = 10.0;
  double transient = 2.0;
  double threshold = 0.5;
  // Lag search range for policies without an intrinsic period.
  double min_lag = 0.2;
  double max_lag = 1.2;
};

struct ExperimentConfig {
  RobotModel robot;
  SimConfig sim;
  EpisodeConfig episode;
  ControllerConfig controller;
  TrainerConfig td3;
  TrainerConfig one_step = DefaultOneStep();
  EvalProtocol eval;
  DisturbanceScript disturbance;
  PeriodicityConfig periodicity;

  static TrainerConfig DefaultOneStep();

  // Unknown keys throw ConfigError.
  static ExperimentConfig FromKeyValue(const KeyValueConfig& kv);
  static ExperimentConfig Load(const std::string& path);
  static ExperimentConfig Parse(const std::string& text);
  KeyValueConfig ToKeyValue() const;

  const TrainerConfig& trainer(PolicyKind kind) const;
  TrainerConfig& trainer(PolicyKind kind);
  void Validate() const;
};

// Best (or latest) actor of a run with everything needed to replay it.
struct PolicyCheckpoint {
  PolicyKind kind = PolicyKind::kDirect;
  std::int64_t step = 0;
  double mean_reward = 0.0;
  std::string config_text;
  Mlp actor;

  ExperimentConfig config() const { return ExperimentConfig::Parse(config_text); }
};

// "QPOL" | u32 version | u32 kind | i64 step | f64 mean_reward |
// u64 config bytes | config text | actor (QMLP block).
void SaveCheckpoint(const std::string& path, const PolicyCheckpoint& ckpt);
PolicyCheckpoint LoadCheckpoint(const std::string& path);

// Deterministic unit action of an actor for an observation.
Eigen::VectorXd PolicyAction(PolicyKind kind, const Mlp& actor,
                             const Observation& obs);

// Shared by training and evaluation.
LocomotionEnv MakeEnv(const ExperimentConfig& cfg, PolicyKind kind);

struct EpisodeOutcome {
  double v_d = 0.0;
  double cumulative_reward = 0.0;
  int steps = 0;
  bool terminated = false;
};

struct EvalResult {
  std::vector<EpisodeOutcome> episodes;
  double mean = 0.0;
  double std = 0.0;
};

// The fixed evaluation velocities of a protocol.
std::vector<double> EvaluationVelocities(const ExperimentConfig& cfg);

// Noise-free episodes at EvaluationVelocities(). `trace`, when set,
// receives every step of the first episode.
EvalResult Evaluate(const ExperimentConfig& cfg, PolicyKind kind,
                    const Mlp& actor, TraceWriter* trace = nullptr);

struct CurvePoint {
  std::int64_t step = 0;
  double mean_reward = 0.0;
  double std_reward = 0.0;
};

struct TrainResult {
  std::vector<CurvePoint> curve;
  std::vector<double> eval_wall_time_s;
  double best_mean_reward = 0.0;
  std::int64_t best_step = 0;
  std::int64_t episodes = 0;
  // One-step trainer rounds, or TD3 actor updates.
  std::int64_t actor_training_rounds = 0;
  std::int64_t gradient_updates = 0;
  int non_finite_events = 0;
  double wall_time_s = 0.0;
};

// Runs the full loop and writes the run directory `out_dir`. `log` gets a
// line per evaluation when non-null.
TrainResult TrainRun(const ExperimentConfig& cfg, PolicyKind kind,
                     std::uint64_t seed, const std::string& out_dir,
                     std::ostream* log = nullptr);

void WriteLearningCurve(const std::string& path,
                        const std::vector<CurvePoint>& curve);
std::vector<CurvePoint> ReadLearningCurve(const std::string& path);

struct RiseStatistics {
  std::int64_t rise_steps = 0;
  // Wall time at that evaluation; absent when unknown.
  std::optional<double> rise_time_s;
  std::size_t index = 0;
};

// First evaluation whose mean reward exceeds `threshold`. Throws NotReached.
// `wall_times`, when non-empty, runs parallel to `curve`.
RiseStatistics ComputeRiseStatistics(const std::vector<CurvePoint>& curve,
                                     double threshold = kRiseThreshold,
                                     const std::vector<double>& wall_times = {});

// P / (weight * v) with P and v the sample means. Throws ZeroVelocity when
// the mean velocity is <= 1e-3 m/s.
double CostOfTransport(const std::vector<double>& power,
                       const std::vector<double>& velocity, double weight);

struct DisturbanceSample {
  int seed = 0;
  double t = 0.0;
  double v = 0.0;
  double v_d = 0.0;
  double pitch = 0.0;
  double height = 0.0;
  double fx = 0.0;
  double power = 0.0;
};

struct DisturbanceResult {
  std::vector<DisturbanceSample> samples;
  double std_pitch = 0.0;
  double std_height = 0.0;
  std::optional<double> cot;
  // Seeds whose trace met the failure inequality at any sample.
  int tumbles = 0;
  std::vector<int> tumbled_seeds;
  // recovered[s][k]: seed s back within tolerance after force k.
  std::vector<std::vector<bool>> recovered;
  bool all_recovered = false;
  int non_finite_events = 0;
};

using ActionFunction = std::function<Eigen::VectorXd(const Observation&)>;

// Runs the script on `seeds` initial perturbations with early stop off.
DisturbanceResult RunDisturbanceTest(const ExperimentConfig& cfg,
                                     PolicyKind kind,
                                     const ActionFunction& policy);
DisturbanceResult RunDisturbanceTest(const PolicyCheckpoint& ckpt);

// Columns: seed,t,v,v_d,pitch,height,fx
void WriteDisturbanceTrace(const std::string& path,
                           const std::vector<DisturbanceSample>& samples);
std::string DisturbanceSummaryJson(const DisturbanceResult& result);

// Channels are columns of `channels` sampled every `dt`. Each channel is
// standardized, then score = RMS(x(t + lag) - x(t)) with the shifted copy
// linearly interpolated. Throws TraceTooShort when the trace is shorter
// than three lags.
double PeriodicityScore(const Eigen::MatrixXd& channels, double dt, double lag);

// (score, lag) of the smallest score over lags in [min_lag, max_lag] on the
// dt grid.
std::pair<double, double> BestLagScore(const Eigen::MatrixXd& channels,
                                       double dt, double min_lag,
                                       double max_lag);

struct OrbitSample {
  double t = 0.0;
  int leg = 0;
  double q_hip = 0.0;
  double qd_hip = 0.0;
  double q_knee = 0.0;
  double qd_knee = 0.0;
};

struct PeriodicityReport {
  std::vector<OrbitSample> orbits;
  double v_d = 0.0;
  // Lag used for the score.
  double period = 0.0;
  // True when the period comes from the trot plan rather than a search.
  bool intrinsic_period = false;
  double score = 0.0;
  double threshold = 0.0;
  bool below_threshold = false;
};

PeriodicityReport RunPeriodicity(const ExperimentConfig& cfg, PolicyKind kind,
                                 const ActionFunction& policy, double v_d);
PeriodicityReport RunPeriodicity(const PolicyCheckpoint& ckpt, double v_d);

// Columns: t,leg,q_hip,qd_hip,q_knee,qd_knee (leg 0..3 = FL, FR, BL, BR).
void WriteOrbits(const std::string& path, const std::vector<OrbitSample>& orbits);
std::string PeriodicityJson(const PeriodicityReport& report);

// Aggregates <dir>/seed_*/ (a policy directory) or every policy directory
// below <dir>. Writes <dir>/metrics.json (and, per policy, an across-seed
// learning_curve.csv) and returns the JSON text.
std::string ComputeMetrics(const std::string& run_dir);

}  // namespace quadloco

#endif  // QUADLOCO_EXPERIMENT_H_
