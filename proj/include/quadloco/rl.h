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

// TD3 and one-step DDPG. Both work on unit actions in [-1, 1]^n; the
// environment maps them into physical bounds.

#ifndef QUADLOCO_RL_H_
#define QUADLOCO_RL_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "quadloco/errors.h"
#include "quadloco/nn.h"

namespace quadloco {

struct TrainerConfig {
  double learning_rate = 1e-3;
  double discount = 0.99;
  // Gaussian exploration std as a fraction of each action half-range.
  double exploration_noise = 0.1;
  std::int64_t total_steps = 300000;
  int buffer_size = 300000;
  int batch_size = 100;
  std::int64_t random_steps = 10000;
  double polyak_tau = 0.005;
  double target_policy_noise = 0.2;
  double target_noise_clip = 0.5;
  int policy_delay = 2;
  // K of the one-step trainer.
  int one_step_train_iters = 100;
  // Gradient updates per environment step (TD3).
  int updates_per_step = 1;

  std::vector<int> actor_hidden{256, 256};
  std::vector<int> critic_hidden{256, 256};
  double actor_output_scale = 0.1;
  // Critics regress value / value_scale.
  double value_scale = 1.0;

  void Validate() const;
};

struct Transition {
  Eigen::VectorXd state;
  Eigen::VectorXd action;
  double reward = 0.0;
  Eigen::VectorXd next_state;
  // Early-stop failure only; timeouts bootstrap.
  bool terminal = false;
};

struct EpisodeRecord {
  double v_d = 0.0;
  Eigen::VectorXd action;
  double cumulative_reward = 0.0;
};

// Fixed-capacity ring. Once full, each insertion overwrites the oldest item.
template <typename T>
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw BufferTooSmall("replay buffer capacity is zero");
    items_.reserve(std::min<std::size_t>(capacity, 1 << 16));
  }

  void Add(T item) {
    if (items_.size() < capacity_) {
      items_.push_back(std::move(item));
    } else {
      items_[cursor_] = std::move(item);
    }
    cursor_ = (cursor_ + 1) % capacity_;
  }

  // Uniform indices with replacement over the filled slots.
  std::vector<std::size_t> SampleIndices(std::size_t n, Rng& rng) const {
    if (items_.empty()) throw BufferEmpty("cannot sample an empty buffer");
    std::uniform_int_distribution<std::size_t> pick(0, items_.size() - 1);
    std::vector<std::size_t> idx(n);
    for (auto& i : idx) i = pick(rng);
    return idx;
  }

  // Slot access; slot order is storage order, not age.
  const T& operator[](std::size_t i) const { return items_[i]; }
  // i-th oldest item.
  const T& Oldest(std::size_t i) const {
    return items_.size() < capacity_ ? items_[i]
                                     : items_[(cursor_ + i) % capacity_];
  }

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t cursor() const { return cursor_; }
  bool empty() const { return items_.empty(); }

 private:
  std::size_t capacity_;
  std::size_t cursor_ = 0;
  std::vector<T> items_;
};

// y = r + discount * min(q1, q2), or r alone for a terminal transition.
double Td3Target(double reward, bool terminal, double q1_next, double q2_next,
                 double discount);

// Target-policy smoothing: target actor output plus N(0, noise) clipped to
// +-clip, then clipped to [-1, 1]. `rng == nullptr` disables the noise.
// Columns of `next_states` are samples.
Eigen::MatrixXd SmoothedTargetActions(const Mlp& target_actor,
                                      const Eigen::MatrixXd& next_states,
                                      const TrainerConfig& cfg, Rng* rng);

// Before T_random: uniform over [-1, 1]^n. Afterwards: actor output plus
// N(0, sigma) per dimension, clipped to [-1, 1].
Eigen::VectorXd ExploreAction(const Mlp& actor, const Eigen::VectorXd& state,
                              const TrainerConfig& cfg, std::int64_t step_index,
                              Rng& rng);

// Critic input: [state; action].
Eigen::MatrixXd CriticInput(const Eigen::MatrixXd& states,
                            const Eigen::MatrixXd& actions);

class Td3 {
 public:
  Td3() = default;
  Td3(int state_size, int action_size, const TrainerConfig& cfg, Rng& rng);

  Eigen::VectorXd Act(const Eigen::VectorXd& state) const;
  // Q1 and Q2 of a single pair, in reward units.
  std::pair<double, double> Values(const Eigen::VectorXd& state,
                                   const Eigen::VectorXd& action) const;

  // One critic step on a uniform batch; every policy_delay-th call also
  // steps the actor and Polyak-updates all targets. Returns the mean
  // critic loss (in scaled units) before the step. Throws BufferTooSmall.
  double Update(const ReplayBuffer<Transition>& buffer, Rng& rng);

  std::int64_t updates() const { return updates_; }
  std::int64_t actor_updates() const { return actor_updates_; }
  const TrainerConfig& config() const { return cfg_; }

  Mlp actor, actor_target;
  Mlp critic1, critic2, critic1_target, critic2_target;
  AdamState actor_opt, critic1_opt, critic2_opt;

  void Write(std::ostream& out) const;
  void Read(std::istream& in);

 private:
  TrainerConfig cfg_;
  int state_size_ = 0;
  int action_size_ = 0;
  std::int64_t updates_ = 0;
  std::int64_t actor_updates_ = 0;
};

// Episodic critic regression on (v_d, a, R) and deterministic policy
// gradient on the actor. No discounting, bootstrapping or targets.
class OneStepDdpg {
 public:
  OneStepDdpg() = default;
  OneStepDdpg(int action_size, const TrainerConfig& cfg, Rng& rng);

  Eigen::VectorXd Act(double v_d) const;
  // Critic estimate of the cumulative reward.
  double Value(double v_d, const Eigen::VectorXd& action) const;

  // Samples one batch of N records, then K critic steps on it followed by
  // K actor steps on its v_d values. Throws BufferEmpty.
  void Train(const ReplayBuffer<EpisodeRecord>& buffer, Rng& rng);

  // The two phases separately, on an explicit batch.
  // Returns the mean squared error (scaled units) after the last step.
  double TrainCritic(const std::vector<const EpisodeRecord*>& batch);
  void TrainActor(const std::vector<const EpisodeRecord*>& batch);

  std::int64_t train_rounds() const { return train_rounds_; }
  const TrainerConfig& config() const { return cfg_; }

  Mlp actor, critic;
  AdamState actor_opt, critic_opt;

  void Write(std::ostream& out) const;
  void Read(std::istream& in);

 private:
  TrainerConfig cfg_;
  int action_size_ = 0;
  std::int64_t train_rounds_ = 0;
};

// Mersenne twister state as text.
void WriteRng(std::ostream& out, const Rng& rng);
void ReadRng(std::istream& in, Rng& rng);

}  // namespace quadloco

#endif  // QUADLOCO_RL_H_
