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

// Dense multilayer perceptrons with exact reverse-mode gradients, Adam and
// Polyak averaging. Batched calls take one sample per matrix column.

#ifndef QUADLOCO_NN_H_
#define QUADLOCO_NN_H_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace quadloco {

using Rng = std::mt19937_64;

enum class Activation : std::uint32_t { kIdentity = 0, kRelu = 1, kTanh = 2 };

struct DenseLayer {
  Eigen::MatrixXd weight;  // out x in
  Eigen::VectorXd bias;
  Activation activation = Activation::kIdentity;
};

class Mlp {
 public:
  Mlp() = default;

  // All-zero network with layer widths `widths` (input first).
  Mlp(const std::vector<int>& widths, Activation hidden, Activation output);

  // Weights uniform in +-1/sqrt(fan_in); the last layer is multiplied by
  // `output_scale`.
  static Mlp Random(const std::vector<int>& widths, Activation hidden,
                    Activation output, Rng& rng, double output_scale = 1.0);

  int input_size() const;
  int output_size() const;
  int num_parameters() const;
  std::vector<int> widths() const;

  // Throws DimensionMismatch on a wrong input width.
  Eigen::VectorXd Forward(const Eigen::VectorXd& input) const;
  Eigen::MatrixXd Forward(const Eigen::MatrixXd& inputs) const;

  bool SameShape(const Mlp& other) const;
  bool AllFinite() const;

  std::vector<DenseLayer> layers;
};

// Layer outputs of a batched forward pass; outputs[0] is the input.
struct ForwardCache {
  std::vector<Eigen::MatrixXd> outputs;
  const Eigen::MatrixXd& result() const { return outputs.back(); }
};

ForwardCache ForwardWithCache(const Mlp& net, const Eigen::MatrixXd& inputs);

struct MlpGradients {
  std::vector<Eigen::MatrixXd> weight;
  std::vector<Eigen::VectorXd> bias;
  Eigen::MatrixXd input;

  static MlpGradients ZerosLike(const Mlp& net);
  void Scale(double factor);
};

// Gradients of sum_samples <output_gradient, net(input)> with respect to
// every parameter and the input.
MlpGradients Backward(const Mlp& net, const ForwardCache& cache,
                      const Eigen::MatrixXd& output_gradient);
MlpGradients Backward(const Mlp& net, const Eigen::MatrixXd& inputs,
                      const Eigen::MatrixXd& output_gradient);

struct AdamState {
  std::vector<Eigen::MatrixXd> m_weight, v_weight;
  std::vector<Eigen::VectorXd> m_bias, v_bias;
  std::int64_t step = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState For(const Mlp& net, double learning_rate);
};

// One bias-corrected Adam descent step along `grads`.
void AdamStep(AdamState& state, Mlp& params, const MlpGradients& grads);

// target <- tau * source + (1 - tau) * target.
void PolyakUpdate(Mlp& target, const Mlp& source, double tau);

// Binary format, little-endian:
//   "QMLP" | u32 version=1 | u32 layer_count |
//   per layer: u32 in | u32 out | u32 activation |
//              f64[out*in] weight (row-major) | f64[out] bias
void WriteMlp(std::ostream& out, const Mlp& net);
Mlp ReadMlp(std::istream& in);
void WriteAdam(std::ostream& out, const AdamState& state);
AdamState ReadAdam(std::istream& in);

void SaveMlp(const std::string& path, const Mlp& net);
Mlp LoadMlp(const std::string& path);

}  // namespace quadloco

#endif  // QUADLOCO_NN_H_
