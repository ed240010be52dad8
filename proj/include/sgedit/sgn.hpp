// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <vector>

#include "sgedit/graph.hpp"

namespace sgedit {

struct SgnConfig {
  int object_vocab = 0;
  int predicate_vocab = 0;
  int embedding_dim = 128;   // d
  int feature_dim = 128;     // n, visual feature length
  int hidden_dim = 512;      // tau_e / tau_n hidden units
  int state_dim = 128;       // node/edge width after layer 0
  int layers = 5;            // T
  int mask_size = 16;        // M
  int node_feature_dim = 128;  // s
  int head_hidden_dim = 128;

  int input_state_dim() const { return embedding_dim + 4 + feature_dim; }

  json to_json() const;
  static SgnConfig from_json(const json& j);
};

inline constexpr double kLeakySlope = 0.2;

/// Two-layer perceptron, leaky rectifier on the hidden layer, linear output.
class MlpImpl : public torch::nn::Module {
 public:
  MlpImpl(int in, int hidden, int out);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Linear fc1{nullptr};
  torch::nn::Linear fc2{nullptr};
};
TORCH_MODULE(Mlp);

/// Flattened batch of graphs. Node rows of all graphs are stacked; edge
/// endpoints index into the stacked rows.
struct GraphBatch {
  torch::Tensor categories;       // (N) int64
  torch::Tensor boxes;            // (N, 4) input boxes (zero where hidden)
  torch::Tensor box_visible;      // (N) 0/1
  torch::Tensor features;         // (N, n) visual features (zero where hidden)
  torch::Tensor feature_visible;  // (N) 0/1
  torch::Tensor subjects;         // (E) int64
  torch::Tensor predicates;       // (E) int64
  torch::Tensor objects;          // (E) int64
  torch::Tensor node_image;       // (N) int64, owning image of each node
  int64_t num_images = 0;

  int64_t num_nodes() const { return categories.size(0); }
  int64_t num_edges() const { return subjects.size(0); }
};

/// Stacks graphs into one batch. Boxes are visible when stored and not
/// bbox_masked; stored features are visible unless feature_masked.
GraphBatch collate_graphs(const std::vector<const SceneGraph*>& graphs, int feature_dim,
                          torch::Dtype dtype = torch::kFloat32);

struct SgnOutput {
  torch::Tensor boxes;     // (N, 4) x_hat
  torch::Tensor masks;     // (N, M, M) in (0,1)
  torch::Tensor features;  // (N, s) psi
};

struct EdgeMessages {
  torch::Tensor alpha;  // subject-side message
  torch::Tensor rho;    // updated predicate state
  torch::Tensor beta;   // object-side message
};

/// One tau_e evaluation on [subject | predicate | object], split into thirds.
EdgeMessages edge_message(Mlp& tau_e, const torch::Tensor& subject_states, const torch::Tensor& predicate_states,
                          const torch::Tensor& object_states);

/// Node update: mean of outgoing alphas and incoming betas, then tau_n.
/// Nodes without any edge take isolated(previous state) instead.
torch::Tensor aggregate_nodes(const torch::Tensor& previous_states, const torch::Tensor& subjects,
                              const torch::Tensor& objects, const EdgeMessages& messages, Mlp& tau_n,
                              torch::nn::Linear& isolated);

/// Per-node edge count (an edge counts once for each endpoint).
torch::Tensor edge_counts(int64_t num_nodes, const torch::Tensor& subjects, const torch::Tensor& objects,
                          const torch::TensorOptions& options);

class SgnImpl : public torch::nn::Module {
 public:
  explicit SgnImpl(const SgnConfig& cfg);

  /// nu^(0) = [embedding(category) | box or 0 | feature or 0]
  torch::Tensor init_node_states(const GraphBatch& batch);
  SgnOutput forward(const GraphBatch& batch);

  const SgnConfig& config() const { return cfg_; }

  torch::nn::Embedding object_embeddings{nullptr};
  torch::nn::Embedding predicate_embeddings{nullptr};
  std::vector<Mlp> edge_nets;   // tau_e per layer
  std::vector<Mlp> node_nets;   // tau_n per layer
  std::vector<torch::nn::Linear> isolated_nets;
  Mlp box_head{nullptr};
  Mlp mask_head{nullptr};
  Mlp feature_head{nullptr};

 private:
  SgnConfig cfg_;
};
TORCH_MODULE(Sgn);

}  // namespace sgedit
