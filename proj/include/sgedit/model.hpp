// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <random>
#include <vector>

#include "sgedit/graph.hpp"
#include "sgedit/image.hpp"
#include "sgedit/layout.hpp"
#include "sgedit/sgn.hpp"
#include "sgedit/synthesis.hpp"

namespace sgedit {

struct ModelConfig {
  SgnConfig sgn;
  CrnConfig crn = CrnConfig::desk();
  int resolution = 64;
  int image_feature_channels = 32;
  int crop_size = 32;
  bool use_visual_features = true;

  int layout_channels() const { return sgn.feature_dim + sgn.node_feature_dim; }
  int decoder_input_channels() const { return layout_channels() + image_feature_channels + 1; }

  json to_json() const;
  static ModelConfig from_json(const json& j);
  static ModelConfig make(const Vocabulary& vocab, const std::string& preset, int resolution,
                          bool use_visual_features = true);
};

/// One image to reconstruct: the clean source pixels, the (possibly edited,
/// flagged) graph and the normalized regions hidden from the decoder.
struct GeneratorInput {
  const Image* image = nullptr;
  SceneGraph graph;
  std::vector<BBox> regions;
  bool fully_generative = false;
};

/// Graph side of the generator: visual features, SGN predictions.
struct GraphEncoding {
  GraphBatch batch;
  SgnOutput sgn;
  torch::Tensor source;           // (B, 3, H, W) clean source pixels
  torch::Tensor visual_features;  // (N, n), zero rows where hidden
  std::vector<int64_t> node_image;
  std::vector<int64_t> node_offset;  // first row of each image's nodes
};

struct GeneratorOutput {
  torch::Tensor images;  // (B, 3, H, W)
  SgnOutput sgn;
  torch::Tensor visual_features;  // (N, n), zero rows where hidden
  std::vector<ResolvedBox> boxes;
  std::vector<int64_t> node_image;
  std::vector<int64_t> node_offset;  // first row of each image's nodes
  std::vector<std::vector<PixelRect>> occluded;
  torch::Tensor layout;
};

class SgEditModelImpl : public torch::nn::Module {
 public:
  explicit SgEditModelImpl(const ModelConfig& cfg);

  GraphEncoding encode_graphs(const std::vector<GeneratorInput>& inputs);
  /// occlude_predicted additionally hides the regions of nodes drawn at a
  /// predicted box (used at inference so new positions are synthesized).
  GeneratorOutput forward(const std::vector<GeneratorInput>& inputs, std::mt19937_64& noise_rng,
                          bool occlude_predicted);

  const ModelConfig& config() const { return cfg_; }
  torch::Dtype dtype() const;

  Sgn sgn{nullptr};
  FeatureExtractor extractor{nullptr};
  ImageEncoder encoder{nullptr};
  Crn crn{nullptr};

 private:
  ModelConfig cfg_;
};
TORCH_MODULE(SgEditModel);

}  // namespace sgedit
