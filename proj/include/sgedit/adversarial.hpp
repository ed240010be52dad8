// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <string>

#include "sgedit/graph.hpp"

namespace sgedit {

struct LossWeights {
  double global = 0.01;  // image GAN
  double object = 0.01;  // object GAN
  double aux = 0.1;      // auxiliary classification
  double box = 10.0;     // box regression

  json to_json() const;
  static LossWeights from_json(const json& j);
};

enum class GanSide { Generator, Discriminator };

/// Logit-based GAN objective. Discriminator: -log D(real) - log(1 - D(fake));
/// generator (non-saturating): -log D(fake). real_logits is ignored on the
/// generator side and may be undefined.
torch::Tensor gan_loss(const torch::Tensor& real_logits, const torch::Tensor& fake_logits, GanSide side);

/// Mean cross-entropy of class logits (K, C) against labels (K).
torch::Tensor aux_class_loss(const torch::Tensor& class_logits, const torch::Tensor& labels);

/// Mean absolute difference; zero for empty inputs.
torch::Tensor mean_abs_error(const torch::Tensor& a, const torch::Tensor& b);

class GlobalDiscriminatorImpl : public torch::nn::Module {
 public:
  GlobalDiscriminatorImpl();
  /// Images (B,3,H,W) -> one logit per image (patch scores averaged).
  torch::Tensor forward(const torch::Tensor& images);

  torch::nn::Sequential net{nullptr};
};
TORCH_MODULE(GlobalDiscriminator);

struct ObjectScores {
  torch::Tensor logits;        // (K)
  torch::Tensor class_logits;  // (K, C)
};

class ObjectDiscriminatorImpl : public torch::nn::Module {
 public:
  ObjectDiscriminatorImpl(int num_classes, int crop_size = 32);
  ObjectScores forward(const torch::Tensor& crops);

  torch::nn::Sequential trunk{nullptr};
  torch::nn::Linear score{nullptr};
  torch::nn::Linear classify{nullptr};
  int num_classes;
};
TORCH_MODULE(ObjectDiscriminator);

/// Individual synthesis loss terms. Undefined tensors count as zero.
struct LossTerms {
  torch::Tensor reconstruction;
  torch::Tensor box;
  torch::Tensor gan_global;
  torch::Tensor gan_object;
  torch::Tensor aux;
};

struct LossBreakdown {
  double reconstruction = 0.0;
  double box = 0.0;
  double gan_global = 0.0;
  double gan_object = 0.0;
  double aux = 0.0;
  double total = 0.0;

  json to_json() const;
  static std::string csv_header();
  std::string csv_row(int64_t step) const;
};

struct SynthesisLoss {
  torch::Tensor total;
  LossBreakdown parts;
};

/// reconstruction + w.global*gan_global + w.object*gan_object + w.aux*aux + w.box*box
SynthesisLoss total_synthesis_loss(const LossTerms& terms, const LossWeights& weights);

}  // namespace sgedit
