// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <random>
#include <vector>

#include "sgedit/graph.hpp"
#include "sgedit/image.hpp"

namespace sgedit {

inline constexpr double kNoiseMean = 0.5;
inline constexpr double kNoiseStd = 0.25;

struct OccludedImage {
  Image image;      // 3 x H x W
  Image indicator;  // 1 x H x W, 1 inside occluded regions
};

/// Replaces the given pixel rectangles (clipped to the image) with clamped
/// Gaussian noise; fully_generative occludes everything.
OccludedImage occlude(const Image& image, const std::vector<PixelRect>& regions, bool fully_generative,
                      std::mt19937_64& rng);

torch::Tensor image_to_tensor(const Image& image);
Image tensor_to_image(const torch::Tensor& chw);

/// Batch norm that uses per-sample statistics when a training batch has a single image.
class Norm2dImpl : public torch::nn::Module {
 public:
  explicit Norm2dImpl(int channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::BatchNorm2d bn{nullptr};
};
TORCH_MODULE(Norm2d);

/// 1x1 convolution over image+indicator, normalization, ReLU.
class ImageEncoderImpl : public torch::nn::Module {
 public:
  explicit ImageEncoderImpl(int out_channels = 32);
  torch::Tensor forward(const torch::Tensor& image_and_indicator);

  torch::nn::Conv2d conv{nullptr};
  Norm2d norm{nullptr};
};
TORCH_MODULE(ImageEncoder);

/// Crops of size 32x32 -> visual feature vectors.
class FeatureExtractorImpl : public torch::nn::Module {
 public:
  explicit FeatureExtractorImpl(int feature_dim = 128, int crop_size = 32);
  torch::Tensor forward(const torch::Tensor& crops);

  torch::nn::Sequential convs{nullptr};
  torch::nn::Linear fc{nullptr};
  int crop_size;
};
TORCH_MODULE(FeatureExtractor);

/// Bilinear crop-and-resize: images (B,3,H,W), one rect + image index per crop -> (K,3,S,S).
torch::Tensor crop_regions(const torch::Tensor& images, const std::vector<PixelRect>& rects,
                           const std::vector<int64_t>& image_index, int size);

struct CrnConfig {
  std::vector<int> widths;

  static CrnConfig full() { return {{1024, 512, 256, 128, 64}}; }
  static CrnConfig desk() { return {{128, 128, 64, 64, 32}}; }
  static CrnConfig preset(const std::string& name);
  json to_json() const { return {{"widths", widths}}; }
  static CrnConfig from_json(const json& j);
};

/// Cascaded refinement decoder. Module k runs at resolution >> (K-1-k) and
/// sees the previous output upsampled plus the input pooled to its scale.
class CrnImpl : public torch::nn::Module {
 public:
  CrnImpl(int in_channels, const CrnConfig& cfg);
  torch::Tensor forward(const torch::Tensor& input);

  struct Stage {
    torch::nn::Conv2d conv1{nullptr};
    Norm2d norm1{nullptr};
    torch::nn::Conv2d conv2{nullptr};
    Norm2d norm2{nullptr};
  };
  std::vector<Stage> stages;
  torch::nn::Conv2d to_rgb{nullptr};
};
TORCH_MODULE(Crn);

}  // namespace sgedit
