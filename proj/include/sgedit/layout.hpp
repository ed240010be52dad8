// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <array>
#include <vector>

#include "sgedit/graph.hpp"

namespace sgedit {

enum class BoxSource { GroundTruth, Predicted, CenterAnchored };

const char* box_source_name(BoxSource s);

struct ResolvedBox {
  BBox box;
  PixelRect rect;
  BoxSource source = BoxSource::GroundTruth;
  bool degenerate = false;
};

/// Picks the box a node is drawn into: stored box when visible, predicted
/// box when hidden, or anchor center with predicted size after a category
/// replacement. Coordinates are clamped to the image.
ResolvedBox resolve_box(const ObjectNode& node, const std::array<double, 4>& predicted, int height, int width);

/// Bilinear resize (half-pixel centers) of a 2-D mask.
torch::Tensor resize_mask(const torch::Tensor& mask, int height, int width);

/// Mask resized into rect, zero elsewhere: (H, W).
torch::Tensor place_mask(const torch::Tensor& mask, const PixelRect& rect, int height, int width);

/// One node's canvas: feature (C) times the placed mask -> (C, H, W).
torch::Tensor project_node(const torch::Tensor& mask, const PixelRect& rect, const torch::Tensor& feature,
                           int height, int width);

/// Elementwise sum of same-shape canvases; empty input gives zeros of the given shape.
torch::Tensor compose(const std::vector<torch::Tensor>& canvases, int channels, int height, int width,
                      const torch::TensorOptions& options = torch::kFloat32);

/// Batched layout: masks (N, M, M), features (N, C), node_image (N) ->
/// (B, C, H, W) with every node's canvas summed into its image.
torch::Tensor build_layout(const torch::Tensor& masks, const std::vector<PixelRect>& rects,
                           const torch::Tensor& features, const std::vector<int64_t>& node_image, int64_t num_images,
                           int height, int width);

}  // namespace sgedit
