// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sgedit/edits.hpp"
#include "sgedit/model.hpp"

namespace sgedit {

/// Generator weights plus what the checkpoint says about them.
struct LoadedModel {
  SgEditModel model{nullptr};
  Vocabulary vocab;
  json header;

  /// All-pixel auto-encode MAE recorded at the last validation, if any.
  std::optional<double> validation_mae() const;
};

LoadedModel load_model(const std::filesystem::path& checkpoint);

struct GenerationRequest {
  const Image* image = nullptr;
  SceneGraph graph;
  std::vector<BBox> regions;
  bool fully_generative = false;
  std::uint64_t seed = 0;
};

struct GenerationResult {
  Image image;
  std::vector<ResolvedBox> boxes;
  std::vector<PixelRect> occluded;
};

/// Inference: eval mode, no gradients, noise drawn from the request seed.
GenerationResult generate(SgEditModel& model, const GenerationRequest& request);

struct EditedGraph {
  SceneGraph graph;
  std::vector<BBox> regions;  // union of every edit's occlusions, in order
};

/// Applies ops one after another to the source graph.
EditedGraph apply_edits(const SceneGraph& source, const std::vector<EditOp>& ops, const EditContext& ctx);

/// Shared by the CLI and the service: apply ops, then generate.
GenerationResult run_edits(SgEditModel& model, const Image& image, const SceneGraph& graph,
                           const std::vector<EditOp>& ops, std::uint64_t seed, const EditContext& ctx);

}  // namespace sgedit
