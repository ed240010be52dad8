// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgedit/dataset.hpp"
#include "sgedit/metrics.hpp"
#include "sgedit/pipeline.hpp"

namespace sgedit {

struct ModeMetrics {
  int count = 0;
  double mae_all = 0.0;
  double mae_roi = 0.0;
  double ssim_all = 0.0;
  double ssim_roi = 0.0;
  int geometry_total = 0;
  int geometry_correct = 0;

  std::optional<double> geometry_accuracy() const {
    if (geometry_total == 0) return std::nullopt;
    return static_cast<double>(geometry_correct) / geometry_total;
  }
  json to_json() const;
};

/// Running sums for ModeMetrics.
class MetricAccumulator {
 public:
  void add(const Image& generated, const Image& reference, const std::vector<PixelRect>& roi);
  void add_geometry(bool correct);
  void merge(const MetricAccumulator& other);
  ModeMetrics result() const;

 private:
  int count_ = 0;
  double mae_all_ = 0.0, mae_roi_ = 0.0, ssim_all_ = 0.0, ssim_roi_ = 0.0;
  int geometry_total_ = 0, geometry_correct_ = 0;
};

struct EvalReport {
  std::map<std::string, ModeMetrics> modes;
  ModeMetrics aggregate;
  json config;
  std::string digest;

  json to_json() const;
};

inline const std::vector<std::string> kEvalModes = {"auto", "remove", "replace", "relationship", "add"};

/// Manifest edit kind evaluated by a manipulation mode (empty for "auto").
std::string manifest_kind_for_mode(const std::string& mode);

struct EvalOptions {
  std::vector<std::string> modes{"auto"};
  std::string split = "test";
  std::uint64_t seed = 0;
  int max_samples = 0;  // per mode; 0 = all
};

/// Noise seed of one evaluated sample.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& sample_id);

/// Node whose region auto-encode evaluation occludes (deterministic per id).
int auto_encode_target(const SceneGraph& graph, const std::string& sample_id);

/// Occludes one object per image (boxes and features stay visible) and
/// measures the reconstruction against the source.
ModeMetrics evaluate_auto_encode(SgEditModel& model, const std::vector<SourceSample>& samples, std::uint64_t seed);

EvalReport evaluate(SgEditModel& model, const Dataset& dataset, const EvalOptions& options);

/// Sign test of a subject-minus-object center offset for spatial predicate
/// names; nullopt for predicates without a geometric reading.
std::optional<bool> offset_matches_predicate(const std::string& predicate, double dy, double dx);

struct PredicateHeatmap {
  std::string predicate;
  int bins = 0;
  std::vector<double> ground_truth;  // bins x bins, row = dy, col = dx, sums to 1
  std::vector<double> predicted;
  int count = 0;
  std::optional<double> gt_sign_rate;
  std::optional<double> predicted_sign_rate;

  json to_json() const;
};

/// For each triplet the subject box is hidden and re-predicted; offsets are
/// subject center minus (ground-truth) object center, binned over [-1, 1]^2.
std::vector<PredicateHeatmap> predicate_heatmaps(SgEditModel& model, const Dataset& dataset, const std::string& split,
                                                 int bins = 32, int max_samples = 0);

/// heatmaps/{predicate}.png: ground truth row on top, predictions below.
void write_heatmap_pngs(const std::vector<PredicateHeatmap>& maps, const std::filesystem::path& dir, int scale = 4);

}  // namespace sgedit
