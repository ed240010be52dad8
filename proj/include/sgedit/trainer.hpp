// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgedit/adversarial.hpp"
#include "sgedit/dataset.hpp"
#include "sgedit/edits.hpp"
#include "sgedit/evaluate.hpp"
#include "sgedit/model.hpp"

namespace sgedit {

struct MaskingConfig {
  double p_phi = 0.25;
  double p_x = 0.35;
  bool fully_generative = false;

  void validate() const;
  json to_json() const;
  static MaskingConfig from_json(const json& j);
};

/// Independent Bernoulli draws per node for the feature and the box. The
/// image regions of every node with either input hidden are occluded.
MaskSpec sample_masks(const SceneGraph& graph, const MaskingConfig& cfg, std::mt19937_64& rng);

/// A region the object discriminator judges, with the category it should carry.
struct ObjectCrop {
  int node = -1;
  BBox box;
  int category = 0;
};

/// One crop per occluded node, in the order of MaskSpec::occlude_regions.
std::vector<ObjectCrop> object_crops(const SceneGraph& graph, const MaskSpec& mask);

enum class TrainMode { SelfSupervised, Supervised };
const char* train_mode_name(TrainMode m);
TrainMode train_mode_from_name(const std::string& name);

struct TrainConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  int batch_size = 8;
  int64_t steps = 10000;
  std::uint64_t seed = 0;
  TrainMode mode = TrainMode::SelfSupervised;
  MaskingConfig masking;
  LossWeights weights;
  int validate_every = 500;
  int validation_samples = 64;
  int checkpoint_every = 1000;

  json to_json() const;
  static TrainConfig from_json(const json& j);
};

/// A prepared training example: what the generator sees and what it must produce.
struct TrainExample {
  const Image* source = nullptr;
  const Image* target = nullptr;
  SceneGraph input_graph;
  std::vector<BBox> regions;
  bool fully_generative = false;
  std::vector<std::optional<BBox>> box_targets;  // per node of input_graph
  std::vector<ObjectCrop> crops;
};

/// Target is the source itself; graph and regions follow the mask.
TrainExample self_supervised_example(const Image& image, const SceneGraph& graph, const MaskSpec& mask);

/// Source image with the edited graph; target is the paired image.
TrainExample supervised_example(const PairSample& pair, const EditContext& ctx);

struct StepResult {
  bool applied = false;
  std::string abort_reason;
  LossBreakdown generator;
  double discriminator = 0.0;
};

class Trainer {
 public:
  Trainer(const ModelConfig& model_cfg, const Vocabulary& vocab, const TrainConfig& cfg);

  /// Restores weights, optimizer moments, RNG and step from a checkpoint.
  static Trainer resume(const std::filesystem::path& checkpoint);

  /// One discriminator update followed by one generator update.
  StepResult train_step(const std::vector<TrainExample>& batch);

  /// Generator objective with gradients enabled; nothing is updated.
  SynthesisLoss objective(const std::vector<TrainExample>& batch, std::mt19937_64& rng);

  /// Generator objective on a batch without updating anything (noise from rng).
  LossBreakdown measure(const std::vector<TrainExample>& batch, std::mt19937_64& rng);

  void save(const std::filesystem::path& path) const;

  SgEditModel& model() { return model_; }
  GlobalDiscriminator& global_discriminator() { return d_global_; }
  ObjectDiscriminator& object_discriminator() { return d_object_; }
  const TrainConfig& config() const { return cfg_; }
  TrainConfig& config() { return cfg_; }
  const Vocabulary& vocab() const { return vocab_; }
  std::mt19937_64& rng() { return rng_; }
  int64_t step() const { return step_; }
  const json& validation() const { return validation_; }
  void set_validation(json v) { validation_ = std::move(v); }

 private:
  struct Forward;
  Forward run_generator(const std::vector<TrainExample>& batch, std::mt19937_64& rng);
  SynthesisLoss generator_loss(const Forward& f, const std::vector<TrainExample>& batch);

  ModelConfig model_cfg_;
  Vocabulary vocab_;
  TrainConfig cfg_;
  SgEditModel model_{nullptr};
  GlobalDiscriminator d_global_{nullptr};
  ObjectDiscriminator d_object_{nullptr};
  std::unique_ptr<torch::optim::Adam> opt_g_;
  std::unique_ptr<torch::optim::Adam> opt_d_;
  std::mt19937_64 rng_;
  int64_t step_ = 0;
  json validation_ = json::object();
};

struct FitOptions {
  std::filesystem::path out_dir;
  // Called after every step with the step number and the result.
  std::function<void(int64_t, const StepResult&)> on_step;
  bool verbose = false;
};

struct FitReport {
  int64_t steps_run = 0;
  int64_t aborted_steps = 0;
  std::optional<LossBreakdown> last;
  json validation;
  json to_json() const;
};

/// Trains until trainer.config().steps, writing train_log.csv,
/// validation.csv, checkpoint.bin and report.json under out_dir.
FitReport fit(Trainer& trainer, const Dataset& dataset, const FitOptions& options);

/// Batch of dataset indices for a step: epoch-wise shuffles derived from the seed.
std::vector<std::size_t> batch_indices(std::uint64_t seed, int64_t step, int batch_size, std::size_t dataset_size);

}  // namespace sgedit
