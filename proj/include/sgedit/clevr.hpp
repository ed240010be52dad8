// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgedit/edits.hpp"
#include "sgedit/graph.hpp"
#include "sgedit/image.hpp"

namespace sgedit::clevr {

enum class Shape { Square = 0, Circle = 1, Triangle = 2 };
enum class Size { Small = 0, Large = 1 };

inline constexpr int kNumShapes = 3;
inline constexpr int kNumColors = 8;
inline constexpr int kNumSizes = 2;
inline constexpr int kNumCategories = kNumShapes * kNumColors * kNumSizes;

enum Predicate : int { kInFrontOf = 0, kBehind = 1, kLeftOf = 2, kRightOf = 3 };
inline constexpr int kNumPredicates = 4;

const char* shape_name(Shape s);
const char* color_name(int color);
const char* size_name(Size s);

struct GenConfig {
  int min_objects = 3;
  int max_objects = 7;
  double small_half_extent = 0.07;
  double large_half_extent = 0.11;
  double min_center_distance = 0.15;
  int placement_attempts = 200;
  int max_scene_resamples = 1000;
  // Probability that a non-nearest pair is annotated; total edges capped at
  // edge_cap_factor * object count.
  double extra_edge_probability = 0.25;
  int edge_cap_factor = 2;
};

struct SceneObject {
  Shape shape = Shape::Square;
  int color = 0;
  Size size = Size::Small;
  double cx = 0.5;
  double cy = 0.5;

  double half_extent(const GenConfig& cfg = {}) const {
    return size == Size::Large ? cfg.large_half_extent : cfg.small_half_extent;
  }
  BBox bbox(const GenConfig& cfg = {}) const;
  int category() const;
  bool operator==(const SceneObject&) const = default;
};

struct SceneSpec {
  std::vector<SceneObject> objects;
  // Seeds the random extra-edge annotation so graph derivation is a pure function of the scene.
  std::uint64_t edge_seed = 0;
  bool operator==(const SceneSpec&) const = default;
};

struct SampledScene {
  SceneSpec scene;
  int resamples = 0;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Vocabulary vocabulary();
int category_of(Shape shape, int color, Size size);
SceneObject object_from_category(int category);

/// Relative-position predicate of subject w.r.t. object along the dominant
/// axis: horizontal -> left/right, vertical -> front (larger y, nearer) / behind.
int predicate_between(double subject_cy, double subject_cx, double object_cy, double object_cx);
int predicate_between(const BBox& subject, const BBox& object);

SampledScene sample_scene(std::mt19937_64& rng, const GenConfig& cfg = {});

struct Raster {
  Image image;
  std::vector<BBox> boxes;
};

inline constexpr float kBackground = 0.6f;

Raster rasterize(const SceneSpec& scene, int resolution, const GenConfig& cfg = {});

SceneGraph derive_graph(const SceneSpec& scene, const GenConfig& cfg = {});

enum class EditKind { Swap, Add, Remove, Attribute };
const char* edit_kind_name(EditKind kind);
EditKind edit_kind_from_name(const std::string& name);

struct EditPairSample {
  EditKind kind = EditKind::Swap;
  SceneSpec source_scene;
  SceneSpec target_scene;
  Image source_image;
  Image target_image;
  SceneGraph source_graph;
  SceneGraph target_graph;
  // Graph edits that turn source_graph into the symbolic form of target_graph.
  std::vector<EditOp> ops;
  json descriptor;
};

struct PairOutcome {
  std::optional<EditPairSample> sample;
  std::string skip_reason;
};

PairOutcome make_edit_pair(const SceneSpec& scene, EditKind kind, std::mt19937_64& rng, int resolution,
                           const GenConfig& cfg = {});

struct ExportConfig {
  int resolution = 64;
  GenConfig gen;
};

/// Writes images/, graphs/, vocab/ and manifest.json under out_dir; returns the manifest.
json export_dataset(int count, const std::filesystem::path& out_dir, std::uint64_t seed, const ExportConfig& cfg = {});

/// Per-sample RNG stream derived from (seed, sample id).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t sample_id);

std::string sample_id_string(int id);

}  // namespace sgedit::clevr
