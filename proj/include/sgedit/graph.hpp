// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgedit {

using json = nlohmann::json;

inline constexpr int kDefaultFeatureDim = 128;

/// Malformed on-disk or wire data (graph JSON, vocab files, manifests).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized box, (top, left, bottom, right) in [0,1].
struct BBox {
  double top = 0.0;
  double left = 0.0;
  double bottom = 0.0;
  double right = 0.0;

  double center_y() const { return 0.5 * (top + bottom); }
  double center_x() const { return 0.5 * (left + right); }
  double height() const { return bottom - top; }
  double width() const { return right - left; }

  static BBox from_center(double cy, double cx, double h, double w) {
    return {cy - 0.5 * h, cx - 0.5 * w, cy + 0.5 * h, cx + 0.5 * w};
  }

  bool operator==(const BBox&) const = default;
};

/// Half-open pixel rectangle [y0, y1) x [x0, x1).
struct PixelRect {
  int y0 = 0;
  int x0 = 0;
  int y1 = 0;
  int x1 = 0;

  int height() const { return y1 - y0; }
  int width() const { return x1 - x0; }
  bool contains(int y, int x) const { return y >= y0 && y < y1 && x >= x0 && x < x1; }
  bool operator==(const PixelRect&) const = default;
};

/// Maps a normalized box onto the pixel grid. Outer rounding (floor/ceil)
/// covers every pixel the box touches; the result is clipped to the image
/// and is at least one pixel on each side.
PixelRect to_pixel_rect(const BBox& box, int height, int width);

struct ObjectNode {
  int category_id = 0;
  std::optional<BBox> bbox;
  std::optional<std::vector<float>> visual_feature;
  std::map<std::string, std::string> attributes;
  bool feature_masked = false;
  bool bbox_masked = false;
  // Set by category replacement: the stored bbox is a position anchor whose
  // center is kept while the size is re-estimated.
  bool keep_center = false;

  bool operator==(const ObjectNode&) const = default;
};

struct RelationEdge {
  int subject_index = 0;
  int predicate_id = 0;
  int object_index = 0;

  auto operator<=>(const RelationEdge&) const = default;
};

struct SceneGraph {
  std::vector<ObjectNode> nodes;
  std::vector<RelationEdge> edges;
  std::optional<std::string> image_ref;

  bool operator==(const SceneGraph&) const = default;
};

struct VocabSizes {
  int objects = 0;
  int predicates = 0;
};

struct Vocabulary {
  std::vector<std::string> objects;
  std::vector<std::string> predicates;

  VocabSizes sizes() const {
    return {static_cast<int>(objects.size()), static_cast<int>(predicates.size())};
  }
};

struct Violation {
  enum class Kind { Node, Edge, Graph };
  Kind kind = Kind::Graph;
  int index = -1;
  std::string rule;

  std::string describe() const;
};

std::vector<Violation> validate_graph(const SceneGraph& graph, VocabSizes vocab,
                                      int feature_dim = kDefaultFeatureDim);

/// Number of edges that start or end at each node.
std::vector<int> node_degrees(const SceneGraph& graph);

json graph_to_json(const SceneGraph& graph);
SceneGraph graph_from_json(const json& j);

SceneGraph load_graph(const std::filesystem::path& path);
void save_graph(const SceneGraph& graph, const std::filesystem::path& path);

std::vector<std::string> load_vocab_file(const std::filesystem::path& path);
void save_vocab_file(const std::vector<std::string>& names, const std::filesystem::path& path);

/// Canonical text form used for digests and equality checks across processes.
std::string canonical_dump(const json& j);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace sgedit
