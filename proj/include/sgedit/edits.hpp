// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sgedit/graph.hpp"

namespace sgedit {

struct RemoveNode {
  int node_index = 0;
  bool operator==(const RemoveNode&) const = default;
};

struct ReplaceCategory {
  int node_index = 0;
  int new_category_id = 0;
  bool operator==(const ReplaceCategory&) const = default;
};

struct ChangePredicate {
  int edge_index = 0;
  int new_predicate_id = 0;
  bool operator==(const ChangePredicate&) const = default;
};

/// Outgoing: the new node is the subject; Incoming: the new node is the object.
enum class EdgeDirection { Outgoing, Incoming };

struct NewEdge {
  int predicate_id = 0;
  int other_node_index = 0;
  EdgeDirection direction = EdgeDirection::Outgoing;
  bool operator==(const NewEdge&) const = default;
};

struct AddNode {
  int category_id = 0;
  std::vector<NewEdge> new_edges;
  bool operator==(const AddNode&) const = default;
};

/// Withholds the node's box so the network re-estimates its position.
struct RepositionNode {
  int node_index = 0;
  bool operator==(const RepositionNode&) const = default;
};

using EditOp = std::variant<RemoveNode, ReplaceCategory, ChangePredicate, AddNode, RepositionNode>;

/// Which node inputs and which image regions are hidden from the model.
/// Regions are normalized boxes; to_pixel_rect() maps them to the image.
struct MaskSpec {
  std::set<int> nodes_feature_masked;
  std::set<int> nodes_bbox_masked;
  std::vector<BBox> occlude_regions;
  bool fully_generative = false;

  bool empty() const {
    return nodes_feature_masked.empty() && nodes_bbox_masked.empty() && occlude_regions.empty() &&
           !fully_generative;
  }
  bool operator==(const MaskSpec&) const = default;
};

class EditError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EditResult {
  SceneGraph graph;
  MaskSpec mask;
};

struct EditContext {
  VocabSizes vocab;
  int feature_dim = kDefaultFeatureDim;
};

/// Applies one edit without touching the input. Throws EditError (and leaves
/// nothing half-applied) when the edit does not fit the graph.
EditResult apply_edit(const SceneGraph& graph, const EditOp& edit, const EditContext& ctx);

/// Drops every other edge whose (subject, predicate, object) equals the edge
/// at edited_edge_index. Returns the graph and the edited edge's new index.
std::pair<SceneGraph, int> dedupe_edges(const SceneGraph& graph, int edited_edge_index);

/// Training-time masking: flags nodes per the spec and zeroes hidden
/// features. Hidden boxes stay stored (they are the regression targets) but
/// are flagged bbox_masked without a position anchor.
SceneGraph apply_mask(const SceneGraph& graph, const MaskSpec& mask);

/// Mask implied by the node flags of an edited graph plus accumulated regions.
MaskSpec mask_from_flags(const SceneGraph& graph, std::vector<BBox> regions);

json edit_to_json(const EditOp& edit);
EditOp edit_from_json(const json& j);
json mask_to_json(const MaskSpec& mask);

const char* edit_kind_name(const EditOp& edit);

}  // namespace sgedit
