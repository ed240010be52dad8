// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sgedit/edits.hpp"
#include "sgedit/graph.hpp"
#include "sgedit/image.hpp"

namespace sgedit {

struct SampleRecord {
  std::string id;
  std::string kind;
  json edit;  // descriptor written by the generator, including "ops"
  std::string source_image;
  std::string target_image;
  std::string source_graph;
  std::string target_graph;

  std::vector<EditOp> ops() const;
};

struct SourceSample {
  std::string id;
  Image image;
  SceneGraph graph;
};

struct PairSample {
  std::string id;
  std::string kind;
  Image source_image;
  SceneGraph source_graph;
  Image target_image;
  SceneGraph target_graph;
  std::vector<EditOp> ops;
};

/// Read-only view over an exported dataset directory (manifest.json + files).
class Dataset {
 public:
  static Dataset open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const Vocabulary& vocab() const { return vocab_; }
  int resolution() const { return resolution_; }
  const json& manifest() const { return manifest_; }

  std::vector<std::string> split(const std::string& name) const;
  const SampleRecord& record(const std::string& id) const;
  bool has(const std::string& id) const;

  /// Source side only; the self-supervised trainer never touches target files.
  SourceSample load_source(const std::string& id) const;
  PairSample load_pair(const std::string& id) const;

  /// Checks every split id resolves and every graph validates; returns problems.
  std::vector<std::string> check_integrity(bool include_targets) const;

 private:
  std::filesystem::path root_;
  json manifest_;
  Vocabulary vocab_;
  int resolution_ = 64;
  std::vector<SampleRecord> records_;
  std::map<std::string, std::size_t> by_id_;
};

}  // namespace sgedit
