// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <torch/torch.h>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgedit/graph.hpp"

namespace sgedit {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

using NamedTensors = std::vector<std::pair<std::string, torch::Tensor>>;

/// Single-file container: magic, version, JSON header, little-endian float32
/// arrays, CRC-32 trailer over header and data.
struct CheckpointFile {
  json header;
  NamedTensors arrays;

  const torch::Tensor* find(const std::string& name) const;
};

/// Writes to a sibling temp file and renames, so readers never see a partial file.
void write_checkpoint(const std::filesystem::path& path, const json& header, const NamedTensors& arrays);
CheckpointFile read_checkpoint(const std::filesystem::path& path);

/// Parameters and buffers of a module, names prefixed.
NamedTensors module_state(const torch::nn::Module& module, const std::string& prefix);

/// Copies arrays named prefix+name into the module. Missing arrays and shape
/// disagreements throw before anything is modified.
void load_module_state(torch::nn::Module& module, const std::string& prefix, const CheckpointFile& file);

/// Adam moments keyed by parameter name; step counts go into the returned json.
NamedTensors adam_state(torch::optim::Adam& optimizer, const NamedTensors& params, const std::string& prefix,
                        json& steps);
void load_adam_state(torch::optim::Adam& optimizer, const NamedTensors& params, const std::string& prefix,
                     const CheckpointFile& file, const json& steps);

}  // namespace sgedit
