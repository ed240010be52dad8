// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sgedit/dataset.hpp"
#include "sgedit/pipeline.hpp"

namespace httplib {
class Server;
}

namespace sgedit {

struct Session {
  std::string id;
  std::optional<std::string> sample_id;
  Image source;
  std::string source_digest;
  SceneGraph source_graph;
  SceneGraph graph;
  std::vector<EditOp> history;
  std::vector<BBox> regions;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> cache;  // state digest -> image id
  std::mutex mu;
};

/// Status plus JSON body (or raw bytes for images).
struct ApiResult {
  int status = 200;
  json body;
  std::string bytes;
  std::string content_type = "application/json";
};

/// Session and generation logic behind the HTTP routes. The model is shared
/// read-only; generations are serialized on it, session edits on the session.
class EditService {
 public:
  EditService(std::shared_ptr<LoadedModel> model, std::optional<Dataset> dataset);

  ApiResult create_session(const json& request);
  ApiResult get_session(const std::string& id);
  ApiResult post_edit(const std::string& id, const json& edit);
  ApiResult generate(const std::string& id, const json& request);
  ApiResult get_image(const std::string& image_id);
  ApiResult list_samples(const std::string& split);
  ApiResult vocab() const;

  void register_routes(httplib::Server& server);

  const Vocabulary& vocabulary() const { return vocab_; }
  std::shared_ptr<Session> find(const std::string& id);

 private:
  json session_json(const Session& s) const;
  EditContext edit_context() const;

  std::shared_ptr<LoadedModel> model_;
  std::optional<Dataset> dataset_;
  Vocabulary vocab_;
  std::mutex model_mu_;
  std::mutex store_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::string> images_;  // image id -> PNG bytes
  std::uint64_t next_session_ = 1;
};

/// Next seed after a re-roll (splitmix64 step).
std::uint64_t reroll_seed(std::uint64_t seed);

std::string base64_decode(const std::string& text);

}  // namespace sgedit
