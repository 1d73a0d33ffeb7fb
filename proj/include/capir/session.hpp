#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "capir/game.hpp"
#include "capir/simulator.hpp"

namespace capir {

// Protocol-level failure, rendered as {"code": ..., "message": ...}.
class ProtocolError : public std::runtime_error {
 public:
  enum class Code { kValidation, kNotFound, kConflict, kUnavailable };

  ProtocolError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }
  std::string_view code_name() const;
  int http_status() const;
  nlohmann::json body() const;

 private:
  Code code_;
};

struct LevelEntry {
  std::shared_ptr<const Level> level;
  std::shared_ptr<const PolicyCache> cache;
};

// Level id -> (level, cache). Levels are read lazily from a directory as
// "<id>.lvl" with the cache at "<id>.qcache"; entries are immutable and
// shared by all sessions.
class LevelRegistry {
 public:
  LevelRegistry() = default;
  explicit LevelRegistry(std::filesystem::path directory,
                         bool allow_nonconverged = false);

  void add(const std::string& id, LevelEntry entry);
  // Throws ProtocolError(kNotFound) for unknown ids and
  // ProtocolError(kUnavailable) for a missing, stale or non-converged cache.
  LevelEntry get(const std::string& id);
  std::vector<std::string> ids() const;

 private:
  std::filesystem::path directory_;
  bool allow_nonconverged_ = false;
  mutable std::shared_mutex mutex_;
  std::map<std::string, LevelEntry> entries_;
};

struct SessionOptions {
  RationalityModel model;
  HumanResponseModel response = HumanResponseModel::kSoftmax;
  std::function<std::chrono::steady_clock::time_point()> clock =
      [] { return std::chrono::steady_clock::now(); };
  // Defaults draw from std::random_device.
  std::function<std::string()> make_session_id;
  std::function<std::uint64_t()> make_seed;
};

// Session protocol over structured JSON messages:
//   create {level_id[, seed]} -> snapshot
//   act {session_id, action}  -> act-response
//   state(session_id)         -> snapshot
// Sessions are independent; act calls on one session are serialized and an
// overlapping call fails with a conflict.
class SessionManager {
 public:
  SessionManager(LevelRegistry& registry, SessionOptions options = {});

  nlohmann::json create(const nlohmann::json& request);
  nlohmann::json act(const nlohmann::json& request);
  nlohmann::json state(const std::string& session_id);

  // Log of the session so far, as an external-human episode.
  EpisodeLog episode_log(const std::string& session_id);
  std::size_t size() const;

 private:
  struct Session {
    std::string id;
    LevelEntry entry;
    Game game;
    std::vector<StepRecord> records;
    std::mutex mutex;

    Session(std::string id_, LevelEntry entry_, std::uint64_t seed,
            GameOptions options);
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  nlohmann::json snapshot(const Session& s) const;

  LevelRegistry& registry_;
  SessionOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace capir
