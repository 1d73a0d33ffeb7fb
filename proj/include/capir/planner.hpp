#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "capir/ghostbuster.hpp"
#include "capir/level.hpp"
#include "capir/mdp.hpp"

namespace capir {

// One subtask per ghost: catching ghost `index`.
struct SubtaskId {
  std::size_t index = 0;
  friend bool operator==(const SubtaskId&, const SubtaskId&) = default;
};

SubtaskState project_state(const WorldState& world, SubtaskId id);

struct SubtaskPolicy {
  std::shared_ptr<const QTable> q;
  SolveReport report;
};

// Offline planning artifact: one solved Q-table per ghost, bound to the
// level content hash and the parameters it was planned with.
struct PolicyCache {
  static constexpr std::uint32_t kFormatVersion = 1;

  std::uint64_t level_hash = 0;
  GameParams params;
  double epsilon = 0.0;
  std::uint64_t max_iterations = 0;
  SubtaskCodec codec{0};
  std::vector<SubtaskPolicy> subtasks;

  std::size_t num_subtasks() const { return subtasks.size(); }
  const QTable& q(SubtaskId id) const { return *subtasks.at(id.index).q; }
  bool converged() const;
};

PolicyCache plan_level(const Level& level, const SolveOptions& options = {});

class CacheError : public std::runtime_error {
 public:
  enum class Kind {
    kIo,
    kMissing,
    kBadMagic,
    kVersionMismatch,
    kChecksumMismatch,
    kCorrupt,
    kLevelMismatch,
    kParameterMismatch,
    kNotConverged,
  };

  CacheError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::vector<std::uint8_t> serialize_cache(const PolicyCache& cache);
PolicyCache deserialize_cache(std::span<const std::uint8_t> bytes,
                              const Level& level);

void save_cache(const PolicyCache& cache, const std::filesystem::path& path);
// Throws CacheError on a missing file, wrong version, checksum failure or a
// cache that was planned for a different level or parameter block.
PolicyCache load_cache(const std::filesystem::path& path, const Level& level);

// Throws CacheError(kNotConverged) unless the cache converged or the caller
// explicitly allows non-converged caches.
void require_servable(const PolicyCache& cache, bool allow_nonconverged);

// "<dir>/<stem>.qcache" next to the level file.
std::filesystem::path default_cache_path(const std::filesystem::path& level_path);

}  // namespace capir
