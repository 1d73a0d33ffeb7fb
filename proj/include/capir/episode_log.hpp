#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "capir/simulator.hpp"

namespace capir {

class LogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positions are [x, y] pairs in grid coordinates.
nlohmann::json coord_to_json(const GridMap& map, CellId cell);
CellId coord_from_json(const GridMap& map, const nlohmann::json& j);
nlohmann::json world_to_json(const GridMap& map, const WorldState& world);
WorldState world_from_json(const GridMap& map, const nlohmann::json& j);

nlohmann::json config_to_json(const EpisodeConfig& config);
EpisodeConfig config_from_json(const nlohmann::json& j);

// Line-delimited records: one header, one record per step, one outcome.
std::string write_episode_log(const EpisodeLog& log, const GridMap& map);
EpisodeLog read_episode_log(std::string_view text, const GridMap& map);

void save_episode_log(const EpisodeLog& log, const GridMap& map,
                      const std::filesystem::path& path);
EpisodeLog load_episode_log(const std::filesystem::path& path,
                            const GridMap& map);

// Reads only the header fields needed to locate the level.
struct LogHeader {
  std::string level_name;
  std::uint64_t level_hash = 0;
};
LogHeader peek_log_header(const std::filesystem::path& path);

}  // namespace capir
