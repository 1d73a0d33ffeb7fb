#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capir/grid.hpp"

namespace capir {

class LevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Engine parameters carried on the second line of a level file.
struct GameParams {
  double gamma = 0.95;
  int flee_radius = 4;
  double flee_prob = 0.9;
  int shoot_range = 3;
  int max_steps = 300;
  double switch_stay = 0.8;

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

struct Level {
  std::string name;
  GridMap map;
  GameParams params;
  CellId human_start = 0;
  CellId assistant_start = 0;
  std::vector<CellId> ghost_starts;  // row-major order of 'G' in the file
  std::uint64_t content_hash = 0;    // FNV-1a of the raw file bytes

  std::size_t num_ghosts() const { return ghost_starts.size(); }
};

// Parses "capir-level v1" text. Throws LevelError (or MapError) on any
// format, validation or connectivity problem.
Level parse_level(std::string_view text, std::string name = "level");
Level load_level(const std::filesystem::path& path);

// Inverse of parse_level for a level with the given entities.
std::string format_level(const Level& level);

}  // namespace capir
