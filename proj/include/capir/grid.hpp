#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capir {

// Index of a passable cell, dense in [0, num_cells()).
using CellId = std::uint32_t;

struct Coord {
  int x = 0;  // column
  int y = 0;  // row, 0 at the top
  friend bool operator==(const Coord&, const Coord&) = default;
};

enum class Direction : std::uint8_t { kNorth = 0, kSouth, kEast, kWest };
inline constexpr std::array<Direction, 4> kDirections = {
    Direction::kNorth, Direction::kSouth, Direction::kEast, Direction::kWest};

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable maze with passable-cell indexing and an all-pairs shortest-path
// table (4-connected, unit step cost).
class GridMap {
 public:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  // rows[y][x] is true where the cell is passable. Throws MapError when the
  // grid is ragged, empty or its passable cells are not connected.
  explicit GridMap(const std::vector<std::vector<bool>>& rows);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t num_cells() const { return coords_.size(); }

  bool passable(Coord c) const;
  Coord coord(CellId cell) const { return coords_[cell]; }
  std::optional<CellId> cell_at(Coord c) const;

  // Adjacent passable cell in direction d, if any.
  std::optional<CellId> neighbor(CellId cell, Direction d) const;
  // Adjacent passable cells in N, S, E, W order.
  const std::vector<CellId>& neighbors(CellId cell) const {
    return neighbor_list_[cell];
  }

  std::uint16_t distance(CellId a, CellId b) const {
    return distance_[static_cast<std::size_t>(a) * coords_.size() + b];
  }

  // Walls as one string per row, '#' wall and '.' floor.
  std::vector<std::string> wall_rows() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> cell_index_;  // width*height, -1 for walls
  std::vector<Coord> coords_;
  std::vector<std::array<std::int32_t, 4>> step_;
  std::vector<std::vector<CellId>> neighbor_list_;
  std::vector<std::uint16_t> distance_;
};

}  // namespace capir
