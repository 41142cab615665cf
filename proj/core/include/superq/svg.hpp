#pragma once

#include <optional>
#include <string>

#include "superq/cones.hpp"
#include "superq/config.hpp"

namespace superq {

/// Two-dimensional slice picture of the Harish-Chandra cone and parameter
/// set: region shading, lattice points of the slice grid, and the homogeneous
/// cone of the selected cell as the moment-image overlay.
std::string render_atlas(const Context& ctx, const std::vector<Cell>& cs,
                         std::optional<std::size_t> selected_cell, const SliceSpec& slice, int box,
                         int lattice_den, double scale);

}  // namespace superq
