#pragma once

#include <string>

#include "sturm/christoffel.hpp"

namespace sturm {

// 20 SVG units per lattice cell, plus a one-cell margin on every side.
inline constexpr int kSvgCellSize = 20;

// Unit grid, the straight segment (0,0)-(p,q), and the lattice path of the
// Christoffel word. Output is a pure function of the spec.
std::string render_svg(const ChristoffelSpec& spec);

// Text version of the same picture, top row is y = q. Lattice points are
// '.', path vertices 'o', path steps '-' and '|', and '/' marks every cell
// whose interior the segment crosses.
std::string render_ascii(const ChristoffelSpec& spec);

}  // namespace sturm
