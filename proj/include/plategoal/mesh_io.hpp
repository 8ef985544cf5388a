#pragma once

#include <iosfwd>
#include <string>

#include "plategoal/mesh.hpp"

namespace plategoal {

// Plain-text mesh format:
//   V E T
//   x y bflag        (V lines)
//   v0 v1 v2         (T lines, refinement side opposite v0)
// Coordinates are written with 17 significant digits so a read/write cycle is exact.

void write_mesh(std::ostream& os, const Mesh& mesh);
void write_mesh(const std::string& path, const Mesh& mesh);

Mesh read_mesh(std::istream& is);
Mesh read_mesh(const std::string& path);

}  // namespace plategoal
