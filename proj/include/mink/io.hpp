#pragma once

// Curve JSON, OBJ meshes and atomic file output.

#include "mink/curve.hpp"

#include <array>
#include <string>
#include <vector>

namespace mink {

/// {"points": [[x1,x2,x3], ...], "closed": true}, first point not repeated.
std::vector<MinkVec3d> read_curve_json(const std::string& path);
std::string curve_json(const std::vector<MinkVec3d>& points);
void write_curve_json(const std::string& path, const std::vector<MinkVec3d>& points);

struct ObjMesh {
    std::vector<MinkVec3d> vertices;
    /// zero-based vertex indices
    std::vector<std::array<int, 3>> faces;
};

/// Vertices are written in shortest round-trip form, so read_obj(write_obj(m))
/// reproduces coordinates bit for bit.
void write_obj(const std::string& path, const ObjMesh& mesh);
ObjMesh read_obj(const std::string& path);

/// Writes to a temporary sibling and renames it over `path`. Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

} // namespace mink
