#pragma once

#include <cstdint>
#include <string>

#include "hopspan/geo.hpp"
#include "hopspan/steiner_tree.hpp"

namespace hopspan {

enum class TreeShape { Random, Path, Binary, Caterpillar };

TreeShape tree_shape_from_string(const std::string& s);

// Seeded tree generator; each vertex is required with probability
// required_frac. Vertex 0 is the root.
RootedSteinerTree gen_tree(std::int64_t n, double required_frac, std::uint64_t seed,
                           TreeShape shape);

// Same shapes, but with exactly n_required required vertices (seeded choice).
RootedSteinerTree gen_tree_exact(std::int64_t n, std::int64_t n_required, std::uint64_t seed,
                                 TreeShape shape);

enum class PointDist { Uniform, Clustered, Collinear };

PointDist point_dist_from_string(const std::string& s);

// Seeded point generator; guaranteed duplicate-free.
PointSet gen_points(std::int64_t n, int dim, PointDist dist, std::uint64_t seed);

}  // namespace hopspan
