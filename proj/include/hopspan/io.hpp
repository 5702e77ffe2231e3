#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopspan/geo.hpp"
#include "hopspan/steiner_tree.hpp"

namespace hopspan::io {

// Tree file: line 1 holds n; then n lines "parent color" with parent in
// -1..n-1 (-1 marks the root, exactly once) and color R or S. Children order
// is ascending child index.
RootedSteinerTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const RootedSteinerTree& t);

// Point file: one point per line, whitespace-separated coordinates; the first
// line fixes the dimension; blank lines ignored.
PointSet read_points(std::istream& in);
void write_points(std::ostream& out, const PointSet& ps);

// Unweighted edge list: "u v" per line.
std::vector<std::pair<Vertex, Vertex>> read_edges(std::istream& in);
void write_edges(std::ostream& out, const std::vector<std::pair<Vertex, Vertex>>& edges);

// Weighted edge list: "u v weight" per line, 17 significant digits.
std::vector<GeoEdge> read_weighted_edges(std::istream& in);
void write_weighted_edges(std::ostream& out, const std::vector<GeoEdge>& edges);

std::string format_double(double v);  // %.17g

}  // namespace hopspan::io
