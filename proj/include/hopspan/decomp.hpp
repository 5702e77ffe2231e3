#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/steiner_tree.hpp"

namespace hopspan {

struct SubtreeEntry {
    RootedSteinerTree tree;
    VertexMap map;  // ambient id -> subtree id
};

// Output of the cut-vertex decomposition: cut_vertices and the subtree vertex
// sets partition V(T); borders list, per subtree, the cut vertices adjacent to
// it by a tree edge.
struct Decomposition {
    std::vector<Vertex> cut_vertices;  // in post-order detection order
    std::vector<SubtreeEntry> subtrees;
    std::vector<std::vector<Vertex>> borders;  // ascending ambient ids
    std::vector<std::int32_t> sizes;  // final size(v) values of the pass
    std::int64_t vertex_visits = 0;
};

// Left-to-right post-order pass: size(v) accumulates the required-size of the
// not-yet-detached subtree under v; when size(v) > ell, v becomes a cut vertex
// and its subtree is detached. Afterwards every subtree of T \ CV has
// required-size <= ell and |CV| <= floor(n / (ell+1)) for n = |R(T)|.
Decomposition decompose(const RootedSteinerTree& t, std::int64_t ell);

// Fills `borders`: the border of subtree T_i is the set of cut vertices joined
// to T_i by a tree edge (the parent of rt(T_i) plus every cut vertex whose
// parent lies in T_i). Runs once over V(T); decompose() already calls it.
void compute_borders(const RootedSteinerTree& t, Decomposition& d);

}  // namespace hopspan
