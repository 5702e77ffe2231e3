#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hopspan/common.hpp"

namespace hopspan {

enum class Color : std::uint8_t { Required, Steiner };

// Ordered rooted tree with a REQUIRED/STEINER color per vertex. Immutable
// after construction; children keep the order they were given (for trees
// parsed from files that is ascending child index).
class RootedSteinerTree {
  public:
    RootedSteinerTree() = default;  // the empty tree

    // parent[v] = kNoVertex marks the root (exactly one unless n = 0).
    // Children are ordered by ascending vertex index.
    static RootedSteinerTree from_parents(std::vector<Vertex> parent, std::vector<Color> color);

    // Children keep the explicit per-vertex order given in `children`.
    static RootedSteinerTree from_children(std::vector<Vertex> parent, std::vector<Color> color,
                                           const std::vector<std::vector<Vertex>>& children);

    Vertex root() const { return root_; }
    std::int64_t size() const { return static_cast<std::int64_t>(parent_.size()); }
    bool empty() const { return parent_.empty(); }
    Vertex parent(Vertex v) const { return parent_[check(v)]; }
    Color color(Vertex v) const { return static_cast<Color>(color_[check(v)]); }
    bool is_required(Vertex v) const { return color(v) == Color::Required; }
    std::span<const Vertex> children(Vertex v) const;
    std::int64_t child_count(Vertex v) const { return children(v).size(); }
    std::int64_t required_size() const { return required_size_; }
    std::uint64_t id() const { return id_; }

    // Ascending list of required vertex ids.
    std::vector<Vertex> required_vertices() const;

  private:
    std::size_t check(Vertex v) const {
        if (v < 0 || v >= size()) throw validation_error("vertex id out of range");
        return static_cast<std::size_t>(v);
    }
    void finalize();

    std::vector<Vertex> parent_;
    std::vector<std::uint8_t> color_;
    std::vector<std::int32_t> child_off_;  // CSR offsets, size n+1
    std::vector<Vertex> child_list_;
    Vertex root_ = kNoVertex;
    std::int64_t required_size_ = 0;
    std::uint64_t id_ = 0;
};

// Partial bijection between the vertex ids of two trees.
struct VertexMap {
    std::vector<Vertex> to_new;  // old id -> new id, kNoVertex if dropped
    std::vector<Vertex> to_old;  // new id -> old id

    static VertexMap identity(std::int64_t n);
    // this: A -> B composed with next: B -> C, giving A -> C.
    VertexMap compose(const VertexMap& next) const;
};

struct PruneResult {
    RootedSteinerTree tree;
    VertexMap map;  // input id -> pruned id
};

struct PruneStats {
    std::int64_t vertex_visits = 0;
};

// Removes every redundant Steiner vertex: the output tree's vertex set is
// R(T) together with the Steiner vertices that are LCAs of required pairs,
// its required set equals R(T), and required-pair tree paths stay monotone
// with respect to T. Single pass, linear in |T|.
PruneResult prune(const RootedSteinerTree& t, PruneStats* stats = nullptr);

// Exact useful-vertex set by enumerating all required pairs and taking LCAs.
// Quadratic; test oracle only.
std::vector<Vertex> useful_set_brute(const RootedSteinerTree& t);

// Same set via one counting pass: a Steiner vertex is useful iff at least two
// of its child subtrees contain required vertices. Independent linear route
// used to cross-check prune on large corpora.
std::vector<Vertex> useful_set_counts(const RootedSteinerTree& t);

// True iff for every required pair (u, v), the vertex sequence of the path in
// t2 (mapped through `map`) is a subsequence of the path in t. When
// `pair_sample` > 0, checks that many seeded pairs instead of all pairs.
bool is_monotone_preserving_brute(const RootedSteinerTree& t, const RootedSteinerTree& t2,
                                  const VertexMap& map, std::int64_t pair_sample = 0,
                                  std::uint64_t seed = 0);

// Ordered vertex sequence of the unique u-v path.
std::vector<Vertex> tree_path(const RootedSteinerTree& t, Vertex u, Vertex v);

// Longest root-to-leaf edge count; -1 for the empty tree.
std::int64_t depth(const RootedSteinerTree& t);

std::int64_t vertex_depth(const RootedSteinerTree& t, Vertex v);

// LCA by marking the ancestors of u, then walking up from v.
Vertex lca_brute(const RootedSteinerTree& t, Vertex u, Vertex v);

}  // namespace hopspan
