#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopspan/steiner_tree.hpp"

namespace hopspan {

using PointId = std::int32_t;

// n points in R^d, row-major. Duplicate points are representable (projected
// graphs need them); operations that require distinct points validate on entry.
struct PointSet {
    int dim = 0;
    std::vector<double> coords;

    PointId size() const { return static_cast<PointId>(dim == 0 ? 0 : coords.size() / dim); }
    std::span<const double> point(PointId i) const {
        return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    double distance(PointId a, PointId b) const;
    bool has_duplicates() const;
};

struct GeoEdge {
    PointId u, v;
    double w;
};

// Point set plus weighted edge list; weights equal Euclidean distances.
struct GeometricGraph {
    PointSet points;
    std::vector<GeoEdge> edges;
};

// Fair split tree. Node boxes are tight bounding boxes of the node's points;
// each node owns the contiguous leaf-order range [lo, hi).
class SplitTree {
  public:
    explicit SplitTree(const PointSet& points);

    std::int32_t node_count() const { return static_cast<std::int32_t>(lo_.size()); }
    std::int32_t root() const { return 0; }
    bool is_leaf(std::int32_t v) const { return left_[v] < 0; }
    std::int32_t left(std::int32_t v) const { return left_[v]; }
    std::int32_t right(std::int32_t v) const { return right_[v]; }
    std::int32_t parent(std::int32_t v) const { return parent_[v]; }
    std::int32_t range_lo(std::int32_t v) const { return lo_[v]; }
    std::int32_t range_hi(std::int32_t v) const { return hi_[v]; }
    std::int32_t range_size(std::int32_t v) const { return hi_[v] - lo_[v]; }
    PointId leaf_point(std::int32_t slot) const { return order_[slot]; }
    std::span<const double> box_min(std::int32_t v) const {
        return {bmin_.data() + static_cast<std::size_t>(v) * dim_, static_cast<std::size_t>(dim_)};
    }
    std::span<const double> box_max(std::int32_t v) const {
        return {bmax_.data() + static_cast<std::size_t>(v) * dim_, static_cast<std::size_t>(dim_)};
    }
    // Center of the bounding box and its enclosing-ball radius (half diagonal).
    std::span<const double> center(std::int32_t v) const {
        return {ctr_.data() + static_cast<std::size_t>(v) * dim_, static_cast<std::size_t>(dim_)};
    }
    double radius(std::int32_t v) const { return rad_[v]; }
    int dim() const { return dim_; }

  private:
    int dim_ = 0;
    std::vector<PointId> order_;  // leaf slot -> point id
    std::vector<std::int32_t> left_, right_, lo_, hi_, parent_;
    std::vector<double> bmin_, bmax_, ctr_, rad_;
};

// One well-separated pair: two split-tree nodes and the distance between
// their box centers.
struct WspdPair {
    std::int32_t left, right;
    double length;
};

SplitTree build_split_tree(const PointSet& points);

// Every unordered point pair is covered by exactly one returned pair, and the
// bounding balls of each pair are at distance >= s * max radius.
std::vector<WspdPair> build_wspd(const SplitTree& tree, double s);

struct DumbbellConfig {
    double separation = 0.0;  // 0: use max(16, 8/eps + 8)
    int length_group = 3;     // minimum class modulus; raised when the walk
                              // budget needs finer length separation
    int max_trees = 64;
    double inflate = 0.0;     // 0: head-region inflation derived from eps
};

// Rooted tree whose leaves biject to the points; every internal vertex
// carries a representative drawn from its descendant leaves.
struct DumbbellTree {
    RootedSteinerTree tree;            // leaves REQUIRED, internals STEINER
    std::vector<PointId> leaf_point;   // per vertex; kNoVertex-like -1 for internals
    std::vector<Vertex> point_leaf;    // point id -> leaf vertex
    std::vector<PointId> representative;  // per vertex
};

struct CoverStats {
    double separation = 0.0;
    int group_modulus = 0;  // effective length-class modulus
    double inflate = 0.0;   // head-region inflation (fraction of length)
    std::int64_t dumbbells = 0;
    std::vector<int> colors_per_class;
    std::int64_t lock_events = 0;  // attachment fallbacks; 0 in a correct build
    std::int64_t max_tree_vertices = 0;
};

struct TreeCover {
    std::vector<DumbbellTree> trees;
    double eps = 0.0;
    int group_count = 0;
    CoverStats stats;
};

// Dumbbell-tree cover: every tree holds all points as leaves, representatives
// are descendant leaves, and for every point pair some tree's representative
// walk is a (1+eps)-spanner path. Tree count is bounded by config.max_trees.
TreeCover build_dumbbell_cover(const PointSet& points, double eps,
                               const DumbbellConfig& config = {});

// Weight of the walk from representative to representative along the unique
// tree path between the leaves of points u and v.
double rep_walk_weight(const PointSet& points, const DumbbellTree& tree, PointId u, PointId v);

struct EuclideanSpannerStats {
    int trees = 0;
    std::int64_t edges = 0;
    std::int64_t budget_per_tree = 0;
    CoverStats cover;
};

// Union over the cover of per-tree shortcut sets mapped through
// representatives: a (1+eps)-spanner in which every pair has a path of at
// most k edges.
GeometricGraph euclidean_spanner(const PointSet& points, int k, double eps,
                                 const DumbbellConfig& config = {},
                                 EuclideanSpannerStats* stats = nullptr);

}  // namespace hopspan
