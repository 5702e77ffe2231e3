#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hopspan/geo.hpp"
#include "hopspan/steiner_tree.hpp"
#include "hopspan/tree_spanner.hpp"

namespace hopspan {

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

struct MonotoneDiameterReport {
    std::int64_t diameter = 0;  // kUnreachable when some pair has no monotone path
    std::optional<std::pair<Vertex, Vertex>> witness_pair;
    std::int64_t pairs_checked = 0;
};

// Exact T-monotone diameter of the shortcut set H: per pair, restrict H to the
// tree path's vertex sequence, keep forward arcs only, and BFS for the fewest
// edges. Brute force by design; this is the acceptance engine.
MonotoneDiameterReport monotone_diameter(const RootedSteinerTree& t, const ShortcutEdgeSet& h,
                                         bool required_only);

// Same, over a seeded sample of pairs (all pairs when sample <= 0 or covers).
MonotoneDiameterReport monotone_diameter_sampled(const RootedSteinerTree& t,
                                                 const ShortcutEdgeSet& h, bool required_only,
                                                 std::int64_t pair_sample, std::uint64_t seed);

// k rounds of edge relaxation from `source`: entry v = least weight over
// paths with at most k edges, +inf if unreachable. Validates that every edge
// weight equals the Euclidean distance of its endpoints (1e-9 relative).
std::vector<double> hop_limited_distance(const PointSet& points,
                                         const std::vector<GeoEdge>& edges, std::int64_t k,
                                         std::int32_t source);

struct StretchReport {
    double max_stretch = 1.0;
    std::optional<std::pair<std::int32_t, std::int32_t>> violating_pair;
    std::int64_t pairs_checked = 0;
    bool pass = true;
};

// Over all pairs (or a seeded sample of pair_budget pairs when n^2 exceeds
// the budget): hop-limited distance within k edges must be at most
// (1+eps) * Euclidean distance, with 1e-9 relative slack.
StretchReport stretch_report(const PointSet& points, const std::vector<GeoEdge>& edges,
                             std::int64_t k, double eps, std::int64_t pair_budget = 0,
                             std::uint64_t seed = 0);

struct BudgetAudit {
    bool pass = true;
    std::int64_t bound = 0;
};

BudgetAudit audit_budgets(std::int64_t n, int k, std::int64_t edge_count);

struct CoverAuditReport {
    bool leaves_ok = true;        // property 1: leaf <-> point bijection per tree
    bool reps_ok = true;          // property 2: rep(v) is a descendant leaf's point
    bool walks_ok = true;         // property 3: some tree certifies each pair
    double max_walk_stretch = 0.0;
    std::optional<std::pair<std::int32_t, std::int32_t>> violating_pair;
    std::int64_t pairs_checked = 0;
    bool pass() const { return leaves_ok && reps_ok && walks_ok; }
};

// Exhaustive audit of the three dumbbell-cover output properties.
CoverAuditReport audit_cover(const PointSet& points, const TreeCover& cover);

}  // namespace hopspan
