#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/slow_funcs.hpp"
#include "hopspan/steiner_tree.hpp"

namespace hopspan {

// Unweighted shortcut edges over the vertices of one tree. Canonical form:
// u < v per edge, list sorted, no duplicates.
struct ShortcutEdgeSet {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t source_tree_id = 0;

    std::int64_t size() const { return static_cast<std::int64_t>(edges.size()); }
    bool contains(Vertex u, Vertex v) const;
};

// Which function sizes the cut threshold at each recursion level. AlphaPrime
// is the real algorithm; Alpha exists to demonstrate the weaker budget and is
// used by tests only.
enum class CutThreshold { AlphaPrime, Alpha };

struct SpannerStats {
    std::int64_t operations = 0;          // vertex touches + emitted edges
    std::int64_t e_double_prime = 0;      // total |E''| across frames
    double max_e2_ratio = 0.0;            // max per-frame |E''| / n
    std::int64_t top_ell = 0;             // ell of the outermost call
    std::int64_t frames = 0;
};

// Algorithm for a pruned tree with required-size n and target diameter k >= 2:
// returns a shortcut set whose T-monotone diameter over required pairs is at
// most k, with |E| <= n*alpha_2(n) (k=2), <= 5/2*n*alpha_3(n)+2 (k=3),
// <= 2n*alpha'_k(n) (even k >= 4), <= 3n*alpha'_k(n)+2 (odd k >= 5).
ShortcutEdgeSet tree_one_spanner(const RootedSteinerTree& t, std::int64_t n, int k,
                                 SpannerStats* stats = nullptr,
                                 CutThreshold variant = CutThreshold::AlphaPrime);
ShortcutEdgeSet tree_one_spanner(const RootedSteinerTree& t, std::int64_t n, int k,
                                 const slow_funcs::AlphaEvaluator& ae,
                                 SpannerStats* stats = nullptr,
                                 CutThreshold variant = CutThreshold::AlphaPrime);

struct TreeSpannerResult {
    ShortcutEdgeSet edges;  // over the pruned tree's ids
    RootedSteinerTree pruned;
    VertexMap map;  // input id -> pruned id
};

// Convenience wrapper for arbitrary (not yet pruned) trees.
TreeSpannerResult spanner_for_tree(const RootedSteinerTree& t, int k,
                                   SpannerStats* stats = nullptr);

// Closed-form budget the construction is measured against.
std::int64_t edge_budget(std::int64_t n, int k);
std::int64_t edge_budget(std::int64_t n, int k, const slow_funcs::AlphaEvaluator& ae);

}  // namespace hopspan
