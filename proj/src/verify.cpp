#include "hopspan/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hopspan/rng.hpp"

namespace hopspan {

namespace {

struct Csr {
    std::vector<std::int32_t> off;
    std::vector<Vertex> adj;

    Csr(std::int64_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        off.assign(static_cast<std::size_t>(n) + 1, 0);
        for (auto [u, v] : edges) {
            ++off[static_cast<std::size_t>(u) + 1];
            ++off[static_cast<std::size_t>(v) + 1];
        }
        for (std::size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
        adj.resize(static_cast<std::size_t>(off.back()));
        std::vector<std::int32_t> cur(off.begin(), off.end() - 1);
        for (auto [u, v] : edges) {
            adj[static_cast<std::size_t>(cur[static_cast<std::size_t>(u)]++)] = v;
            adj[static_cast<std::size_t>(cur[static_cast<std::size_t>(v)]++)] = u;
        }
    }
};

// Fewest forward arcs from position 0 to the last position of `path`, where
// an arc i -> j exists iff (path[i], path[j]) is an edge of `g` and i < j.
std::int64_t monotone_distance(const std::vector<Vertex>& path, const Csr& g,
                               std::vector<std::int32_t>& pos, std::vector<std::int32_t>& stamp,
                               std::int32_t tick, std::vector<std::int32_t>& dist,
                               std::vector<std::int32_t>& queue) {
    const auto t = static_cast<std::int32_t>(path.size());
    for (std::int32_t i = 0; i < t; ++i) {
        stamp[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = tick;
        pos[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = i;
    }
    dist.assign(static_cast<std::size_t>(t), -1);
    dist[0] = 0;
    queue.clear();
    queue.push_back(0);
    for (std::size_t qh = 0; qh < queue.size(); ++qh) {
        std::int32_t i = queue[qh];
        if (i == t - 1) return dist[static_cast<std::size_t>(i)];
        Vertex vi = path[static_cast<std::size_t>(i)];
        for (std::int32_t e = g.off[static_cast<std::size_t>(vi)];
             e < g.off[static_cast<std::size_t>(vi) + 1]; ++e) {
            Vertex w = g.adj[static_cast<std::size_t>(e)];
            if (stamp[static_cast<std::size_t>(w)] != tick) continue;
            std::int32_t j = pos[static_cast<std::size_t>(w)];
            if (j <= i || dist[static_cast<std::size_t>(j)] >= 0) continue;
            dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
            queue.push_back(j);
        }
    }
    return t == 1 ? 0 : (dist[static_cast<std::size_t>(t - 1)] >= 0
                             ? dist[static_cast<std::size_t>(t - 1)]
                             : kUnreachable);
}

MonotoneDiameterReport monotone_diameter_impl(const RootedSteinerTree& t, const ShortcutEdgeSet& h,
                                              bool required_only, std::int64_t pair_sample,
                                              std::uint64_t seed) {
    for (auto [u, v] : h.edges)
        if (u < 0 || v < 0 || u >= t.size() || v >= t.size() || u == v)
            throw validation_error("monotone_diameter: edge endpoint outside tree");

    std::vector<Vertex> verts =
        required_only ? t.required_vertices() : [&] {
            std::vector<Vertex> all(static_cast<std::size_t>(t.size()));
            for (Vertex v = 0; v < t.size(); ++v) all[static_cast<std::size_t>(v)] = v;
            return all;
        }();

    MonotoneDiameterReport rep;
    if (verts.size() < 2) return rep;
    Csr g(t.size(), h.edges);
    std::vector<std::int32_t> pos(static_cast<std::size_t>(t.size()), 0);
    std::vector<std::int32_t> stamp(static_cast<std::size_t>(t.size()), -1);
    std::vector<std::int32_t> dist, queue;
    std::int32_t tick = 0;

    auto run_pair = [&](Vertex u, Vertex v) {
        std::vector<Vertex> path = tree_path(t, u, v);
        std::int64_t d = monotone_distance(path, g, pos, stamp, tick++, dist, queue);
        ++rep.pairs_checked;
        if (d > rep.diameter) {
            rep.diameter = d;
            rep.witness_pair = {u, v};
        }
    };

    const auto m = static_cast<std::int64_t>(verts.size());
    if (pair_sample <= 0 || pair_sample >= m * (m - 1) / 2) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) run_pair(verts[i], verts[j]);
    } else {
        Rng rng(seed);
        for (std::int64_t k = 0; k < pair_sample; ++k) {
            auto i = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(m)));
            auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(m)));
            if (i == j) continue;
            run_pair(verts[std::min(i, j)], verts[std::max(i, j)]);
        }
    }
    return rep;
}

}  // namespace

MonotoneDiameterReport monotone_diameter(const RootedSteinerTree& t, const ShortcutEdgeSet& h,
                                         bool required_only) {
    return monotone_diameter_impl(t, h, required_only, 0, 0);
}

MonotoneDiameterReport monotone_diameter_sampled(const RootedSteinerTree& t,
                                                 const ShortcutEdgeSet& h, bool required_only,
                                                 std::int64_t pair_sample, std::uint64_t seed) {
    return monotone_diameter_impl(t, h, required_only, pair_sample, seed);
}

std::vector<double> hop_limited_distance(const PointSet& points, const std::vector<GeoEdge>& edges,
                                         std::int64_t k, std::int32_t source) {
    const PointId n = points.size();
    if (source < 0 || source >= n) throw validation_error("hop_limited_distance: bad source");
    if (k < 1) throw domain_error("hop_limited_distance: k must be >= 1");
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw validation_error("hop_limited_distance: edge endpoint out of range");
        const double d = points.distance(e.u, e.v);
        if (std::abs(e.w - d) > 1e-9 * std::max(1.0, d))
            throw validation_error("hop_limited_distance: edge weight != Euclidean distance");
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), inf), next;
    dist[static_cast<std::size_t>(source)] = 0;
    next = dist;
    for (std::int64_t round = 0; round < k; ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            const double du = dist[static_cast<std::size_t>(e.u)];
            const double dv = dist[static_cast<std::size_t>(e.v)];
            if (du + e.w < next[static_cast<std::size_t>(e.v)]) {
                next[static_cast<std::size_t>(e.v)] = du + e.w;
                changed = true;
            }
            if (dv + e.w < next[static_cast<std::size_t>(e.u)]) {
                next[static_cast<std::size_t>(e.u)] = dv + e.w;
                changed = true;
            }
        }
        dist = next;
        if (!changed) break;
    }
    return dist;
}

StretchReport stretch_report(const PointSet& points, const std::vector<GeoEdge>& edges,
                             std::int64_t k, double eps, std::int64_t pair_budget,
                             std::uint64_t seed) {
    if (eps <= 0) throw domain_error("stretch_report: eps must be positive");
    const PointId n = points.size();
    StretchReport rep;
    if (n < 2) return rep;

    const double bound = (1.0 + eps) * (1.0 + 1e-9);
    auto check = [&](PointId u, const std::vector<double>& du, PointId v) {
        const double d = points.distance(u, v);
        if (d == 0) return;  // duplicate points are the caller's problem
        const double ratio = du[static_cast<std::size_t>(v)] / d;
        ++rep.pairs_checked;
        if (ratio > rep.max_stretch) {
            rep.max_stretch = ratio;
            if (ratio > bound && rep.pass) {
                rep.pass = false;
                rep.violating_pair = {u, v};
            }
        }
    };

    const std::int64_t all_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const bool exhaustive =
        pair_budget <= 0 ? (n <= 2000) : (pair_budget >= all_pairs);
    if (exhaustive) {
        for (PointId u = 0; u + 1 < n; ++u) {
            std::vector<double> du = hop_limited_distance(points, edges, k, u);
            for (PointId v = u + 1; v < n; ++v) check(u, du, v);
        }
    } else {
        const std::int64_t budget = pair_budget > 0 ? pair_budget : 1000000;
        Rng rng(seed);
        std::vector<std::vector<PointId>> targets(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < budget; ++i) {
            auto u = static_cast<PointId>(rng.next_below(static_cast<std::uint64_t>(n)));
            auto v = static_cast<PointId>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            targets[static_cast<std::size_t>(std::min(u, v))].push_back(std::max(u, v));
        }
        for (PointId u = 0; u < n; ++u) {
            if (targets[static_cast<std::size_t>(u)].empty()) continue;
            std::vector<double> du = hop_limited_distance(points, edges, k, u);
            for (PointId v : targets[static_cast<std::size_t>(u)]) check(u, du, v);
        }
    }
    if (rep.max_stretch > bound) rep.pass = false;
    return rep;
}

BudgetAudit audit_budgets(std::int64_t n, int k, std::int64_t edge_count) {
    BudgetAudit a;
    a.bound = edge_budget(n, k);
    a.pass = edge_count <= a.bound;
    return a;
}

namespace {

// Heavy-light decomposition: O(n) memory, O(log n) LCA.
struct Hld {
    std::vector<Vertex> par, head;
    std::vector<std::int32_t> dep;

    explicit Hld(const RootedSteinerTree& t) {
        const auto n = static_cast<std::size_t>(t.size());
        par.resize(n);
        head.resize(n);
        dep.resize(n);
        std::vector<std::int32_t> sz(n, 1);
        std::vector<Vertex> order;
        order.reserve(n);
        std::vector<Vertex> stack{t.root()};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (Vertex c : t.children(v)) stack.push_back(c);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex p = t.parent(*it);
            if (p != kNoVertex) sz[static_cast<std::size_t>(p)] += sz[static_cast<std::size_t>(*it)];
        }
        for (Vertex v : order) {
            Vertex p = t.parent(v);
            par[static_cast<std::size_t>(v)] = p;
            dep[static_cast<std::size_t>(v)] =
                p == kNoVertex ? 0 : dep[static_cast<std::size_t>(p)] + 1;
            // Chain head: continue the parent's chain iff v is its heavy child.
            if (p == kNoVertex) {
                head[static_cast<std::size_t>(v)] = v;
            } else {
                Vertex heavy = kNoVertex;
                std::int32_t best = -1;
                for (Vertex c : t.children(p))
                    if (sz[static_cast<std::size_t>(c)] > best) {
                        best = sz[static_cast<std::size_t>(c)];
                        heavy = c;
                    }
                head[static_cast<std::size_t>(v)] =
                    heavy == v ? head[static_cast<std::size_t>(p)] : v;
            }
        }
    }

    Vertex lca(Vertex u, Vertex v) const {
        while (head[static_cast<std::size_t>(u)] != head[static_cast<std::size_t>(v)]) {
            if (dep[static_cast<std::size_t>(head[static_cast<std::size_t>(u)])] <
                dep[static_cast<std::size_t>(head[static_cast<std::size_t>(v)])])
                std::swap(u, v);
            u = par[static_cast<std::size_t>(head[static_cast<std::size_t>(u)])];
        }
        return dep[static_cast<std::size_t>(u)] < dep[static_cast<std::size_t>(v)] ? u : v;
    }
};

}  // namespace

CoverAuditReport audit_cover(const PointSet& points, const TreeCover& cover) {
    CoverAuditReport rep;
    const PointId n = points.size();

    for (const auto& dt : cover.trees) {
        const auto& t = dt.tree;
        // Property 1: leaves <-> points.
        std::int64_t leaves = 0;
        for (Vertex v = 0; v < t.size(); ++v) {
            const bool leaf = t.child_count(v) == 0;
            if (leaf != (dt.leaf_point[static_cast<std::size_t>(v)] >= 0)) rep.leaves_ok = false;
            if (leaf != t.is_required(v)) rep.leaves_ok = false;
            if (leaf) ++leaves;
        }
        if (leaves != n) rep.leaves_ok = false;
        for (PointId p = 0; p < n; ++p) {
            Vertex l = dt.point_leaf[static_cast<std::size_t>(p)];
            if (l < 0 || l >= t.size() || dt.leaf_point[static_cast<std::size_t>(l)] != p)
                rep.leaves_ok = false;
        }
        // Property 2: rep(v) is carried by a descendant leaf (checked via
        // preorder intervals).
        std::vector<std::int32_t> tin(static_cast<std::size_t>(t.size())),
            tout(static_cast<std::size_t>(t.size()));
        {
            std::int32_t clock = 0;
            // (vertex, next child index) iterative DFS
            std::vector<std::pair<Vertex, std::int32_t>> stack{{t.root(), 0}};
            tin[static_cast<std::size_t>(t.root())] = clock++;
            while (!stack.empty()) {
                auto& [v, ci] = stack.back();
                auto cs = t.children(v);
                if (ci < static_cast<std::int32_t>(cs.size())) {
                    Vertex c = cs[static_cast<std::size_t>(ci++)];
                    tin[static_cast<std::size_t>(c)] = clock++;
                    stack.emplace_back(c, 0);
                } else {
                    tout[static_cast<std::size_t>(v)] = clock;
                    stack.pop_back();
                }
            }
        }
        for (Vertex v = 0; v < t.size(); ++v) {
            PointId r = dt.representative[static_cast<std::size_t>(v)];
            if (r < 0 || r >= n) {
                rep.reps_ok = false;
                continue;
            }
            Vertex leaf = dt.point_leaf[static_cast<std::size_t>(r)];
            if (!(tin[static_cast<std::size_t>(v)] <= tin[static_cast<std::size_t>(leaf)] &&
                  tin[static_cast<std::size_t>(leaf)] < tout[static_cast<std::size_t>(v)]))
                rep.reps_ok = false;
        }
    }

    // Property 3: some tree certifies each pair.
    if (n >= 2) {
        if (n > 4096) throw capacity_error("audit_cover: exhaustive audit capped at 4096 points");
        std::vector<double> best(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                 std::numeric_limits<double>::infinity());
        for (const auto& dt : cover.trees) {
            const auto& t = dt.tree;
            Hld hld(t);
            std::vector<double> w(static_cast<std::size_t>(t.size()), 0.0);
            std::vector<Vertex> stack{t.root()};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex c : t.children(v)) {
                    w[static_cast<std::size_t>(c)] =
                        w[static_cast<std::size_t>(v)] +
                        points.distance(dt.representative[static_cast<std::size_t>(v)],
                                        dt.representative[static_cast<std::size_t>(c)]);
                    stack.push_back(c);
                }
            }
            for (PointId u = 0; u + 1 < n; ++u) {
                Vertex lu = dt.point_leaf[static_cast<std::size_t>(u)];
                for (PointId v = u + 1; v < n; ++v) {
                    Vertex lv = dt.point_leaf[static_cast<std::size_t>(v)];
                    Vertex l = hld.lca(lu, lv);
                    const double walk = w[static_cast<std::size_t>(lu)] +
                                        w[static_cast<std::size_t>(lv)] -
                                        2 * w[static_cast<std::size_t>(l)];
                    auto& slot =
                        best[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(v)];
                    slot = std::min(slot, walk);
                }
            }
        }
        const double bound = (1.0 + cover.eps) * (1.0 + 1e-9);
        for (PointId u = 0; u + 1 < n; ++u)
            for (PointId v = u + 1; v < n; ++v) {
                const double d = points.distance(u, v);
                const double ratio =
                    best[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(v)] /
                    d;
                ++rep.pairs_checked;
                if (ratio > rep.max_walk_stretch) rep.max_walk_stretch = ratio;
                if (ratio > bound && rep.walks_ok) {
                    rep.walks_ok = false;
                    rep.violating_pair = {u, v};
                }
            }
    }
    return rep;
}

}  // namespace hopspan
