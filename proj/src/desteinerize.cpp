#include "hopspan/desteinerize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopspan/rng.hpp"

namespace hopspan {

AxisInstance AxisInstance::build(GeometricGraph graph, std::int32_t required_count) {
    AxisInstance inst;
    const PointId n = graph.points.size();
    if (required_count < 1 || required_count > n)
        throw domain_error("AxisInstance: required_count out of range");
    for (PointId p = 0; p < required_count; ++p) {
        auto pt = graph.points.point(p);
        for (int d = 1; d < graph.points.dim; ++d)
            if (pt[static_cast<std::size_t>(d)] != 0.0)
                throw validation_error("AxisInstance: required point off the x-axis");
    }
    for (const auto& e : graph.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
            throw validation_error("AxisInstance: bad edge");
        const double d = graph.points.distance(e.u, e.v);
        if (std::abs(e.w - d) > 1e-9 * std::max(1.0, d))
            throw validation_error("AxisInstance: edge weight != Euclidean distance");
    }
    inst.r_ = required_count;
    inst.xs_point_.resize(static_cast<std::size_t>(required_count));
    for (PointId p = 0; p < required_count; ++p)
        inst.xs_point_[static_cast<std::size_t>(p)] = p;
    std::sort(inst.xs_point_.begin(), inst.xs_point_.end(), [&](PointId a, PointId b) {
        return graph.points.point(a)[0] < graph.points.point(b)[0];
    });
    inst.xs_.resize(static_cast<std::size_t>(required_count));
    inst.req_idx_.assign(static_cast<std::size_t>(n), -1);
    for (std::int32_t i = 0; i < required_count; ++i) {
        PointId p = inst.xs_point_[static_cast<std::size_t>(i)];
        inst.xs_[static_cast<std::size_t>(i)] = graph.points.point(p)[0];
        inst.req_idx_[static_cast<std::size_t>(p)] = i;
    }
    for (std::size_t i = 1; i < inst.xs_.size(); ++i)
        if (inst.xs_[i] <= inst.xs_[i - 1])
            throw validation_error("AxisInstance: duplicate required x-coordinate");
    inst.g_ = std::move(graph);
    return inst;
}

GeometricGraph project_to_axis(const AxisInstance& inst) {
    const auto& g = inst.graph();
    GeometricGraph out;
    out.points.dim = 1;
    out.points.coords.resize(static_cast<std::size_t>(g.points.size()));
    for (PointId p = 0; p < g.points.size(); ++p)
        out.points.coords[static_cast<std::size_t>(p)] = g.points.point(p)[0];
    out.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        const double w =
            std::abs(out.points.coords[static_cast<std::size_t>(e.u)] -
                     out.points.coords[static_cast<std::size_t>(e.v)]);
        out.edges.push_back({e.u, e.v, w});
    }
    return out;
}

NeighborMaps neighbor_maps(const AxisInstance& inst) {
    const auto& xs = inst.sorted_x();
    const auto& g = inst.graph();
    NeighborMaps nm;
    nm.left.resize(static_cast<std::size_t>(g.points.size()));
    nm.right.resize(static_cast<std::size_t>(g.points.size()));
    for (PointId p = 0; p < g.points.size(); ++p) {
        const std::int32_t ri = inst.required_index(p);
        if (ri >= 0) {
            nm.left[static_cast<std::size_t>(p)] = ri;
            nm.right[static_cast<std::size_t>(p)] = ri;
            continue;
        }
        const double x = g.points.point(p)[0];
        // first required strictly greater than x
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        std::int32_t right = it == xs.end() ? kNullNeighbor
                                            : static_cast<std::int32_t>(it - xs.begin());
        // nearest at-or-left: the preceding entry, or an exact match
        auto it2 = std::lower_bound(xs.begin(), xs.end(), x);
        std::int32_t left;
        if (it2 != xs.end() && *it2 == x) {
            left = static_cast<std::int32_t>(it2 - xs.begin());
            right = left;  // "including v itself"
        } else {
            left = it2 == xs.begin() ? kNullNeighbor
                                     : static_cast<std::int32_t>(it2 - xs.begin()) - 1;
        }
        nm.left[static_cast<std::size_t>(p)] = left;
        nm.right[static_cast<std::size_t>(p)] = right;
    }
    return nm;
}

GeometricGraph desteinerize(const AxisInstance& inst) {
    const NeighborMaps nm = neighbor_maps(inst);
    const auto& g = inst.graph();
    const auto& xs = inst.sorted_x();
    const auto& xs_point = inst.sorted_to_point();

    std::vector<std::uint64_t> packed;
    packed.reserve(g.edges.size() * 4);
    for (const auto& e : g.edges) {
        const std::int32_t us[2] = {nm.left[static_cast<std::size_t>(e.u)],
                                    nm.right[static_cast<std::size_t>(e.u)]};
        const std::int32_t vs[2] = {nm.left[static_cast<std::size_t>(e.v)],
                                    nm.right[static_cast<std::size_t>(e.v)]};
        for (std::int32_t a : us)
            for (std::int32_t b : vs) {
                if (a == kNullNeighbor || b == kNullNeighbor || a == b) continue;
                const std::uint32_t lo = static_cast<std::uint32_t>(std::min(a, b));
                const std::uint32_t hi = static_cast<std::uint32_t>(std::max(a, b));
                packed.push_back((static_cast<std::uint64_t>(lo) << 32) | hi);
            }
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

    GeometricGraph out;
    out.points.dim = 1;
    out.points.coords.resize(static_cast<std::size_t>(inst.required_count()));
    for (std::int32_t i = 0; i < inst.required_count(); ++i) {
        // output ids are the original required point ids 0..R-1
        out.points.coords[static_cast<std::size_t>(xs_point[static_cast<std::size_t>(i)])] =
            xs[static_cast<std::size_t>(i)];
    }
    out.edges.reserve(packed.size());
    for (std::uint64_t pe : packed) {
        const auto a = static_cast<std::int32_t>(pe >> 32);
        const auto b = static_cast<std::int32_t>(pe & 0xffffffffu);
        const PointId pa = xs_point[static_cast<std::size_t>(a)];
        const PointId pb = xs_point[static_cast<std::size_t>(b)];
        out.edges.push_back(
            {std::min(pa, pb), std::max(pa, pb),
             std::abs(xs[static_cast<std::size_t>(a)] - xs[static_cast<std::size_t>(b)])});
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const GeoEdge& x, const GeoEdge& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    return out;
}

namespace {

// Distance to every vertex after each relaxation round, recorded for one
// target; rounds = vertex count suffices for any simple path.
std::vector<double> hop_profile(const PointSet& pts, const std::vector<GeoEdge>& edges,
                                PointId source, PointId target, std::int64_t rounds) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(pts.size()), inf), next;
    dist[static_cast<std::size_t>(source)] = 0;
    next = dist;
    std::vector<double> profile;
    profile.reserve(static_cast<std::size_t>(rounds));
    for (std::int64_t r = 0; r < rounds; ++r) {
        for (const auto& e : edges) {
            const double du = dist[static_cast<std::size_t>(e.u)];
            const double dv = dist[static_cast<std::size_t>(e.v)];
            if (du + e.w < next[static_cast<std::size_t>(e.v)])
                next[static_cast<std::size_t>(e.v)] = du + e.w;
            if (dv + e.w < next[static_cast<std::size_t>(e.u)])
                next[static_cast<std::size_t>(e.u)] = dv + e.w;
        }
        dist = next;
        profile.push_back(dist[static_cast<std::size_t>(target)]);
    }
    return profile;
}

}  // namespace

TransferAudit transfer_audit(const AxisInstance& inst, std::int64_t samples, std::uint64_t seed) {
    TransferAudit audit;
    const GeometricGraph ht = project_to_axis(inst);
    const GeometricGraph hp = desteinerize(inst);
    const std::int32_t r = inst.required_count();
    if (r < 2) return audit;

    const std::int64_t rounds = inst.graph().points.size();
    Rng rng(seed);
    const std::int64_t all = static_cast<std::int64_t>(r) * (r - 1) / 2;
    const bool exhaustive = samples <= 0 || samples >= all;

    auto check_pair = [&](PointId u, PointId v) {
        ++audit.pairs_checked;
        auto pt = hop_profile(ht.points, ht.edges, u, v, rounds);
        auto pp = hop_profile(hp.points, hp.edges, u, v, rounds);
        for (std::size_t h = 0; h < pt.size(); ++h) {
            if (!std::isfinite(pt[h])) continue;
            if (pp[h] > pt[h] * (1 + 1e-9) + 1e-12) audit.hop_preserved = false;
            if (pt[h] > 0) audit.max_ratio = std::max(audit.max_ratio, pp[h] / pt[h]);
        }
    };

    if (exhaustive) {
        for (PointId u = 0; u < r; ++u)
            for (PointId v = u + 1; v < r; ++v) check_pair(u, v);
    } else {
        for (std::int64_t i = 0; i < samples; ++i) {
            auto u = static_cast<PointId>(rng.next_below(static_cast<std::uint64_t>(r)));
            auto v = static_cast<PointId>(rng.next_below(static_cast<std::uint64_t>(r)));
            if (u == v) continue;
            check_pair(std::min(u, v), std::max(u, v));
        }
    }
    return audit;
}

}  // namespace hopspan
