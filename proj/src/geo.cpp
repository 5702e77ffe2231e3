#include "hopspan/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hopspan/tree_spanner.hpp"

namespace hopspan {

double PointSet::distance(PointId a, PointId b) const {
    double s = 0;
    auto pa = point(a), pb = point(b);
    for (int i = 0; i < dim; ++i) {
        double d = pa[i] - pb[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool PointSet::has_duplicates() const {
    std::vector<PointId> idx(static_cast<std::size_t>(size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](PointId a, PointId b) {
        auto pa = point(a), pb = point(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });
    for (std::size_t i = 1; i < idx.size(); ++i) {
        auto pa = point(idx[i - 1]), pb = point(idx[i]);
        if (std::equal(pa.begin(), pa.end(), pb.begin())) return true;
    }
    return false;
}

SplitTree::SplitTree(const PointSet& points) {
    dim_ = points.dim;
    const PointId n = points.size();
    if (n < 1) throw validation_error("split tree: need at least one point");
    if (points.has_duplicates()) throw validation_error("split tree: duplicate points");
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);

    const std::size_t max_nodes = static_cast<std::size_t>(2 * n - 1);
    left_.reserve(max_nodes);
    right_.reserve(max_nodes);
    lo_.reserve(max_nodes);
    hi_.reserve(max_nodes);
    bmin_.reserve(max_nodes * dim_);
    bmax_.reserve(max_nodes * dim_);
    ctr_.reserve(max_nodes * dim_);
    rad_.reserve(max_nodes);

    auto new_node = [&](std::int32_t lo, std::int32_t hi) {
        const auto id = static_cast<std::int32_t>(lo_.size());
        lo_.push_back(lo);
        hi_.push_back(hi);
        left_.push_back(-1);
        right_.push_back(-1);
        parent_.push_back(-1);
        double r2 = 0;
        for (int d = 0; d < dim_; ++d) {
            double mn = points.point(order_[static_cast<std::size_t>(lo)])[d];
            double mx = mn;
            for (std::int32_t i = lo + 1; i < hi; ++i) {
                double c = points.point(order_[static_cast<std::size_t>(i)])[d];
                mn = std::min(mn, c);
                mx = std::max(mx, c);
            }
            bmin_.push_back(mn);
            bmax_.push_back(mx);
            ctr_.push_back((mn + mx) / 2);
            r2 += (mx - mn) * (mx - mn) / 4;
        }
        rad_.push_back(std::sqrt(r2));
        return id;
    };

    struct Task {
        std::int32_t node;
    };
    std::vector<Task> stack{{new_node(0, n)}};
    while (!stack.empty()) {
        std::int32_t v = stack.back().node;
        stack.pop_back();
        const std::int32_t lo = lo_[v], hi = hi_[v];
        if (hi - lo <= 1) continue;
        // Split the longest box dimension at the midpoint of the extent.
        int sd = 0;
        double best = -1;
        for (int d = 0; d < dim_; ++d) {
            double e = bmax_[static_cast<std::size_t>(v) * dim_ + d] -
                       bmin_[static_cast<std::size_t>(v) * dim_ + d];
            if (e > best) {
                best = e;
                sd = d;
            }
        }
        const double mid = (bmin_[static_cast<std::size_t>(v) * dim_ + sd] +
                            bmax_[static_cast<std::size_t>(v) * dim_ + sd]) /
                           2;
        auto begin = order_.begin() + lo, end = order_.begin() + hi;
        auto pivot = std::partition(begin, end, [&](PointId p) {
            return points.point(p)[sd] < mid;
        });
        std::int32_t cut = lo + static_cast<std::int32_t>(pivot - begin);
        if (cut == lo || cut == hi) {
            // Degenerate floating-point midpoint; fall back to the median of
            // the split coordinate.
            std::nth_element(begin, begin + (hi - lo) / 2, end, [&](PointId a, PointId b) {
                return points.point(a)[sd] < points.point(b)[sd];
            });
            cut = lo + (hi - lo) / 2;
            if (cut == lo) cut = lo + 1;
        }
        // Deterministic order inside each side.
        std::sort(order_.begin() + lo, order_.begin() + cut);
        std::sort(order_.begin() + cut, order_.begin() + hi);
        const std::int32_t l = new_node(lo, cut);
        const std::int32_t r = new_node(cut, hi);
        left_[v] = l;
        right_[v] = r;
        parent_[l] = v;
        parent_[r] = v;
        stack.push_back({r});
        stack.push_back({l});
    }
}

SplitTree build_split_tree(const PointSet& points) { return SplitTree(points); }

namespace {

double center_distance(const SplitTree& t, std::int32_t a, std::int32_t b) {
    double s = 0;
    auto ca = t.center(a), cb = t.center(b);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        double d = ca[i] - cb[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool well_separated(const SplitTree& t, std::int32_t a, std::int32_t b, double s) {
    const double rmax = std::max(t.radius(a), t.radius(b));
    return center_distance(t, a, b) - t.radius(a) - t.radius(b) >= s * rmax;
}

}  // namespace

std::vector<WspdPair> build_wspd(const SplitTree& tree, double s) {
    if (s <= 0) throw domain_error("build_wspd: separation must be positive");
    std::vector<WspdPair> out;
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    std::vector<std::int32_t> nodes{tree.root()};
    while (!nodes.empty()) {
        std::int32_t v = nodes.back();
        nodes.pop_back();
        if (tree.is_leaf(v)) continue;
        pairs.emplace_back(tree.left(v), tree.right(v));
        nodes.push_back(tree.left(v));
        nodes.push_back(tree.right(v));
    }
    while (!pairs.empty()) {
        auto [a, b] = pairs.back();
        pairs.pop_back();
        if (well_separated(tree, a, b, s)) {
            out.push_back({a, b, center_distance(tree, a, b)});
            continue;
        }
        // Split the node with the larger radius (ties: larger range).
        bool split_a = tree.radius(a) > tree.radius(b) ||
                       (tree.radius(a) == tree.radius(b) &&
                        tree.range_size(a) >= tree.range_size(b));
        if (tree.is_leaf(a) && tree.is_leaf(b))
            throw validation_error("build_wspd: leaf pair not separated (duplicate points?)");
        if (split_a && tree.is_leaf(a)) split_a = false;
        if (!split_a && tree.is_leaf(b)) split_a = true;
        if (split_a) {
            pairs.emplace_back(tree.left(a), b);
            pairs.emplace_back(tree.right(a), b);
        } else {
            pairs.emplace_back(a, tree.left(b));
            pairs.emplace_back(a, tree.right(b));
        }
    }
    return out;
}

double rep_walk_weight(const PointSet& points, const DumbbellTree& dt, PointId u, PointId v) {
    if (u < 0 || v < 0 || u >= points.size() || v >= points.size())
        throw validation_error("rep_walk_weight: unknown point");
    if (u == v) return 0.0;
    Vertex a = dt.point_leaf[static_cast<std::size_t>(u)];
    Vertex b = dt.point_leaf[static_cast<std::size_t>(v)];
    const auto& t = dt.tree;
    std::int64_t da = vertex_depth(t, a), db = vertex_depth(t, b);
    double w = 0;
    auto step = [&](Vertex x) {
        Vertex p = t.parent(x);
        w += points.distance(dt.representative[static_cast<std::size_t>(x)],
                             dt.representative[static_cast<std::size_t>(p)]);
        return p;
    };
    while (da > db) {
        a = step(a);
        --da;
    }
    while (db > da) {
        b = step(b);
        --db;
    }
    while (a != b) {
        a = step(a);
        b = step(b);
    }
    return w;
}

GeometricGraph euclidean_spanner(const PointSet& points, int k, double eps,
                                 const DumbbellConfig& config, EuclideanSpannerStats* stats) {
    if (k < 2) throw domain_error("euclidean_spanner: k must be >= 2");
    if (eps <= 0) throw domain_error("euclidean_spanner: eps must be positive");
    TreeCover cover = build_dumbbell_cover(points, eps, config);

    std::vector<std::uint64_t> packed;
    for (const auto& dt : cover.trees) {
        TreeSpannerResult r = spanner_for_tree(dt.tree, k);
        for (auto [pu, pv] : r.edges.edges) {
            PointId a = dt.representative[static_cast<std::size_t>(r.map.to_old[static_cast<std::size_t>(pu)])];
            PointId b = dt.representative[static_cast<std::size_t>(r.map.to_old[static_cast<std::size_t>(pv)])];
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            packed.push_back((static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                             static_cast<std::uint32_t>(b));
        }
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

    GeometricGraph g;
    g.points = points;
    g.edges.reserve(packed.size());
    for (std::uint64_t e : packed) {
        auto a = static_cast<PointId>(e >> 32);
        auto b = static_cast<PointId>(e & 0xffffffffu);
        g.edges.push_back({a, b, points.distance(a, b)});
    }

    if (stats) {
        stats->trees = cover.group_count;
        stats->edges = static_cast<std::int64_t>(g.edges.size());
        stats->budget_per_tree = edge_budget(points.size(), k);
        stats->cover = cover.stats;
    }
    return g;
}

}  // namespace hopspan
