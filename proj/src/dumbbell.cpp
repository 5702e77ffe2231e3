#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hopspan/geo.hpp"

namespace hopspan {

namespace {

struct Box {
    std::vector<double> lo, hi;

    static Box of_point(std::span<const double> p) {
        Box b;
        b.lo.assign(p.begin(), p.end());
        b.hi.assign(p.begin(), p.end());
        return b;
    }
    void expand(const Box& o) {
        for (std::size_t d = 0; d < lo.size(); ++d) {
            lo[d] = std::min(lo[d], o.lo[d]);
            hi[d] = std::max(hi[d], o.hi[d]);
        }
    }
    void expand_point(std::span<const double> p) {
        for (std::size_t d = 0; d < lo.size(); ++d) {
            lo[d] = std::min(lo[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    }
    bool contains_box(const Box& o, double slack) const {
        for (std::size_t d = 0; d < lo.size(); ++d)
            if (o.lo[d] < lo[d] - slack || o.hi[d] > hi[d] + slack) return false;
        return true;
    }
    bool contains_point(std::span<const double> p, double slack) const {
        for (std::size_t d = 0; d < lo.size(); ++d)
            if (p[d] < lo[d] - slack || p[d] > hi[d] + slack) return false;
        return true;
    }
};

Box node_box(const SplitTree& st, std::int32_t v, double pad) {
    Box b;
    auto mn = st.box_min(v), mx = st.box_max(v);
    b.lo.resize(mn.size());
    b.hi.resize(mn.size());
    for (std::size_t d = 0; d < mn.size(); ++d) {
        b.lo[d] = mn[d] - pad;
        b.hi[d] = mx[d] + pad;
    }
    return b;
}

struct Dumbbell {
    std::int32_t a, b;  // split-tree nodes
    double len;
    std::int32_t level;
    std::int32_t cls;
    bool first_is_a = true;
    std::int32_t color = -1;
    std::int32_t group = -1;
};

struct Params {
    int modulus;
    double delta;
};

// Sizes the length-class modulus and head-region inflation so the worst-case
// representative walk stays within (1+eps): the long hop costs at most
// len*(1 + 2/s + 2*sqrt(d)*delta), each side pays 2(r + sqrt(d)*delta*len) to
// enter its head plus a geometric chain over lower levels of the class, and
// nesting needs lower-level region boxes (per-axis half-extent at most
// 2^(level+1)*(1 + 1/s + delta)) to fit inside inflated head boxes.
Params size_parameters(int dim, double eps, double s, const DumbbellConfig& cfg) {
    const double rd = std::sqrt(static_cast<double>(dim));
    const double target = (1.0 + eps) * (1.0 - 2.0 / s);
    const double floor_num = 1.0 + 6.0 / s;
    if (target <= floor_num)
        throw domain_error(
            "dumbbell cover: separation too small for eps (raise config.separation)");
    const double threshold = floor_num + 0.85 * (target - floor_num);
    for (int g = std::max(3, cfg.length_group); g <= 30; ++g) {
        const double rho = std::exp2(1.0 - g);
        if (1.0 - 2.0 * rho <= 0) continue;
        double delta =
            cfg.inflate > 0 ? cfg.inflate : 1.3 * 2.0 * rho * (1.0 + 1.0 / s) / (1.0 - 2.0 * rho);
        if (2.0 * rho * (1.0 + 1.0 / s + delta) > delta) continue;  // nesting unsatisfied
        const double chain = rho / (1.0 - rho) * (1.0 + 4.0 / s + 4.0 * rd * delta);
        const double num =
            1.0 + 2.0 / s + 2.0 * rd * delta + 2.0 * (2.0 * (1.0 / s + rd * delta) + chain);
        if (num <= threshold) return {g, delta};
    }
    throw domain_error("dumbbell cover: no feasible length grouping for eps");
}

std::int32_t floor_log2(double x) { return static_cast<std::int32_t>(std::ilogb(x)); }

// Fenwick tree for the later-related interval counts.
class Fenwick {
  public:
    explicit Fenwick(std::int32_t n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
    void add(std::int32_t i) {
        for (++i; i < static_cast<std::int32_t>(tree_.size()); i += i & -i) ++tree_[static_cast<std::size_t>(i)];
    }
    // count of inserted positions < i
    std::int32_t prefix(std::int32_t i) const {
        std::int32_t s = 0;
        for (; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
        return s;
    }

  private:
    std::vector<std::int32_t> tree_;
};

// Point-update / range-query OR over positions.
class OrTree {
  public:
    explicit OrTree(std::int32_t n) {
        size_ = 1;
        while (size_ < std::max(n, 1)) size_ *= 2;
        tree_.assign(static_cast<std::size_t>(2 * size_), 0);
    }
    void set(std::int32_t i, std::uint64_t mask) {
        i += size_;
        tree_[static_cast<std::size_t>(i)] |= mask;
        for (i /= 2; i >= 1; i /= 2)
            tree_[static_cast<std::size_t>(i)] =
                tree_[static_cast<std::size_t>(2 * i)] | tree_[static_cast<std::size_t>(2 * i + 1)];
    }
    std::uint64_t query(std::int32_t lo, std::int32_t hi) const {  // [lo, hi)
        std::uint64_t m = 0;
        for (lo += size_, hi += size_; lo < hi; lo /= 2, hi /= 2) {
            if (lo & 1) m |= tree_[static_cast<std::size_t>(lo++)];
            if (hi & 1) m |= tree_[static_cast<std::size_t>(--hi)];
        }
        return m;
    }

  private:
    std::int32_t size_;
    std::vector<std::uint64_t> tree_;
};

// Bottom-up assembly of one group's tree. Heads attach exactly the current
// roots that hold their node's points (plus bare leaves for new points), so a
// root's point set is always a union of side nodes of its own dumbbells.
class GroupBuilder {
  public:
    GroupBuilder(const PointSet& points, const SplitTree& st, double delta, CoverStats& stats)
        : points_(points), st_(st), delta_(delta), stats_(stats) {
        point_leaf_.assign(static_cast<std::size_t>(points.size()), kNoVertex);
    }

    void add(const Dumbbell& d) {
        const std::int32_t first = d.first_is_a ? d.a : d.b;
        const std::int32_t second = d.first_is_a ? d.b : d.a;
        Vertex a1 = anchor_for(first, d.len);
        Vertex a2 = anchor_for(second, d.len);
        if (a1 == a2) {  // both sides already share a root; nothing to join
            ++stats_.lock_events;
            return;
        }
        Vertex top = new_vertex(region_[static_cast<std::size_t>(a1)]);
        region_[static_cast<std::size_t>(top)].expand(region_[static_cast<std::size_t>(a2)]);
        rep_[static_cast<std::size_t>(top)] = rep_[static_cast<std::size_t>(a1)];
        attach(top, a1);
        attach(top, a2);
    }

    DumbbellTree finish() {
        std::vector<Vertex> roots;
        for (Vertex v = 0; v < static_cast<Vertex>(parent_.size()); ++v)
            if (dsu_[static_cast<std::size_t>(v)] == v) roots.push_back(v);
        std::vector<PointId> uncovered;
        for (PointId p = 0; p < points_.size(); ++p)
            if (point_leaf_[static_cast<std::size_t>(p)] == kNoVertex) uncovered.push_back(p);

        if (!(roots.size() == 1 && uncovered.empty())) {
            Box reg = roots.empty() ? Box::of_point(points_.point(uncovered[0]))
                                    : region_[static_cast<std::size_t>(roots[0])];
            Vertex gr = new_vertex(reg);
            for (Vertex r : roots) {
                region_[static_cast<std::size_t>(gr)].expand(region_[static_cast<std::size_t>(r)]);
                attach(gr, r);
            }
            for (PointId p : uncovered) {
                Vertex leaf = new_leaf(p);
                region_[static_cast<std::size_t>(gr)].expand_point(points_.point(p));
                attach(gr, leaf);
            }
            rep_[static_cast<std::size_t>(gr)] =
                roots.empty() ? uncovered[0] : rep_[static_cast<std::size_t>(roots[0])];
        }

        const std::size_t m = parent_.size();
        std::vector<std::vector<Vertex>> children(m);
        for (auto [p, c] : attach_order_) children[static_cast<std::size_t>(p)].push_back(c);
        std::vector<Color> colors(m);
        for (std::size_t v = 0; v < m; ++v)
            colors[v] = leaf_point_[v] >= 0 ? Color::Required : Color::Steiner;

        DumbbellTree dt;
        dt.tree = RootedSteinerTree::from_children(parent_, std::move(colors), children);
        dt.leaf_point = leaf_point_;
        dt.point_leaf = point_leaf_;
        dt.representative = rep_;
        stats_.max_tree_vertices =
            std::max(stats_.max_tree_vertices, static_cast<std::int64_t>(m));
        return dt;
    }

  private:
    Vertex new_vertex(Box region) {
        parent_.push_back(kNoVertex);
        dsu_.push_back(static_cast<Vertex>(parent_.size() - 1));
        rep_.push_back(-1);
        leaf_point_.push_back(-1);
        region_.push_back(std::move(region));
        return static_cast<Vertex>(parent_.size() - 1);
    }

    Vertex new_leaf(PointId p) {
        Vertex v = new_vertex(Box::of_point(points_.point(p)));
        rep_[static_cast<std::size_t>(v)] = p;
        leaf_point_[static_cast<std::size_t>(v)] = p;
        point_leaf_[static_cast<std::size_t>(p)] = v;
        return v;
    }

    void attach(Vertex parent, Vertex child) {
        parent_[static_cast<std::size_t>(child)] = parent;
        dsu_[static_cast<std::size_t>(child)] = parent;
        attach_order_.emplace_back(parent, child);
    }

    Vertex find(Vertex v) {
        while (dsu_[static_cast<std::size_t>(v)] != v) {
            dsu_[static_cast<std::size_t>(v)] =
                dsu_[static_cast<std::size_t>(dsu_[static_cast<std::size_t>(v)])];
            v = dsu_[static_cast<std::size_t>(v)];
        }
        return v;
    }

    Vertex anchor_for(std::int32_t node, double len) {
        const double slack = 1e-9 * len;
        Box side = node_box(st_, node, delta_ * len);

        std::vector<Vertex> needed;
        std::vector<PointId> missing;
        for (std::int32_t slot = st_.range_lo(node); slot < st_.range_hi(node); ++slot) {
            PointId p = st_.leaf_point(slot);
            Vertex leaf = point_leaf_[static_cast<std::size_t>(p)];
            if (leaf == kNoVertex)
                missing.push_back(p);
            else
                needed.push_back(find(leaf));
        }
        std::sort(needed.begin(), needed.end());
        needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
        std::sort(missing.begin(), missing.end());

        if (missing.empty() && needed.size() == 1) {
            Vertex r = needed[0];
            if (side.contains_box(region_[static_cast<std::size_t>(r)], slack)) return r;
            // Same-level chain sharing an enclosing first side: reuse while
            // the root's representative still lies in the head region.
            PointId rp = rep_[static_cast<std::size_t>(r)];
            if (rp >= 0 && side.contains_point(points_.point(rp), slack)) return r;
            ++stats_.lock_events;  // conflict grouping should prevent this
        } else {
            // Oversized roots are attached anyway; they are sound as long as
            // their representative lies in the head region (first-side chain).
            for (Vertex r : needed)
                if (!side.contains_box(region_[static_cast<std::size_t>(r)], slack) &&
                    !side.contains_point(points_.point(rep_[static_cast<std::size_t>(r)]), slack))
                    ++stats_.lock_events;
        }

        if (needed.size() + missing.size() == 1)
            return needed.empty() ? new_leaf(missing[0]) : needed[0];

        Box reg = needed.empty() ? Box::of_point(points_.point(missing[0]))
                                 : region_[static_cast<std::size_t>(needed[0])];
        Vertex h = new_vertex(std::move(reg));
        for (Vertex c : needed) {
            region_[static_cast<std::size_t>(h)].expand(region_[static_cast<std::size_t>(c)]);
            attach(h, c);
        }
        for (PointId p : missing) {
            Vertex leaf = new_leaf(p);
            region_[static_cast<std::size_t>(h)].expand_point(points_.point(p));
            attach(h, leaf);
        }
        rep_[static_cast<std::size_t>(h)] =
            needed.empty() ? missing[0] : rep_[static_cast<std::size_t>(needed[0])];
        return h;
    }

    const PointSet& points_;
    const SplitTree& st_;
    double delta_;
    CoverStats& stats_;
    std::vector<Vertex> parent_, dsu_;
    std::vector<PointId> rep_, leaf_point_, point_leaf_;
    std::vector<Box> region_;
    std::vector<std::pair<Vertex, Vertex>> attach_order_;
};

}  // namespace

TreeCover build_dumbbell_cover(const PointSet& points, double eps, const DumbbellConfig& config) {
    if (eps <= 0) throw domain_error("build_dumbbell_cover: eps must be positive");
    const PointId n = points.size();
    if (n < 1) throw domain_error("build_dumbbell_cover: empty point set");

    TreeCover cover;
    cover.eps = eps;

    if (n == 1) {
        DumbbellTree dt;
        dt.tree = RootedSteinerTree::from_parents({kNoVertex}, {Color::Required});
        dt.leaf_point = {0};
        dt.point_leaf = {0};
        dt.representative = {0};
        cover.trees.push_back(std::move(dt));
        cover.group_count = 1;
        cover.stats.max_tree_vertices = 1;
        return cover;
    }

    const double s = config.separation > 0 ? config.separation : std::max(16.0, 8.0 / eps + 8.0);
    SplitTree st(points);
    std::vector<WspdPair> pairs = build_wspd(st, s);
    Params prm = size_parameters(points.dim, eps, s, config);
    cover.stats.separation = s;
    cover.stats.group_modulus = prm.modulus;
    cover.stats.inflate = prm.delta;
    cover.stats.dumbbells = static_cast<std::int64_t>(pairs.size());

    std::vector<Dumbbell> ds;
    ds.reserve(pairs.size());
    for (const auto& p : pairs) {
        Dumbbell d;
        d.a = p.left;
        d.b = p.right;
        d.len = p.length;
        d.level = floor_log2(p.length);
        d.cls = ((d.level % prm.modulus) + prm.modulus) % prm.modulus;
        ds.push_back(d);
    }
    std::vector<std::int32_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
        return ds[static_cast<std::size_t>(x)].len < ds[static_cast<std::size_t>(y)].len;
    });

    // Coloring, class by class and level by level. Two same-level dumbbells
    // must land in different trees when they use laminar-related side nodes,
    // unless the earlier dumbbell's related side is its first side and is
    // contained in the later one; then its root keeps a representative inside
    // the later head region and can be reused as the anchor.
    std::vector<int> colors_per_class(static_cast<std::size_t>(prm.modulus), 0);
    {
        std::unordered_map<std::int64_t, std::vector<std::int32_t>> buckets;
        std::vector<std::int64_t> bucket_keys;
        for (std::int32_t idx : order) {
            const Dumbbell& d = ds[static_cast<std::size_t>(idx)];
            const std::int64_t key =
                (static_cast<std::int64_t>(d.cls) << 40) + d.level + (1 << 20);
            auto [it, fresh] = buckets.try_emplace(key);
            if (fresh) bucket_keys.push_back(key);
            it->second.push_back(idx);
        }
        const std::int32_t npos = n;
        for (std::int64_t key : bucket_keys) {
            const auto& list = buckets[key];
            const int cls = static_cast<int>(key >> 40);

            // Reverse sweep: how many later dumbbells of this level use a
            // side laminar-related to each side.
            std::vector<std::int32_t> later_a(list.size()), later_b(list.size());
            {
                Fenwick starts(npos + 1), ends(npos + 1);
                for (std::size_t i = list.size(); i-- > 0;) {
                    const Dumbbell& d = ds[static_cast<std::size_t>(list[i])];
                    auto related = [&](std::int32_t nd) {
                        const std::int32_t lo = st.range_lo(nd), hi = st.range_hi(nd);
                        // open at lo (strict ancestors) + starts inside [lo, hi)
                        const std::int32_t open = starts.prefix(lo) - ends.prefix(lo + 1);
                        const std::int32_t inside = starts.prefix(hi) - starts.prefix(lo);
                        return open + inside;
                    };
                    later_a[i] = related(d.a);
                    later_b[i] = related(d.b);
                    for (std::int32_t nd : {d.a, d.b}) {
                        starts.add(st.range_lo(nd));
                        ends.add(st.range_hi(nd));
                    }
                }
            }

            // Forward sweep: bans and greedy colors.
            std::unordered_map<std::int32_t, std::pair<std::uint64_t, std::uint64_t>> node_bans;
            OrTree desc_bans(npos + 1);
            int used = 0;
            for (std::size_t i = 0; i < list.size(); ++i) {
                Dumbbell& d = ds[static_cast<std::size_t>(list[i])];
                d.first_is_a = later_a[i] > later_b[i] ||
                               (later_a[i] == later_b[i] && d.a <= d.b);

                std::uint64_t excluded = 0;
                for (std::int32_t nd : {d.a, d.b}) {
                    // bans on descendants (second sides strictly inside nd)
                    excluded |= desc_bans.query(st.range_lo(nd), st.range_hi(nd));
                    // bans on nd itself and on ancestors
                    std::int32_t walk = nd;
                    bool self = true;
                    while (walk >= 0) {
                        auto it = node_bans.find(walk);
                        if (it != node_bans.end()) {
                            excluded |= it->second.first;          // all related
                            if (!self) excluded |= it->second.second;  // strict only
                        }
                        walk = st.parent(walk);
                        self = false;
                    }
                }
                std::int32_t c = static_cast<std::int32_t>(std::countr_one(excluded));
                if (c >= 63)
                    throw capacity_error("build_dumbbell_cover: conflict coloring needs > 63 colors");
                d.color = c;
                used = std::max(used, c + 1);
                const std::uint64_t bit = std::uint64_t{1} << c;

                const std::int32_t first = d.first_is_a ? d.a : d.b;
                const std::int32_t second = d.first_is_a ? d.b : d.a;
                const std::int32_t later_first = d.first_is_a ? later_a[i] : later_b[i];
                const std::int32_t later_second = d.first_is_a ? later_b[i] : later_a[i];
                if (later_second > 0) {
                    node_bans[second].first |= bit;     // any related later side
                    desc_bans.set(st.range_lo(second), bit);
                }
                if (later_first > 0) node_bans[first].second |= bit;  // strictly smaller sides
            }
            colors_per_class[static_cast<std::size_t>(cls)] =
                std::max(colors_per_class[static_cast<std::size_t>(cls)], used);
        }
    }
    cover.stats.colors_per_class = colors_per_class;

    std::vector<std::int32_t> group_base(static_cast<std::size_t>(prm.modulus) + 1, 0);
    for (int c = 0; c < prm.modulus; ++c)
        group_base[static_cast<std::size_t>(c) + 1] =
            group_base[static_cast<std::size_t>(c)] + colors_per_class[static_cast<std::size_t>(c)];
    const int groups = group_base[static_cast<std::size_t>(prm.modulus)];
    if (groups > config.max_trees) {
        std::ostringstream os;
        os << "build_dumbbell_cover: " << groups << " trees exceed max_trees=" << config.max_trees
           << "; colors per class:";
        for (int c : colors_per_class) os << ' ' << c;
        throw capacity_error(os.str());
    }
    for (auto& d : ds) d.group = group_base[static_cast<std::size_t>(d.cls)] + d.color;

    std::vector<std::vector<std::int32_t>> per_group(static_cast<std::size_t>(groups));
    for (std::int32_t idx : order)
        per_group[static_cast<std::size_t>(ds[static_cast<std::size_t>(idx)].group)].push_back(idx);

    for (int g = 0; g < groups; ++g) {
        GroupBuilder gb(points, st, prm.delta, cover.stats);
        for (std::int32_t idx : per_group[static_cast<std::size_t>(g)])
            gb.add(ds[static_cast<std::size_t>(idx)]);
        cover.trees.push_back(gb.finish());
    }
    cover.group_count = groups;
    return cover;
}

}  // namespace hopspan
