#include "hopspan/steiner_tree.hpp"

#include <algorithm>
#include <atomic>

#include "hopspan/rng.hpp"

namespace hopspan {

namespace {
std::atomic<std::uint64_t> g_tree_id{1};
}

void RootedSteinerTree::finalize() {
    const auto n = static_cast<std::size_t>(size());
    if (color_.size() != n) throw validation_error("tree: color/parent size mismatch");
    required_size_ = 0;
    for (auto c : color_)
        if (c == static_cast<std::uint8_t>(Color::Required)) ++required_size_;
    root_ = kNoVertex;
    for (std::size_t v = 0; v < n; ++v) {
        if (parent_[v] == kNoVertex) {
            if (root_ != kNoVertex) throw validation_error("tree: more than one root");
            root_ = static_cast<Vertex>(v);
        } else if (parent_[v] < 0 || parent_[v] >= static_cast<Vertex>(n)) {
            throw validation_error("tree: parent id out of range");
        }
    }
    if (n > 0 && root_ == kNoVertex) throw validation_error("tree: no root");
    // Reachability from the root doubles as the cycle check.
    if (n > 0) {
        std::vector<std::int32_t> dist(n, -1);
        dist[static_cast<std::size_t>(root_)] = 0;
        std::vector<Vertex> stack{root_};
        std::size_t seen = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex c : children(v)) {
                if (dist[static_cast<std::size_t>(c)] != -1)
                    throw validation_error("tree: vertex reached twice");
                dist[static_cast<std::size_t>(c)] = 0;
                ++seen;
                stack.push_back(c);
            }
        }
        if (seen != n) throw validation_error("tree: not connected (cycle among non-root vertices)");
    }
    id_ = g_tree_id.fetch_add(1, std::memory_order_relaxed);
}

RootedSteinerTree RootedSteinerTree::from_parents(std::vector<Vertex> parent,
                                                  std::vector<Color> color) {
    RootedSteinerTree t;
    const std::size_t n = parent.size();
    t.parent_ = std::move(parent);
    t.color_.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.color_[i] = static_cast<std::uint8_t>(color[i]);
    t.child_off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (t.parent_[v] != kNoVertex) ++t.child_off_[static_cast<std::size_t>(t.parent_[v]) + 1];
    for (std::size_t i = 1; i <= n; ++i) t.child_off_[i] += t.child_off_[i - 1];
    t.child_list_.resize(n > 0 ? n - 1 : 0);
    std::vector<std::int32_t> cursor(t.child_off_.begin(), t.child_off_.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {  // ascending v = ascending child order
        Vertex p = t.parent_[v];
        if (p != kNoVertex)
            t.child_list_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p)]++)] =
                static_cast<Vertex>(v);
    }
    t.finalize();
    return t;
}

RootedSteinerTree RootedSteinerTree::from_children(std::vector<Vertex> parent,
                                                   std::vector<Color> color,
                                                   const std::vector<std::vector<Vertex>>& children) {
    RootedSteinerTree t;
    const std::size_t n = parent.size();
    if (children.size() != n) throw validation_error("tree: children size mismatch");
    t.parent_ = std::move(parent);
    t.color_.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.color_[i] = static_cast<std::uint8_t>(color[i]);
    t.child_off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        t.child_off_[v + 1] = t.child_off_[v] + static_cast<std::int32_t>(children[v].size());
    t.child_list_.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex c : children[v]) {
            if (c < 0 || c >= static_cast<Vertex>(n) ||
                t.parent_[static_cast<std::size_t>(c)] != static_cast<Vertex>(v))
                throw validation_error("tree: children/parent mismatch");
            t.child_list_.push_back(c);
        }
    t.finalize();
    return t;
}

std::span<const Vertex> RootedSteinerTree::children(Vertex v) const {
    const auto i = check(v);
    return {child_list_.data() + child_off_[i],
            static_cast<std::size_t>(child_off_[i + 1] - child_off_[i])};
}

std::vector<Vertex> RootedSteinerTree::required_vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(required_size_));
    for (Vertex v = 0; v < size(); ++v)
        if (is_required(v)) out.push_back(v);
    return out;
}

VertexMap VertexMap::identity(std::int64_t n) {
    VertexMap m;
    m.to_new.resize(static_cast<std::size_t>(n));
    m.to_old.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        m.to_new[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
        m.to_old[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    }
    return m;
}

VertexMap VertexMap::compose(const VertexMap& next) const {
    VertexMap out;
    out.to_new.assign(to_new.size(), kNoVertex);
    out.to_old.resize(next.to_old.size());
    for (std::size_t a = 0; a < to_new.size(); ++a) {
        Vertex b = to_new[a];
        if (b != kNoVertex) {
            Vertex c = next.to_new[static_cast<std::size_t>(b)];
            out.to_new[a] = c;
        }
    }
    for (std::size_t c = 0; c < next.to_old.size(); ++c)
        out.to_old[c] = to_old[static_cast<std::size_t>(next.to_old[c])];
    return out;
}

namespace {

// Iterative post-order: emits vertices of t with all children before parents.
std::vector<Vertex> post_order(const RootedSteinerTree& t) {
    std::vector<Vertex> order;
    if (t.empty()) return order;
    order.reserve(static_cast<std::size_t>(t.size()));
    // Reverse-preorder trick: push root, emit to a stack-order list, reverse.
    std::vector<Vertex> stack{t.root()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex c : t.children(v)) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace

PruneResult prune(const RootedSteinerTree& t, PruneStats* stats) {
    PruneResult res;
    const auto n = static_cast<std::size_t>(t.size());
    std::int64_t visits = 0;
    if (n == 0) {
        res.map = VertexMap{};
        if (stats) stats->vertex_visits = 0;
        return res;
    }

    // Pass 1 (post-order): count child subtrees that contain required vertices.
    std::vector<std::int32_t> req_branches(n, 0);  // children subtrees with required
    std::vector<std::uint8_t> has_req(n, 0);
    const std::vector<Vertex> order = post_order(t);
    for (Vertex v : order) {
        ++visits;
        const auto vi = static_cast<std::size_t>(v);
        if (t.is_required(v)) has_req[vi] = 1;
        Vertex p = t.parent(v);
        if (p != kNoVertex && has_req[vi]) {
            has_req[static_cast<std::size_t>(p)] = 1;
            ++req_branches[static_cast<std::size_t>(p)];
        }
    }

    // keep(v): required, or Steiner LCA of required pairs from >= 2 branches.
    auto keep = [&](Vertex v) {
        return t.is_required(v) || req_branches[static_cast<std::size_t>(v)] >= 2;
    };

    // Pass 2 (preorder): assign new ids and attach each kept vertex to its
    // nearest kept ancestor; child order follows the original DFS order.
    res.map.to_new.assign(n, kNoVertex);
    std::vector<Vertex> new_parent;
    std::vector<Color> new_color;
    std::vector<std::vector<Vertex>> new_children;
    // Stack entries: (vertex, nearest kept ancestor's new id).
    std::vector<std::pair<Vertex, Vertex>> stack;
    stack.emplace_back(t.root(), kNoVertex);
    while (!stack.empty()) {
        auto [v, anc] = stack.back();
        stack.pop_back();
        ++visits;
        const auto vi = static_cast<std::size_t>(v);
        if (!has_req[vi]) continue;  // whole subtree is redundant
        Vertex next_anc = anc;
        if (keep(v)) {
            const auto nv = static_cast<Vertex>(new_parent.size());
            res.map.to_new[vi] = nv;
            res.map.to_old.push_back(v);
            new_parent.push_back(anc);
            new_color.push_back(t.color(v));
            new_children.emplace_back();
            if (anc != kNoVertex) new_children[static_cast<std::size_t>(anc)].push_back(nv);
            next_anc = nv;
        }
        auto cs = t.children(v);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.emplace_back(*it, next_anc);
    }

    res.tree = RootedSteinerTree::from_children(std::move(new_parent), std::move(new_color),
                                                new_children);
    if (stats) stats->vertex_visits = visits;
    return res;
}

std::vector<Vertex> useful_set_brute(const RootedSteinerTree& t) {
    std::vector<Vertex> req = t.required_vertices();
    std::vector<std::uint8_t> useful(static_cast<std::size_t>(t.size()), 0);
    for (std::size_t i = 0; i < req.size(); ++i)
        for (std::size_t j = i + 1; j < req.size(); ++j) {
            Vertex l = lca_brute(t, req[i], req[j]);
            if (!t.is_required(l)) useful[static_cast<std::size_t>(l)] = 1;
        }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.size(); ++v)
        if (useful[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<Vertex> useful_set_counts(const RootedSteinerTree& t) {
    const auto n = static_cast<std::size_t>(t.size());
    std::vector<std::int32_t> req_branches(n, 0);
    std::vector<std::uint8_t> has_req(n, 0);
    for (Vertex v : post_order(t)) {
        const auto vi = static_cast<std::size_t>(v);
        if (t.is_required(v)) has_req[vi] = 1;
        Vertex p = t.parent(v);
        if (p != kNoVertex && has_req[vi]) {
            has_req[static_cast<std::size_t>(p)] = 1;
            ++req_branches[static_cast<std::size_t>(p)];
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.size(); ++v)
        if (!t.is_required(v) && req_branches[static_cast<std::size_t>(v)] >= 2) out.push_back(v);
    return out;
}

std::int64_t vertex_depth(const RootedSteinerTree& t, Vertex v) {
    std::int64_t d = 0;
    while (t.parent(v) != kNoVertex) {
        v = t.parent(v);
        ++d;
    }
    return d;
}

std::vector<Vertex> tree_path(const RootedSteinerTree& t, Vertex u, Vertex v) {
    std::int64_t du = vertex_depth(t, u), dv = vertex_depth(t, v);
    std::vector<Vertex> up, down;
    Vertex a = u, b = v;
    while (du > dv) {
        up.push_back(a);
        a = t.parent(a);
        --du;
    }
    while (dv > du) {
        down.push_back(b);
        b = t.parent(b);
        --dv;
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = t.parent(a);
        b = t.parent(b);
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::int64_t depth(const RootedSteinerTree& t) {
    if (t.empty()) return -1;
    std::int64_t best = 0;
    std::vector<std::pair<Vertex, std::int64_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (Vertex c : t.children(v)) stack.emplace_back(c, d + 1);
    }
    return best;
}

Vertex lca_brute(const RootedSteinerTree& t, Vertex u, Vertex v) {
    std::vector<std::uint8_t> mark(static_cast<std::size_t>(t.size()), 0);
    for (Vertex a = u;; a = t.parent(a)) {
        mark[static_cast<std::size_t>(a)] = 1;
        if (t.parent(a) == kNoVertex) break;
    }
    for (Vertex b = v;; b = t.parent(b)) {
        if (mark[static_cast<std::size_t>(b)]) return b;
        if (t.parent(b) == kNoVertex) break;
    }
    throw validation_error("lca_brute: disconnected vertices");
}

namespace {

bool is_subsequence(const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < big.size() && i < small.size(); ++j)
        if (big[j] == small[i]) ++i;
    return i == small.size();
}

}  // namespace

bool is_monotone_preserving_brute(const RootedSteinerTree& t, const RootedSteinerTree& t2,
                                  const VertexMap& map, std::int64_t pair_sample,
                                  std::uint64_t seed) {
    if (static_cast<std::int64_t>(map.to_new.size()) != t.size() ||
        static_cast<std::int64_t>(map.to_old.size()) != t2.size())
        throw validation_error("is_monotone_preserving_brute: map does not match trees");
    std::vector<Vertex> req = t.required_vertices();
    for (Vertex r : req) {
        Vertex m = map.to_new[static_cast<std::size_t>(r)];
        if (m == kNoVertex || !t2.is_required(m))
            throw validation_error("is_monotone_preserving_brute: required set not preserved");
    }

    auto check_pair = [&](Vertex ru, Vertex rv) {
        Vertex mu = map.to_new[static_cast<std::size_t>(ru)];
        Vertex mv = map.to_new[static_cast<std::size_t>(rv)];
        std::vector<Vertex> p2 = tree_path(t2, mu, mv);
        for (Vertex& x : p2) x = map.to_old[static_cast<std::size_t>(x)];
        return is_subsequence(p2, tree_path(t, ru, rv));
    };

    const auto r = static_cast<std::int64_t>(req.size());
    if (pair_sample <= 0 || pair_sample >= r * (r - 1) / 2) {
        for (std::size_t i = 0; i < req.size(); ++i)
            for (std::size_t j = i + 1; j < req.size(); ++j)
                if (!check_pair(req[i], req[j])) return false;
        return true;
    }
    Rng rng(seed);
    for (std::int64_t s = 0; s < pair_sample; ++s) {
        auto i = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(r)));
        auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(r)));
        if (i == j) continue;
        if (!check_pair(req[i], req[j])) return false;
    }
    return true;
}

}  // namespace hopspan
