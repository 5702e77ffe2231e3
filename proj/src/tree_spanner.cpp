#include "hopspan/tree_spanner.hpp"

#include <algorithm>

#include "hopspan/decomp.hpp"

namespace hopspan {

namespace {

std::uint64_t pack(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// Confirms every Steiner vertex is the LCA of a required pair.
bool is_pruned(const RootedSteinerTree& t) {
    const auto n = static_cast<std::size_t>(t.size());
    std::vector<std::int32_t> req_branches(n, 0);
    std::vector<std::uint8_t> has_req(n, 0);
    // children-before-parent order
    std::vector<Vertex> order;
    order.reserve(n);
    if (!t.empty()) {
        std::vector<Vertex> stack{t.root()};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (Vertex c : t.children(v)) stack.push_back(c);
        }
        std::reverse(order.begin(), order.end());
    }
    for (Vertex v : order) {
        const auto vi = static_cast<std::size_t>(v);
        if (t.is_required(v)) has_req[vi] = 1;
        Vertex p = t.parent(v);
        if (p != kNoVertex && has_req[vi]) {
            has_req[static_cast<std::size_t>(p)] = 1;
            ++req_branches[static_cast<std::size_t>(p)];
        }
    }
    for (Vertex v = 0; v < t.size(); ++v)
        if (!t.is_required(v) && req_branches[static_cast<std::size_t>(v)] < 2) return false;
    return true;
}

struct Frame {
    RootedSteinerTree tree;
    std::vector<Vertex> to_ambient;  // frame id -> ambient id
    std::int64_t req;
    int k;
};

void emit_tree_edges(const Frame& f, std::vector<std::uint64_t>& out) {
    for (Vertex v = 0; v < f.tree.size(); ++v) {
        Vertex p = f.tree.parent(v);
        if (p != kNoVertex)
            out.push_back(pack(f.to_ambient[static_cast<std::size_t>(v)],
                               f.to_ambient[static_cast<std::size_t>(p)]));
    }
}

}  // namespace

bool ShortcutEdgeSet::contains(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

ShortcutEdgeSet tree_one_spanner(const RootedSteinerTree& t, std::int64_t n, int k,
                                 SpannerStats* stats, CutThreshold variant) {
    slow_funcs::AlphaEvaluator ae(std::max(2, k), std::max<std::int64_t>(n, 4));
    return tree_one_spanner(t, n, k, ae, stats, variant);
}

ShortcutEdgeSet tree_one_spanner(const RootedSteinerTree& t, std::int64_t n, int k,
                                 const slow_funcs::AlphaEvaluator& ae, SpannerStats* stats,
                                 CutThreshold variant) {
    if (k < 2) throw domain_error("tree_one_spanner: k must be >= 2");
    if (n != t.required_size()) throw validation_error("tree_one_spanner: n != |R(T)|");
    if (!is_pruned(t)) throw validation_error("tree_one_spanner: tree has a redundant vertex");

    SpannerStats local;
    SpannerStats& st = stats ? *stats : local;
    st = SpannerStats{};

    std::vector<std::uint64_t> out;
    std::vector<Frame> work;
    {
        std::vector<Vertex> ident(static_cast<std::size_t>(t.size()));
        for (Vertex v = 0; v < t.size(); ++v) ident[static_cast<std::size_t>(v)] = v;
        work.push_back(Frame{t, std::move(ident), n, k});
    }

    bool top_frame = true;
    while (!work.empty()) {
        Frame f = std::move(work.back());
        work.pop_back();
        ++st.frames;
        st.operations += f.tree.size();

        if (f.req <= f.k) {
            emit_tree_edges(f, out);
            top_frame = false;
            continue;
        }
        if (f.req == f.k + 1) {
            emit_tree_edges(f, out);
            auto cs = f.tree.children(f.tree.root());
            if (cs.size() == 2)
                out.push_back(pack(f.to_ambient[static_cast<std::size_t>(cs[0])],
                                   f.to_ambient[static_cast<std::size_t>(cs[1])]));
            top_frame = false;
            continue;
        }

        // Step 1: ell = alpha'_{k-2}(n) and the cut vertices.
        const std::int64_t ell = variant == CutThreshold::AlphaPrime
                                     ? ae.alpha_prime(f.k - 2, f.req)
                                     : ae.alpha(f.k - 2, f.req);
        if (top_frame) st.top_ell = ell;
        top_frame = false;
        Decomposition dec = decompose(f.tree, ell);
        st.operations += dec.vertex_visits;
        const auto& cv = dec.cut_vertices;

        // Step 2: E' connecting the cut vertices.
        if (f.k == 3) {
            for (std::size_t i = 0; i < cv.size(); ++i)
                for (std::size_t j = i + 1; j < cv.size(); ++j)
                    out.push_back(pack(f.to_ambient[static_cast<std::size_t>(cv[i])],
                                       f.to_ambient[static_cast<std::size_t>(cv[j])]));
            st.operations += static_cast<std::int64_t>(cv.size() * (cv.size() - 1) / 2);
        } else if (f.k >= 4) {
            // Copy of T recolored so that R(tau) = CV, then pruned and solved
            // with diameter budget k-2.
            std::vector<Vertex> par(static_cast<std::size_t>(f.tree.size()));
            std::vector<Color> col(static_cast<std::size_t>(f.tree.size()), Color::Steiner);
            std::vector<std::vector<Vertex>> ch(static_cast<std::size_t>(f.tree.size()));
            for (Vertex v = 0; v < f.tree.size(); ++v) {
                par[static_cast<std::size_t>(v)] = f.tree.parent(v);
                auto cs = f.tree.children(v);
                ch[static_cast<std::size_t>(v)].assign(cs.begin(), cs.end());
            }
            for (Vertex v : cv) col[static_cast<std::size_t>(v)] = Color::Required;
            RootedSteinerTree tau =
                RootedSteinerTree::from_children(std::move(par), std::move(col), ch);
            PruneStats ps;
            PruneResult pr = prune(tau, &ps);
            st.operations += ps.vertex_visits;
            Frame sub;
            sub.tree = std::move(pr.tree);
            sub.to_ambient.resize(pr.map.to_old.size());
            for (std::size_t i = 0; i < pr.map.to_old.size(); ++i)
                sub.to_ambient[i] =
                    f.to_ambient[static_cast<std::size_t>(pr.map.to_old[i])];
            sub.req = static_cast<std::int64_t>(cv.size());
            sub.k = f.k - 2;
            work.push_back(std::move(sub));
        }

        // Step 4: E'' joins each required non-cut vertex to every border
        // vertex of its subtree.
        std::int64_t e2 = 0;
        for (std::size_t i = 0; i < dec.subtrees.size(); ++i) {
            const auto& sub = dec.subtrees[i];
            const auto& border = dec.borders[i];
            if (border.empty()) continue;
            for (Vertex v : sub.map.to_old) {
                if (!f.tree.is_required(v)) continue;
                for (Vertex u : border) {
                    out.push_back(pack(f.to_ambient[static_cast<std::size_t>(u)],
                                       f.to_ambient[static_cast<std::size_t>(v)]));
                    ++e2;
                }
            }
        }
        st.e_double_prime += e2;
        st.operations += e2;
        if (f.req > 0)
            st.max_e2_ratio =
                std::max(st.max_e2_ratio, static_cast<double>(e2) / static_cast<double>(f.req));

        // Step 5: recurse on each pruned subtree with the same k.
        for (auto& sub : dec.subtrees) {
            const std::int64_t ri = sub.tree.required_size();
            if (ri == 0) continue;  // prune would erase it
            PruneStats ps;
            PruneResult pr = prune(sub.tree, &ps);
            st.operations += ps.vertex_visits;
            Frame nf;
            nf.to_ambient.resize(pr.map.to_old.size());
            for (std::size_t i = 0; i < pr.map.to_old.size(); ++i) {
                Vertex mid = sub.map.to_old[static_cast<std::size_t>(pr.map.to_old[i])];
                nf.to_ambient[i] = f.to_ambient[static_cast<std::size_t>(mid)];
            }
            nf.tree = std::move(pr.tree);
            nf.req = ri;
            nf.k = f.k;
            work.push_back(std::move(nf));
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    ShortcutEdgeSet res;
    res.source_tree_id = t.id();
    res.edges.reserve(out.size());
    for (std::uint64_t e : out)
        res.edges.emplace_back(static_cast<Vertex>(e >> 32),
                               static_cast<Vertex>(e & 0xffffffffu));
    st.operations += res.size();
    return res;
}

TreeSpannerResult spanner_for_tree(const RootedSteinerTree& t, int k, SpannerStats* stats) {
    if (k < 2) throw domain_error("spanner_for_tree: k must be >= 2");
    TreeSpannerResult r;
    PruneResult pr = prune(t);
    r.pruned = std::move(pr.tree);
    r.map = std::move(pr.map);
    r.edges = tree_one_spanner(r.pruned, r.pruned.required_size(), k, stats);
    return r;
}

std::int64_t edge_budget(std::int64_t n, int k) {
    slow_funcs::AlphaEvaluator ae(std::max(2, k), std::max<std::int64_t>(n, 4));
    return edge_budget(n, k, ae);
}

std::int64_t edge_budget(std::int64_t n, int k, const slow_funcs::AlphaEvaluator& ae) {
    if (k < 2) throw domain_error("edge_budget: k must be >= 2");
    if (n < 0) throw domain_error("edge_budget: negative n");
    if (k == 2) return n * ae.alpha(2, n);
    if (k == 3) return (5 * n * ae.alpha(3, n) + 4) / 2;  // floor(5/2 n a3) + 2
    const std::int64_t ap = ae.alpha_prime(k, n);
    return k % 2 == 0 ? 2 * n * ap : 3 * n * ap + 2;
}

}  // namespace hopspan
