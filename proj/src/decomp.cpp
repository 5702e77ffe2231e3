#include "hopspan/decomp.hpp"

#include <algorithm>

namespace hopspan {

Decomposition decompose(const RootedSteinerTree& t, std::int64_t ell) {
    if (ell < 1) throw domain_error("decompose: ell must be positive");
    Decomposition d;
    const auto n = static_cast<std::size_t>(t.size());
    d.sizes.assign(n, 0);
    if (n == 0) return d;

    std::vector<std::uint8_t> is_cut(n, 0);
    std::int64_t visits = 0;

    // Left-to-right post-order via reversed preorder.
    std::vector<Vertex> order;
    order.reserve(n);
    {
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
        ++visits;
        const auto vi = static_cast<std::size_t>(v);
        std::int32_t s = t.is_required(v) ? 1 : 0;
        for (Vertex c : t.children(v)) {
            if (!is_cut[static_cast<std::size_t>(c)]) s += d.sizes[static_cast<std::size_t>(c)];
        }
        // Detached children contribute nothing: marking c as cut removed T_c.
        d.sizes[vi] = s;
        if (s > ell) {
            is_cut[vi] = 1;
            d.cut_vertices.push_back(v);
            d.sizes[vi] = 0;  // subtree T_v leaves the tree
        }
    }
    // Restore size(v) of cut vertices to the value that triggered the cut so
    // that sizes reports the pass's final values for non-detached vertices and
    // remains the subtree required-size elsewhere.
    for (Vertex v : d.cut_vertices) {
        std::int32_t s = t.is_required(v) ? 1 : 0;
        for (Vertex c : t.children(v))
            if (!is_cut[static_cast<std::size_t>(c)]) s += d.sizes[static_cast<std::size_t>(c)];
        d.sizes[static_cast<std::size_t>(v)] = s;
    }

    // Components of T \ CV, discovered in preorder; component roots are the
    // non-cut vertices whose parent is missing or cut.
    std::vector<std::int32_t> comp(n, -1);
    std::vector<std::vector<Vertex>> comp_vertices;
    {
        std::vector<Vertex> stack{t.root()};
        std::vector<Vertex> pre;
        pre.reserve(n);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            pre.push_back(v);
            auto cs = t.children(v);
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
        }
        for (Vertex v : pre) {
            ++visits;
            const auto vi = static_cast<std::size_t>(v);
            if (is_cut[vi]) continue;
            Vertex p = t.parent(v);
            if (p == kNoVertex || is_cut[static_cast<std::size_t>(p)]) {
                comp[vi] = static_cast<std::int32_t>(comp_vertices.size());
                comp_vertices.emplace_back();
            } else {
                comp[vi] = comp[static_cast<std::size_t>(p)];
            }
            comp_vertices[static_cast<std::size_t>(comp[vi])].push_back(v);
        }
    }

    // Materialize each component as a compact rooted tree.
    d.subtrees.reserve(comp_vertices.size());
    for (const auto& verts : comp_vertices) {
        SubtreeEntry e;
        e.map.to_new.assign(n, kNoVertex);
        e.map.to_old = verts;  // preorder within the component
        std::vector<Vertex> parent(verts.size());
        std::vector<Color> color(verts.size());
        std::vector<std::vector<Vertex>> children(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            e.map.to_new[static_cast<std::size_t>(verts[i])] = static_cast<Vertex>(i);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Vertex v = verts[i];
            color[i] = t.color(v);
            Vertex p = t.parent(v);
            if (p == kNoVertex || is_cut[static_cast<std::size_t>(p)]) {
                parent[i] = kNoVertex;
            } else {
                parent[i] = e.map.to_new[static_cast<std::size_t>(p)];
            }
            for (Vertex c : t.children(v)) {
                if (!is_cut[static_cast<std::size_t>(c)])
                    children[i].push_back(e.map.to_new[static_cast<std::size_t>(c)]);
            }
        }
        e.tree = RootedSteinerTree::from_children(std::move(parent), std::move(color), children);
        d.subtrees.push_back(std::move(e));
    }

    d.vertex_visits = visits;
    compute_borders(t, d);
    return d;
}

void compute_borders(const RootedSteinerTree& t, Decomposition& d) {
    const auto n = static_cast<std::size_t>(t.size());
    std::vector<std::uint8_t> is_cut(n, 0);
    for (Vertex v : d.cut_vertices) is_cut[static_cast<std::size_t>(v)] = 1;
    std::vector<std::int32_t> comp(n, -1);
    for (std::size_t i = 0; i < d.subtrees.size(); ++i)
        for (Vertex v : d.subtrees[i].map.to_old)
            comp[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);

    d.borders.assign(d.subtrees.size(), {});
    // Parent of a subtree root is a cut vertex (or absent).
    for (std::size_t i = 0; i < d.subtrees.size(); ++i) {
        Vertex rt_old = d.subtrees[i].map.to_old.empty()
                            ? kNoVertex
                            : d.subtrees[i].map.to_old[static_cast<std::size_t>(
                                  d.subtrees[i].tree.root())];
        if (rt_old == kNoVertex) continue;
        Vertex p = t.parent(rt_old);
        if (p != kNoVertex) d.borders[i].push_back(p);
    }
    // A cut vertex borders the subtree holding its parent.
    for (Vertex u : d.cut_vertices) {
        Vertex p = t.parent(u);
        if (p != kNoVertex && !is_cut[static_cast<std::size_t>(p)])
            d.borders[static_cast<std::size_t>(comp[static_cast<std::size_t>(p)])].push_back(u);
    }
    for (auto& b : d.borders) std::sort(b.begin(), b.end());
}

}  // namespace hopspan
