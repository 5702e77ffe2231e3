#include "hopspan/gen.hpp"

#include <algorithm>

#include "hopspan/rng.hpp"

namespace hopspan {

TreeShape tree_shape_from_string(const std::string& s) {
    if (s == "random") return TreeShape::Random;
    if (s == "path") return TreeShape::Path;
    if (s == "binary") return TreeShape::Binary;
    if (s == "caterpillar") return TreeShape::Caterpillar;
    throw domain_error("unknown tree shape: " + s);
}

PointDist point_dist_from_string(const std::string& s) {
    if (s == "uniform") return PointDist::Uniform;
    if (s == "clustered") return PointDist::Clustered;
    if (s == "collinear") return PointDist::Collinear;
    throw domain_error("unknown point distribution: " + s);
}

namespace {

std::vector<Vertex> shape_parents(std::int64_t n, TreeShape shape, Rng& rng) {
    std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoVertex);
    switch (shape) {
        case TreeShape::Random:
            for (std::int64_t i = 1; i < n; ++i)
                parent[static_cast<std::size_t>(i)] =
                    static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(i)));
            break;
        case TreeShape::Path:
            for (std::int64_t i = 1; i < n; ++i)
                parent[static_cast<std::size_t>(i)] = static_cast<Vertex>(i - 1);
            break;
        case TreeShape::Binary:
            for (std::int64_t i = 1; i < n; ++i)
                parent[static_cast<std::size_t>(i)] = static_cast<Vertex>((i - 1) / 2);
            break;
        case TreeShape::Caterpillar: {
            const std::int64_t spine = (n + 1) / 2;
            for (std::int64_t i = 1; i < spine; ++i)
                parent[static_cast<std::size_t>(i)] = static_cast<Vertex>(i - 1);
            for (std::int64_t i = spine; i < n; ++i)
                parent[static_cast<std::size_t>(i)] = static_cast<Vertex>((i - spine) % spine);
            break;
        }
    }
    return parent;
}

}  // namespace

RootedSteinerTree gen_tree(std::int64_t n, double required_frac, std::uint64_t seed,
                           TreeShape shape) {
    if (n < 0) throw domain_error("gen_tree: negative n");
    Rng rng(seed);
    std::vector<Vertex> parent = shape_parents(n, shape, rng);
    std::vector<Color> color(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        color[static_cast<std::size_t>(i)] =
            rng.next_bool(required_frac) ? Color::Required : Color::Steiner;
    return RootedSteinerTree::from_parents(std::move(parent), std::move(color));
}

RootedSteinerTree gen_tree_exact(std::int64_t n, std::int64_t n_required, std::uint64_t seed,
                                 TreeShape shape) {
    if (n_required < 0 || n_required > n) throw domain_error("gen_tree_exact: bad n_required");
    Rng rng(seed);
    std::vector<Vertex> parent = shape_parents(n, shape, rng);
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    for (std::int64_t i = 0; i < n_required; ++i) {
        const auto j = i + static_cast<std::int64_t>(
                               rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    std::vector<Color> color(static_cast<std::size_t>(n), Color::Steiner);
    for (std::int64_t i = 0; i < n_required; ++i)
        color[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = Color::Required;
    return RootedSteinerTree::from_parents(std::move(parent), std::move(color));
}

PointSet gen_points(std::int64_t n, int dim, PointDist dist, std::uint64_t seed) {
    if (n < 0) throw domain_error("gen_points: negative n");
    if (dim < 1) throw domain_error("gen_points: dim must be >= 1");
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(seed + attempt * 0x9e3779b97f4a7c15ull);
        PointSet ps;
        ps.dim = dim;
        ps.coords.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(dim));
        switch (dist) {
            case PointDist::Uniform:
                for (auto& c : ps.coords) c = rng.next_double();
                break;
            case PointDist::Clustered: {
                const std::int64_t k = std::max<std::int64_t>(1, n / 32);
                std::vector<double> centers(static_cast<std::size_t>(k) * dim);
                for (auto& c : centers) c = rng.next_double();
                for (std::int64_t i = 0; i < n; ++i) {
                    const auto c = static_cast<std::size_t>(
                        rng.next_below(static_cast<std::uint64_t>(k)));
                    for (int d = 0; d < dim; ++d)
                        ps.coords[static_cast<std::size_t>(i) * dim + d] =
                            centers[c * dim + d] + 0.02 * rng.next_gaussian();
                }
                break;
            }
            case PointDist::Collinear:
                for (std::int64_t i = 0; i < n; ++i) {
                    ps.coords[static_cast<std::size_t>(i) * dim] = rng.next_double();
                    for (int d = 1; d < dim; ++d)
                        ps.coords[static_cast<std::size_t>(i) * dim + d] = 0.0;
                }
                break;
        }
        if (!ps.has_duplicates()) return ps;
    }
}

}  // namespace hopspan
