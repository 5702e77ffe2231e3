#include "hopspan/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace hopspan::io {

RootedSteinerTree read_tree(std::istream& in) {
    std::int64_t n;
    if (!(in >> n) || n < 0) throw validation_error("tree file: bad vertex count");
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<Color> color(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t p;
        std::string c;
        if (!(in >> p >> c)) throw validation_error("tree file: truncated");
        if (p < -1 || p >= n) throw validation_error("tree file: parent out of range");
        parent[static_cast<std::size_t>(i)] = static_cast<Vertex>(p);
        if (c == "R")
            color[static_cast<std::size_t>(i)] = Color::Required;
        else if (c == "S")
            color[static_cast<std::size_t>(i)] = Color::Steiner;
        else
            throw validation_error("tree file: color must be R or S");
    }
    return RootedSteinerTree::from_parents(std::move(parent), std::move(color));
}

void write_tree(std::ostream& out, const RootedSteinerTree& t) {
    out << t.size() << '\n';
    for (Vertex v = 0; v < t.size(); ++v)
        out << t.parent(v) << ' ' << (t.is_required(v) ? 'R' : 'S') << '\n';
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PointSet read_points(std::istream& in) {
    PointSet ps;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<double> row;
        double x;
        while (ls >> x) row.push_back(x);
        if (row.empty()) continue;
        if (ps.dim == 0) ps.dim = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != ps.dim)
            throw validation_error("point file: inconsistent dimension");
        ps.coords.insert(ps.coords.end(), row.begin(), row.end());
    }
    return ps;
}

void write_points(std::ostream& out, const PointSet& ps) {
    for (PointId i = 0; i < ps.size(); ++i) {
        auto p = ps.point(i);
        for (int d = 0; d < ps.dim; ++d) {
            if (d) out << ' ';
            out << format_double(p[static_cast<std::size_t>(d)]);
        }
        out << '\n';
    }
}

std::vector<std::pair<Vertex, Vertex>> read_edges(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::int64_t u, v;
    while (in >> u >> v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return edges;
}

void write_edges(std::ostream& out, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

std::vector<GeoEdge> read_weighted_edges(std::istream& in) {
    std::vector<GeoEdge> edges;
    std::int64_t u, v;
    double w;
    while (in >> u >> v >> w)
        edges.push_back({static_cast<PointId>(u), static_cast<PointId>(v), w});
    return edges;
}

void write_weighted_edges(std::ostream& out, const std::vector<GeoEdge>& edges) {
    for (const auto& e : edges)
        out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

}  // namespace hopspan::io
