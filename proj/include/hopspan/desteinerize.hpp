#pragma once

#include <cstdint>
#include <vector>

#include "hopspan/geo.hpp"

namespace hopspan {

// A Euclidean Steiner spanner instance whose required points sit on the
// x-axis. The first `required_count` points of the graph are the required set
// X; every other point is a Steiner point and may lie anywhere in R^d.
class AxisInstance {
  public:
    static AxisInstance build(GeometricGraph graph, std::int32_t required_count);

    const GeometricGraph& graph() const { return g_; }
    std::int32_t required_count() const { return r_; }
    // X in ascending order, and the original point id of each entry.
    const std::vector<double>& sorted_x() const { return xs_; }
    const std::vector<PointId>& sorted_to_point() const { return xs_point_; }
    // Index into sorted_x() for required points, -1 for Steiner points.
    std::int32_t required_index(PointId p) const {
        return req_idx_[static_cast<std::size_t>(p)];
    }

  private:
    GeometricGraph g_;
    std::int32_t r_ = 0;
    std::vector<double> xs_;
    std::vector<PointId> xs_point_;
    std::vector<std::int32_t> req_idx_;
};

// Replaces every point by its first coordinate; edge weights become the
// projected lengths, which never exceed the originals.
GeometricGraph project_to_axis(const AxisInstance& inst);

inline constexpr std::int32_t kNullNeighbor = -1;

// Per vertex of the projected graph: nearest required point at-or-left and
// at-or-right on the axis (indices into sorted_x, kNullNeighbor when none).
// Required points map to themselves.
struct NeighborMaps {
    std::vector<std::int32_t> left, right;
};

NeighborMaps neighbor_maps(const AxisInstance& inst);

// The four-edge replacement: each projected edge (u,v) becomes (uL,vL),
// (uL,vR), (uR,vL), (uR,vR); self loops, duplicates and NULL endpoints are
// dropped. Output vertices are the required points (original ids 0..R-1),
// giving at most 4m edges, hop-diameter no worse than the input's, and no
// stretch loss.
GeometricGraph desteinerize(const AxisInstance& inst);

struct TransferAudit {
    bool hop_preserved = true;  // d_H'(u,v,h) <= d_Htilde(u,v,h) at every h
    std::int64_t pairs_checked = 0;
    double max_ratio = 0.0;  // worst d_H' / d_Htilde over finite entries
};

// Samples required pairs and sweeps every hop budget h: the de-Steinerized
// graph must never be worse than the projected graph.
TransferAudit transfer_audit(const AxisInstance& inst, std::int64_t samples, std::uint64_t seed);

}  // namespace hopspan
