#include <cmath>
#include <limits>

#include "tvreg/field.hpp"

namespace tvreg {
namespace {

struct FaceSegment {
    // axis-aligned segment: for vertical faces x is fixed, y spans [a0, a1];
    // 1D faces degenerate to a point.
    double x0, y0, x1, y1;
};

FaceSegment face_geometry(const Grid& g, const BoundaryEntry& b) {
    const int ix = b.cell % g.nx(), iy = b.cell / g.nx();
    FaceSegment s{};
    if (b.axis == 0) {
        const double x = (b.sign > 0 ? ix + 1 : ix) * g.hx();
        s.x0 = s.x1 = x;
        s.y0 = iy * g.hy();
        s.y1 = (iy + 1) * g.hy();
        if (g.dim() == 1) s.y0 = s.y1 = 0.0;
    } else {
        const double y = (b.sign > 0 ? iy + 1 : iy) * g.hy();
        s.y0 = s.y1 = y;
        s.x0 = ix * g.hx();
        s.x1 = (ix + 1) * g.hx();
    }
    return s;
}

double point_segment_distance(double px, double py, const FaceSegment& s) {
    const double cx = std::clamp(px, std::min(s.x0, s.x1), std::max(s.x0, s.x1));
    const double cy = std::clamp(py, std::min(s.y0, s.y1), std::max(s.y0, s.y1));
    return std::hypot(px - cx, py - cy);
}

}  // namespace

ScalarField distance_field(const GridPtr& grid) {
    const Grid& g = *grid;
    ScalarField d(grid);

    if (g.convex()) {
        // interval / full rectangle: closed form
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int ix = 0; ix < g.nx(); ++ix) {
                const int c = g.index(ix, iy);
                double v = std::min(g.cx(ix), g.lx() - g.cx(ix));
                if (g.dim() == 2)
                    v = std::min(v, std::min(g.cy(iy), g.ly() - g.cy(iy)));
                d[c] = v;
            }
        return d;
    }

    // masked grid: propagate nearest boundary faces in raster sweeps
    const auto& faces = g.boundary_cells();
    std::vector<FaceSegment> segs(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) segs[i] = face_geometry(g, faces[i]);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<int> best(g.cell_count(), -1);
    std::vector<double> dist(g.cell_count(), inf);

    auto offer = [&](int c, int face) {
        const int ix = c % g.nx(), iy = c / g.nx();
        const double dd = point_segment_distance(g.cx(ix), g.cy(iy), segs[face]);
        if (dd < dist[c]) {
            dist[c] = dd;
            best[c] = face;
        }
    };
    for (size_t i = 0; i < faces.size(); ++i) offer(faces[i].cell, static_cast<int>(i));

    auto pull = [&](int c, int jx, int jy) {
        if (!g.interior(jx, jy)) return;
        const int j = g.index(jx, jy);
        if (best[j] >= 0) offer(c, best[j]);
    };

    for (int round = 0; round < 2; ++round) {
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int ix = 0; ix < g.nx(); ++ix) {
                const int c = g.index(ix, iy);
                if (!g.interior(c)) continue;
                pull(c, ix - 1, iy);
                pull(c, ix, iy - 1);
                pull(c, ix - 1, iy - 1);
                pull(c, ix + 1, iy - 1);
            }
        for (int iy = g.ny() - 1; iy >= 0; --iy)
            for (int ix = g.nx() - 1; ix >= 0; --ix) {
                const int c = g.index(ix, iy);
                if (!g.interior(c)) continue;
                pull(c, ix + 1, iy);
                pull(c, ix, iy + 1);
                pull(c, ix + 1, iy + 1);
                pull(c, ix - 1, iy + 1);
            }
    }

    for (int c = 0; c < g.cell_count(); ++c)
        if (g.interior(c)) d[c] = dist[c];
    return d;
}

}  // namespace tvreg
