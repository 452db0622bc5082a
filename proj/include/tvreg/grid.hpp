#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tvreg {

/// Axis-aligned outward normal attached to a boundary cell. A corner cell
/// appears once per outward direction.
struct BoundaryEntry {
    int cell = 0;  // linear cell index
    int axis = 0;  // 0 = x, 1 = y
    int sign = 1;  // +1 / -1, direction of the outward normal
};

/// Cell-centered grid over a rectangular bounding box, optionally masked.
/// Linear index = ix + nx*iy; cell centers at ((ix+0.5)hx, (iy+0.5)hy).
/// Exterior (masked-out) cells keep their slots in bounding-box arrays.
class Grid {
public:
    static Grid interval(int n, double length);
    static Grid rectangle(int nx, int ny, double lx, double ly);
    static Grid masked(int nx, int ny, double hx, double hy,
                       std::vector<std::uint8_t> mask);
    /// Square of side `length`, n x n cells, minus the upper-right quadrant.
    static Grid lshape(int n, double length);

    int dim() const { return dim_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int cell_count() const { return nx_ * ny_; }
    int interior_count() const { return interior_count_; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }
    double h_max() const { return dim_ == 1 ? hx_ : (hx_ > hy_ ? hx_ : hy_); }
    double lx() const { return nx_ * hx_; }
    double ly() const { return dim_ == 1 ? 0.0 : ny_ * hy_; }
    double cell_measure() const { return dim_ == 1 ? hx_ : hx_ * hy_; }
    double domain_measure() const { return interior_count_ * cell_measure(); }
    bool convex() const { return convex_; }

    int index(int ix, int iy) const { return ix + nx_ * iy; }
    bool in_box(int ix, int iy) const {
        return ix >= 0 && ix < nx_ && iy >= 0 && iy < ny_;
    }
    bool interior(int ix, int iy) const {
        return in_box(ix, iy) && mask_[index(ix, iy)] != 0;
    }
    bool interior(int cell) const { return mask_[cell] != 0; }
    double cx(int ix) const { return (ix + 0.5) * hx_; }
    double cy(int iy) const { return dim_ == 1 ? 0.0 : (iy + 0.5) * hy_; }

    const std::vector<std::uint8_t>& mask() const { return mask_; }
    const std::vector<BoundaryEntry>& boundary_cells() const { return boundary_; }

    std::string describe() const;

private:
    Grid() = default;
    void finalize();  // boundary cells, connectivity check, convex flag

    int dim_ = 1;
    int nx_ = 0, ny_ = 1;
    double hx_ = 0, hy_ = 0;
    std::vector<std::uint8_t> mask_;
    std::vector<BoundaryEntry> boundary_;
    int interior_count_ = 0;
    bool convex_ = false;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_interval(int n, double length);
GridPtr make_rectangle(int nx, int ny, double lx, double ly);
GridPtr make_masked(int nx, int ny, double hx, double hy,
                    std::vector<std::uint8_t> mask);
GridPtr make_lshape(int n, double length);

/// Domain description as it arrives from configuration.
struct DomainSpec {
    std::string kind;  // interval | rectangle | lshape
    int n = 0, nx = 0, ny = 0;
    double length = 1.0, lx = 1.0, ly = 1.0;
};

GridPtr build_grid(const DomainSpec& spec);

}  // namespace tvreg
