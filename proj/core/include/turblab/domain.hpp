#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <variant>

#include "turblab/errors.hpp"

namespace turblab {

/// Fully periodic box, 2 or 3 dimensions. Samples sit at x_i = i*side/n,
/// i = 0..n-1 (no duplicated endpoint).
struct PeriodicBox {
    int dim = 2;
    std::array<double, 3> side{1.0, 1.0, 1.0};
    std::array<int, 3> n{8, 8, 8};

    PeriodicBox() = default;
    PeriodicBox(int dim_, std::array<double, 3> side_, std::array<int, 3> n_);

    /// Cube with equal side and resolution on every axis.
    static PeriodicBox cube(int dim, double side, int n);

    double spacing(int axis) const { return side[axis] / n[axis]; }
    std::size_t total() const;
    double cell_volume() const;

    bool operator==(const PeriodicBox&) const = default;
};

/// Truncation of the infinite strip 0 <= y <= 1 to x in [-X, X].
/// Samples are cell-centered on both axes. Boundary tags are fixed:
/// Neumann walls at y = 0,1; far-field Dirichlet values 1 at x = -X and
/// 0 at x = +X.
struct StripDomain {
    double x_extent = 20.0;  // X
    int nx = 256;
    int ny = 32;

    StripDomain() = default;
    StripDomain(double x_extent_, int nx_, int ny_);

    double dx() const { return 2.0 * x_extent / nx; }
    double dy() const { return 1.0 / ny; }
    double x_center(int i) const { return -x_extent + (i + 0.5) * dx(); }
    double y_center(int j) const { return (j + 0.5) * dy(); }
    std::size_t total() const { return static_cast<std::size_t>(nx) * ny; }

    bool operator==(const StripDomain&) const = default;
};

/// Horizontally periodic layer of height 1: x periodic with period L,
/// z in [0,1] sampled on nodes z_j = j/nz, j = 0..nz (walls included).
/// Walls carry no-slip velocity and Dirichlet temperature tags
/// (T = 1 at z = 0, T = 0 at z = 1).
struct ChannelDomain {
    double period = 2.0;  // L
    int nx = 64;
    int nz = 32;  // intervals; nz+1 nodes

    ChannelDomain() = default;
    ChannelDomain(double period_, int nx_, int nz_);

    double dx() const { return period / nx; }
    double dz() const { return 1.0 / nz; }
    int nz_nodes() const { return nz + 1; }
    double x_node(int i) const { return i * dx(); }
    double z_node(int j) const { return j * dz(); }
    std::size_t total() const { return static_cast<std::size_t>(nx) * nz_nodes(); }

    bool operator==(const ChannelDomain&) const = default;
};

using Domain = std::variant<PeriodicBox, StripDomain, ChannelDomain>;

std::size_t domain_total(const Domain& d);

inline bool domain_equal(const Domain& a, const Domain& b) { return a == b; }

/// Tag byte used in binary checkpoints.
std::uint8_t domain_kind_tag(const Domain& d);

}  // namespace turblab
