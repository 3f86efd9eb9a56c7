#include "turblab/domain.hpp"

namespace turblab {

PeriodicBox::PeriodicBox(int dim_, std::array<double, 3> side_, std::array<int, 3> n_)
    : dim(dim_), side(side_), n(n_) {
    if (dim != 2 && dim != 3) throw ParamError("PeriodicBox: dim must be 2 or 3");
    for (int d = 0; d < dim; ++d) {
        if (side[d] <= 0.0) throw ParamError("PeriodicBox: side must be positive");
        if (n[d] < 8 || n[d] % 2 != 0)
            throw ParamError("PeriodicBox: n per axis must be >= 8 and even");
    }
    if (dim == 2) {
        side[2] = 1.0;
        n[2] = 1;
    }
}

PeriodicBox PeriodicBox::cube(int dim, double s, int np) {
    return PeriodicBox(dim, {s, s, s}, {np, np, np});
}

std::size_t PeriodicBox::total() const {
    std::size_t t = static_cast<std::size_t>(n[0]) * n[1];
    if (dim == 3) t *= n[2];
    return t;
}

double PeriodicBox::cell_volume() const {
    double v = spacing(0) * spacing(1);
    if (dim == 3) v *= spacing(2);
    return v;
}

StripDomain::StripDomain(double x_extent_, int nx_, int ny_)
    : x_extent(x_extent_), nx(nx_), ny(ny_) {
    if (x_extent <= 0.0) throw ParamError("StripDomain: x_extent must be positive");
    if (nx < 8 || ny < 4) throw ParamError("StripDomain: resolution too small");
}

ChannelDomain::ChannelDomain(double period_, int nx_, int nz_)
    : period(period_), nx(nx_), nz(nz_) {
    if (period <= 0.0) throw ParamError("ChannelDomain: period must be positive");
    if (nx < 8 || nx % 2 != 0) throw ParamError("ChannelDomain: nx must be >= 8 and even");
    if (nz < 8) throw ParamError("ChannelDomain: nz must be >= 8");
}

std::size_t domain_total(const Domain& d) {
    return std::visit([](const auto& dom) { return dom.total(); }, d);
}

std::uint8_t domain_kind_tag(const Domain& d) {
    return static_cast<std::uint8_t>(d.index());
}

}  // namespace turblab
