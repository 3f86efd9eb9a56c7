#include "turblab/leray.hpp"

#include <cmath>

#include "turblab/spectral.hpp"

namespace turblab {

VectorField leray_project(const VectorField& v) {
    const auto* box = std::get_if<PeriodicBox>(&v.domain());
    if (!box) throw ContractError("leray_project: periodic box required");
    const int dim = box->dim;
    if (v.ncomp() != dim) throw ContractError("leray_project: component count != dim");

    std::vector<SpectralCoeffs> c;
    c.reserve(dim);
    for (int a = 0; a < dim; ++a) c.push_back(spectral_transform(v.comp(a)));

    std::array<double, 3> knyq{};
    for (int a = 0; a < dim; ++a) knyq[a] = M_PI * box->n[a] / box->side[a];

    for_each_mode(*box, [&](std::size_t flat, double kx, double ky, double kz, double) {
        const double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0) return;  // mean preserved as-is
        const bool nyquist = std::abs(kx) >= knyq[0] - 1e-12 ||
                             std::abs(ky) >= knyq[1] - 1e-12 ||
                             (dim == 3 && kz >= knyq[2] - 1e-12);
        if (nyquist) {
            for (int a = 0; a < dim; ++a) c[a][flat] = 0.0;
            return;
        }
        std::complex<double> kdotv = kx * c[0][flat] + ky * c[1][flat];
        if (dim == 3) kdotv += kz * c[2][flat];
        const std::complex<double> s = kdotv / k2;
        c[0][flat] -= kx * s;
        c[1][flat] -= ky * s;
        if (dim == 3) c[2][flat] -= kz * s;
    });

    VectorField out(v.domain(), dim);
    for (int a = 0; a < dim; ++a) out.comp(a) = inverse_transform(c[a]);
    return out;
}

}  // namespace turblab
