#include "turblab/diff_ops.hpp"

#include <cmath>

namespace turblab {

namespace {

// Centered second-order first derivative down a contiguous line of length n
// with one-sided closure at both ends.
void fd_line_d1(const double* f, double* out, int n, std::size_t stride, double h) {
    auto at = [&](int i) { return f[static_cast<std::size_t>(i) * stride]; };
    out[0] = (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i)
        out[static_cast<std::size_t>(i)] = (at(i + 1) - at(i - 1)) / (2.0 * h);
    out[static_cast<std::size_t>(n - 1)] =
        (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
}

void fd_line_d2(const double* f, double* out, int n, std::size_t stride, double h) {
    auto at = [&](int i) { return f[static_cast<std::size_t>(i) * stride]; };
    const double h2 = h * h;
    out[0] = (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / h2;
    for (int i = 1; i < n - 1; ++i)
        out[static_cast<std::size_t>(i)] = (at(i + 1) - 2.0 * at(i) + at(i - 1)) / h2;
    out[static_cast<std::size_t>(n - 1)] =
        (2.0 * at(n - 1) - 5.0 * at(n - 2) + 4.0 * at(n - 3) - at(n - 4)) / h2;
}

ScalarField box_deriv(const ScalarField& f, const PeriodicBox& box, int axis) {
    SpectralCoeffs c = spectral_transform(f);
    const int n_axis = box.n[axis];
    for_each_mode(box, [&](std::size_t flat, double kx, double ky, double kz, double) {
        const double k = axis == 0 ? kx : (axis == 1 ? ky : kz);
        // zero the Nyquist mode on the differentiated axis (sign-ambiguous)
        const double knyq = M_PI * n_axis / box.side[axis];
        if (std::abs(std::abs(k) - knyq) < 1e-12 * knyq) {
            c[flat] = 0.0;
        } else {
            c[flat] *= std::complex<double>(0.0, k);
        }
    });
    return inverse_transform(c);
}

ScalarField box_laplacian(const ScalarField& f, const PeriodicBox& box) {
    SpectralCoeffs c = spectral_transform(f);
    for_each_mode(box, [&](std::size_t flat, double kx, double ky, double kz, double) {
        c[flat] *= -(kx * kx + ky * ky + kz * kz);
    });
    return inverse_transform(c);
}

// Channel: spectral derivative along periodic x using the batched transform.
ScalarField channel_dx(const ScalarField& f, const ChannelDomain& ch) {
    const int nzl = ch.nz_nodes();
    const int nh = ch.nx / 2 + 1;
    std::vector<std::complex<double>> c(static_cast<std::size_t>(nh) * nzl);
    channel_fft_x(ch, f.data(), c.data());
    for (int m = 0; m < nh; ++m) {
        double k = 2.0 * M_PI * m / ch.period;
        if (m == ch.nx / 2) k = 0.0;  // Nyquist
        for (int j = 0; j < nzl; ++j)
            c[static_cast<std::size_t>(m) * nzl + j] *= std::complex<double>(0.0, k);
    }
    ScalarField out(f.domain());
    channel_ifft_x(ch, c.data(), out.data());
    return out;
}

ScalarField channel_dx2(const ScalarField& f, const ChannelDomain& ch) {
    const int nzl = ch.nz_nodes();
    const int nh = ch.nx / 2 + 1;
    std::vector<std::complex<double>> c(static_cast<std::size_t>(nh) * nzl);
    channel_fft_x(ch, f.data(), c.data());
    for (int m = 0; m < nh; ++m) {
        const double k = 2.0 * M_PI * m / ch.period;
        for (int j = 0; j < nzl; ++j)
            c[static_cast<std::size_t>(m) * nzl + j] *= -k * k;
    }
    ScalarField out(f.domain());
    channel_ifft_x(ch, c.data(), out.data());
    return out;
}

}  // namespace

int domain_dim(const Domain& d) {
    if (const auto* box = std::get_if<PeriodicBox>(&d)) return box->dim;
    return 2;
}

ScalarField deriv(const ScalarField& f, int axis) {
    const Domain& dom = f.domain();
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        if (axis < 0 || axis >= box->dim) throw ContractError("deriv: axis out of range");
        return box_deriv(f, *box, axis);
    }
    if (const auto* strip = std::get_if<StripDomain>(&dom)) {
        if (axis < 0 || axis > 1) throw ContractError("deriv: axis out of range");
        ScalarField out(dom);
        if (axis == 0) {
            std::vector<double> line(strip->nx);
            for (int j = 0; j < strip->ny; ++j) {
                fd_line_d1(f.data() + j, line.data(), strip->nx, strip->ny, strip->dx());
                for (int i = 0; i < strip->nx; ++i)
                    out[static_cast<std::size_t>(i) * strip->ny + j] = line[i];
            }
        } else {
            for (int i = 0; i < strip->nx; ++i)
                fd_line_d1(f.data() + static_cast<std::size_t>(i) * strip->ny,
                           out.data() + static_cast<std::size_t>(i) * strip->ny, strip->ny,
                           1, strip->dy());
        }
        return out;
    }
    const auto& ch = std::get<ChannelDomain>(dom);
    if (axis < 0 || axis > 1) throw ContractError("deriv: axis out of range");
    if (axis == 0) return channel_dx(f, ch);
    ScalarField out(dom);
    const int nzl = ch.nz_nodes();
    for (int i = 0; i < ch.nx; ++i)
        fd_line_d1(f.data() + static_cast<std::size_t>(i) * nzl,
                   out.data() + static_cast<std::size_t>(i) * nzl, nzl, 1, ch.dz());
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    const Domain& dom = f.domain();
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) return box_laplacian(f, *box);
    if (const auto* strip = std::get_if<StripDomain>(&dom)) {
        ScalarField out(dom);
        std::vector<double> line(strip->nx);
        for (int j = 0; j < strip->ny; ++j) {
            fd_line_d2(f.data() + j, line.data(), strip->nx, strip->ny, strip->dx());
            for (int i = 0; i < strip->nx; ++i)
                out[static_cast<std::size_t>(i) * strip->ny + j] = line[i];
        }
        std::vector<double> col(strip->ny);
        for (int i = 0; i < strip->nx; ++i) {
            fd_line_d2(f.data() + static_cast<std::size_t>(i) * strip->ny, col.data(),
                       strip->ny, 1, strip->dy());
            for (int j = 0; j < strip->ny; ++j)
                out[static_cast<std::size_t>(i) * strip->ny + j] += col[j];
        }
        return out;
    }
    const auto& ch = std::get<ChannelDomain>(dom);
    ScalarField out = channel_dx2(f, ch);
    const int nzl = ch.nz_nodes();
    std::vector<double> col(nzl);
    for (int i = 0; i < ch.nx; ++i) {
        fd_line_d2(f.data() + static_cast<std::size_t>(i) * nzl, col.data(), nzl, 1, ch.dz());
        for (int j = 0; j < nzl; ++j) out[static_cast<std::size_t>(i) * nzl + j] += col[j];
    }
    return out;
}

VectorField gradient(const ScalarField& f) {
    const int dim = domain_dim(f.domain());
    VectorField g(f.domain(), dim);
    for (int a = 0; a < dim; ++a) g.comp(a) = deriv(f, a);
    return g;
}

ScalarField divergence(const VectorField& v) {
    const int dim = domain_dim(v.domain());
    if (v.ncomp() != dim) throw ContractError("divergence: component count != dim");
    ScalarField out = deriv(v.comp(0), 0);
    for (int a = 1; a < dim; ++a) out += deriv(v.comp(a), a);
    return out;
}

VectorField curl(const VectorField& v) {
    const int dim = domain_dim(v.domain());
    if (dim == 2) {
        if (v.ncomp() != 2) throw ContractError("curl: 2D field needs 2 components");
        VectorField out(v.domain(), 1);
        out.comp(0) = deriv(v.comp(1), 0) - deriv(v.comp(0), 1);
        return out;
    }
    if (v.ncomp() != 3) throw ContractError("curl: 3D field needs 3 components");
    VectorField out(v.domain(), 3);
    out.comp(0) = deriv(v.comp(2), 1) - deriv(v.comp(1), 2);
    out.comp(1) = deriv(v.comp(0), 2) - deriv(v.comp(2), 0);
    out.comp(2) = deriv(v.comp(1), 0) - deriv(v.comp(0), 1);
    return out;
}

}  // namespace turblab
