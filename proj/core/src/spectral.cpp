#include "turblab/spectral.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace turblab {

namespace {

// FFTW's planner is not thread-safe; executions on distinct plans are.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanKey {
    int rank;
    std::array<int, 3> dims;
    int howmany;  // >0 marks the batched channel transform
    auto operator<=>(const PlanKey&) const = default;
};

// One plan pair plus owned aligned buffers. Transforms copy through the
// buffers, which keeps execution independent of caller alignment and makes
// results bit-reproducible across runs (FFTW_ESTIMATE plans are
// deterministic for fixed dims).
struct PlanEntry {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    std::size_t nreal = 0, ncplx = 0;

    ~PlanEntry() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (real) fftw_free(real);
        if (cplx) fftw_free(cplx);
    }
};

PlanEntry& get_plan(const PlanKey& key) {
    thread_local std::map<PlanKey, PlanEntry> cache;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PlanEntry& e = cache[key];
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (key.howmany == 0) {
        std::size_t nreal = 1, ncplx = 1;
        std::array<int, 3> d = key.dims;
        for (int a = 0; a < key.rank; ++a) nreal *= d[a];
        for (int a = 0; a + 1 < key.rank; ++a) ncplx *= d[a];
        ncplx *= d[key.rank - 1] / 2 + 1;
        e.nreal = nreal;
        e.ncplx = ncplx;
        e.real = fftw_alloc_real(nreal);
        e.cplx = fftw_alloc_complex(ncplx);
        e.fwd = fftw_plan_dft_r2c(key.rank, d.data(), e.real, e.cplx, FFTW_ESTIMATE);
        e.bwd = fftw_plan_dft_c2r(key.rank, d.data(), e.cplx, e.real, FFTW_ESTIMATE);
    } else {
        // Channel layout: (nx, nzl) with z fastest; transform along x.
        const int nx = key.dims[0];
        const int nzl = key.howmany;
        e.nreal = static_cast<std::size_t>(nx) * nzl;
        e.ncplx = static_cast<std::size_t>(nx / 2 + 1) * nzl;
        e.real = fftw_alloc_real(e.nreal);
        e.cplx = fftw_alloc_complex(e.ncplx);
        int n[1] = {nx};
        e.fwd = fftw_plan_many_dft_r2c(1, n, nzl, e.real, nullptr, nzl, 1, e.cplx,
                                       nullptr, nzl, 1, FFTW_ESTIMATE);
        e.bwd = fftw_plan_many_dft_c2r(1, n, nzl, e.cplx, nullptr, nzl, 1, e.real,
                                       nullptr, nzl, 1, FFTW_ESTIMATE);
    }
    return e;
}

PlanKey key_for(const PeriodicBox& box) {
    PlanKey key{};
    key.rank = box.dim;
    key.dims = {box.n[0], box.n[1], box.dim == 3 ? box.n[2] : 1};
    key.howmany = 0;
    return key;
}

}  // namespace

SpectralCoeffs::SpectralCoeffs(PeriodicBox box, std::vector<std::complex<double>> coeffs)
    : box_(box), c_(std::move(coeffs)) {
    std::size_t want = 1;
    auto d = cdims();
    for (int a = 0; a < box_.dim; ++a) want *= d[a];
    if (c_.size() != want) throw ContractError("SpectralCoeffs: coefficient count mismatch");
}

std::array<int, 3> SpectralCoeffs::cdims() const {
    if (box_.dim == 2) return {box_.n[0], box_.n[1] / 2 + 1, 1};
    return {box_.n[0], box_.n[1], box_.n[2] / 2 + 1};
}

int mode_index(int n, int i) { return i <= n / 2 ? i : i - n; }

double wavenumber(const PeriodicBox& box, int axis, int i) {
    return 2.0 * M_PI * mode_index(box.n[axis], i) / box.side[axis];
}

SpectralCoeffs spectral_transform(const ScalarField& f) {
    const auto* box = std::get_if<PeriodicBox>(&f.domain());
    if (!box) throw ContractError("spectral_transform: non-periodic axis requested");

    PlanEntry& e = get_plan(key_for(*box));
    std::memcpy(e.real, f.data(), e.nreal * sizeof(double));
    fftw_execute(e.fwd);

    std::vector<std::complex<double>> c(e.ncplx);
    const double scale = 1.0 / static_cast<double>(box->total());
    for (std::size_t i = 0; i < e.ncplx; ++i)
        c[i] = std::complex<double>(e.cplx[i][0] * scale, e.cplx[i][1] * scale);
    return SpectralCoeffs(*box, std::move(c));
}

ScalarField inverse_transform(const SpectralCoeffs& c) {
    const PeriodicBox& box = c.box();
    PlanEntry& e = get_plan(key_for(box));
    for (std::size_t i = 0; i < e.ncplx; ++i) {
        e.cplx[i][0] = c[i].real();
        e.cplx[i][1] = c[i].imag();
    }
    fftw_execute(e.bwd);  // unnormalized: directly evaluates the series

    ScalarField out{Domain(box)};
    std::memcpy(out.data(), e.real, e.nreal * sizeof(double));
    return out;
}

void for_each_mode(const PeriodicBox& box,
                   const std::function<void(std::size_t, double, double, double, double)>& f) {
    const int n0 = box.n[0];
    const int n1 = box.dim == 3 ? box.n[1] : 1;
    const int nlast = box.dim == 3 ? box.n[2] : box.n[1];
    const int nh = nlast / 2 + 1;
    std::size_t flat = 0;
    if (box.dim == 2) {
        for (int i = 0; i < n0; ++i) {
            const double kx = wavenumber(box, 0, i);
            for (int j = 0; j < nh; ++j, ++flat) {
                const double ky = 2.0 * M_PI * j / box.side[1];
                const double w = (j == 0 || j == nlast / 2) ? 1.0 : 2.0;
                f(flat, kx, ky, 0.0, w);
            }
        }
    } else {
        for (int i = 0; i < n0; ++i) {
            const double kx = wavenumber(box, 0, i);
            for (int j = 0; j < n1; ++j) {
                const double ky = wavenumber(box, 1, j);
                for (int k = 0; k < nh; ++k, ++flat) {
                    const double kz = 2.0 * M_PI * k / box.side[2];
                    const double w = (k == 0 || k == nlast / 2) ? 1.0 : 2.0;
                    f(flat, kx, ky, kz, w);
                }
            }
        }
    }
}

void dealias_truncate(SpectralCoeffs& c) {
    const PeriodicBox& box = c.box();
    const auto d = c.cdims();
    const int cut0 = box.n[0] / 3;
    const int cut1 = box.n[1] / 3;
    const int cut2 = box.dim == 3 ? box.n[2] / 3 : 0;
    std::size_t flat = 0;
    if (box.dim == 2) {
        for (int i = 0; i < d[0]; ++i) {
            const bool kill_i = std::abs(mode_index(box.n[0], i)) > cut0;
            for (int j = 0; j < d[1]; ++j, ++flat)
                if (kill_i || j > cut1) c[flat] = 0.0;
        }
    } else {
        for (int i = 0; i < d[0]; ++i) {
            const bool kill_i = std::abs(mode_index(box.n[0], i)) > cut0;
            for (int j = 0; j < d[1]; ++j) {
                const bool kill_j = kill_i || std::abs(mode_index(box.n[1], j)) > cut1;
                for (int k = 0; k < d[2]; ++k, ++flat)
                    if (kill_j || k > cut2) c[flat] = 0.0;
            }
        }
    }
}

void channel_fft_x(const ChannelDomain& ch, const double* values,
                   std::complex<double>* coeffs) {
    PlanKey key{1, {ch.nx, 0, 0}, ch.nz_nodes()};
    PlanEntry& e = get_plan(key);
    std::memcpy(e.real, values, e.nreal * sizeof(double));
    fftw_execute(e.fwd);
    const double scale = 1.0 / ch.nx;
    for (std::size_t i = 0; i < e.ncplx; ++i)
        coeffs[i] = std::complex<double>(e.cplx[i][0] * scale, e.cplx[i][1] * scale);
}

void channel_ifft_x(const ChannelDomain& ch, const std::complex<double>* coeffs,
                    double* values) {
    PlanKey key{1, {ch.nx, 0, 0}, ch.nz_nodes()};
    PlanEntry& e = get_plan(key);
    for (std::size_t i = 0; i < e.ncplx; ++i) {
        e.cplx[i][0] = coeffs[i].real();
        e.cplx[i][1] = coeffs[i].imag();
    }
    fftw_execute(e.bwd);
    std::memcpy(values, e.real, e.nreal * sizeof(double));
}

}  // namespace turblab
