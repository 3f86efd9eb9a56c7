#pragma once

#include <complex>
#include <vector>

#include "turblab/field.hpp"

namespace turblab {

/// Normalized Fourier-series coefficients of a real field on a PeriodicBox,
/// stored in FFTW r2c half-spectrum layout (last axis holds n/2+1 entries,
/// the remaining modes are implied by Hermitian symmetry):
///   f(x) = sum_k c_k exp(i k.x),  c_{-k} = conj(c_k).
/// A constant field c has c_0 = c and all other coefficients 0.
class SpectralCoeffs {
  public:
    SpectralCoeffs(PeriodicBox box, std::vector<std::complex<double>> coeffs);

    const PeriodicBox& box() const { return box_; }
    /// Half-spectrum extents: {n0, n1} in 2D, {n0, n1, n2/2+1} in 3D
    /// (2D uses {n0, n1/2+1}).
    std::array<int, 3> cdims() const;
    std::size_t size() const { return c_.size(); }

    std::complex<double>& operator[](std::size_t i) { return c_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return c_[i]; }
    std::vector<std::complex<double>>& coeffs() { return c_; }
    const std::vector<std::complex<double>>& coeffs() const { return c_; }

  private:
    PeriodicBox box_;
    std::vector<std::complex<double>> c_;
};

/// Discrete Fourier transform of a field on a fully periodic domain.
/// Throws ContractError for strip/channel domains.
SpectralCoeffs spectral_transform(const ScalarField& f);
ScalarField inverse_transform(const SpectralCoeffs& c);

/// Signed integer mode index m for a given storage index along an axis,
/// folded into [-n/2, n/2).
int mode_index(int n, int i);

/// Physical wavenumber 2*pi*m/side for storage index i along an axis.
double wavenumber(const PeriodicBox& box, int axis, int i);

/// Iterate the half-spectrum: f(flat, kx, ky, kz, weight) where weight is 2
/// for entries whose Hermitian partner is implied (last-axis index in the
/// open interior), 1 otherwise. Sum of weight*|c|^2 equals the mean square
/// of the physical field (Parseval).
void for_each_mode(const PeriodicBox& box,
                   const std::function<void(std::size_t, double, double, double, double)>& f);

/// Zero all modes with |m_axis| > n_axis/3 on any axis (2/3-rule truncation
/// for quadratic nonlinearities).
void dealias_truncate(SpectralCoeffs& c);

/// Batched 1D FFT along x for channel fields: values (nx, nzl) row-major with
/// z fastest -> coefficients (nx/2+1, nzl). Normalized like spectral_transform.
void channel_fft_x(const ChannelDomain& ch, const double* values,
                   std::complex<double>* coeffs);
void channel_ifft_x(const ChannelDomain& ch, const std::complex<double>* coeffs,
                    double* values);

}  // namespace turblab
