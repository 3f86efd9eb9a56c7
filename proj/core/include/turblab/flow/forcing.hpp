#pragma once

#include "turblab/spectral.hpp"

namespace turblab {

/// Frozen deterministic band forcing: fixed random phases on a Fourier shell,
/// constant in time. Reproducible from the seed alone.
struct BandForcing {
    double k_lo = 3.5;
    double k_hi = 4.5;
    double amplitude = 1.0;  // L2 norm of the forcing field
    std::uint64_t seed = 1;
};

/// Scalar (vorticity) forcing on a 2D box; zero mean.
SpectralCoeffs make_band_forcing_scalar(const PeriodicBox& box, const BandForcing& f);

/// Vector (velocity) forcing on a 3D box; divergence-free and zero mean.
std::vector<SpectralCoeffs> make_band_forcing_vector(const PeriodicBox& box,
                                                     const BandForcing& f);

/// Largest wavenumber with nonzero coefficient (0 for an all-zero spectrum).
double spectral_support_radius(const SpectralCoeffs& c, double rel_floor = 1e-14);

}  // namespace turblab
