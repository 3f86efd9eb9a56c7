#pragma once

#include "turblab/field.hpp"

namespace turblab {

/// Orthogonal projection onto divergence-free fields on a periodic box:
/// per mode v - k (k.v)/|k|^2, zero mode passed through unchanged.
/// Nyquist modes are zeroed: their wavenumber sign is ambiguous, so the
/// per-mode formula cannot be applied to them consistently.
VectorField leray_project(const VectorField& v);

}  // namespace turblab
