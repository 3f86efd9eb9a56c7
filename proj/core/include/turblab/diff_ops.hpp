#pragma once

#include "turblab/field.hpp"
#include "turblab/spectral.hpp"

namespace turblab {

/// Partial derivative along one axis: spectral differentiation on periodic
/// axes, second-order centered differences with one-sided closure on
/// wall-bounded/truncated axes. Axis numbering follows the domain
/// (channel axes are x=0, z=1).
ScalarField deriv(const ScalarField& f, int axis);

/// Laplacian with the same per-axis discretization rules.
ScalarField laplacian(const ScalarField& f);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);

/// Curl in 3D; 2D fields (periodic box or strip) return the scalar vorticity
/// dv/dx - du/dy as component 0 of a 1-component field.
VectorField curl(const VectorField& v);

/// Number of spatial axes a field varies over (2 for box2/strip/channel).
int domain_dim(const Domain& d);

}  // namespace turblab
