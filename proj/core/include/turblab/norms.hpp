#pragma once

#include "turblab/field.hpp"

namespace turblab {

/// Quadrature weight (cell volume) for sample idx: uniform on periodic and
/// strip grids, trapezoid in z on channel nodes.
double sample_weight(const Domain& dom, std::size_t idx);
double domain_volume(const Domain& dom);

double mean(const ScalarField& f);
double mean_square(const ScalarField& f);
/// sqrt of the volume integral of f^2.
double l2_norm(const ScalarField& f);
double linf_norm(const ScalarField& f);

double mean_square(const VectorField& v);
double l2_norm(const VectorField& v);
/// max over grid points of the Euclidean magnitude |v(x)|.
double linf_norm(const VectorField& v);

/// Hoelder seminorm estimate: max over grid-point pairs within 4-cell offsets
/// of |f(x)-f(y)| / |x-y|^alpha, with periodic minimum-image distances on
/// periodic axes. Requires alpha in (0,1).
double holder_seminorm(const ScalarField& f, double alpha, int max_offset = 4);

/// Full C^{0,alpha} norm: linf + seminorm.
double holder_norm(const ScalarField& f, double alpha);

/// sup over grid points of the Frobenius norm of the velocity gradient.
double grad_sup_frobenius(const VectorField& u);
/// volume-mean of |grad u|^2 (Frobenius squared).
double grad_mean_square(const VectorField& u);

}  // namespace turblab
