#pragma once

#include <functional>
#include <vector>

#include "turblab/domain.hpp"

namespace turblab {

/// Grid-sampled real scalar field. Value-semantic: copies are deep, and all
/// operations on fields are pure functions of their inputs, so read-only
/// sharing across threads is safe.
///
/// Sample layout is row-major with x slowest:
///   PeriodicBox 3D: idx = (i*ny + j)*nz + k
///   PeriodicBox 2D / Strip: idx = i*ny + j
///   Channel: idx = i*(nz+1) + j   (z-columns contiguous)
class ScalarField {
  public:
    explicit ScalarField(Domain dom)
        : dom_(std::move(dom)), v_(domain_total(dom_), 0.0) {}

    const Domain& domain() const { return dom_; }
    std::size_t size() const { return v_.size(); }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double c);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double c, ScalarField a) { return a *= c; }
    friend ScalarField operator*(ScalarField a, double c) { return a *= c; }

    /// y += a*x with matching domains.
    void axpy(double a, const ScalarField& x);

    /// Sample an analytic function at the grid points. The callable receives
    /// physical coordinates (x, y[, z]); for 2D domains z is passed as 0.
    static ScalarField sample(const Domain& dom,
                              const std::function<double(double, double, double)>& f);

    bool has_nan() const;

  private:
    Domain dom_;
    std::vector<double> v_;
};

/// Fixed small bundle of scalar components on a shared domain.
class VectorField {
  public:
    VectorField(Domain dom, int ncomp);

    int ncomp() const { return static_cast<int>(comps_.size()); }
    const Domain& domain() const { return comps_.front().domain(); }
    ScalarField& comp(int c) { return comps_[c]; }
    const ScalarField& comp(int c) const { return comps_[c]; }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(double c, VectorField a) { return a *= c; }

    void axpy(double a, const VectorField& x);
    bool has_nan() const;

  private:
    std::vector<ScalarField> comps_;
};

/// Iterate grid coordinates of a domain in storage order.
/// Calls f(idx, x, y, z) for every sample (z = 0 where absent).
void for_each_point(const Domain& dom,
                    const std::function<void(std::size_t, double, double, double)>& f);

}  // namespace turblab
