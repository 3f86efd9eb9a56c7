#include "turblab/field.hpp"

#include <cmath>

namespace turblab {

namespace {
void check_same_domain(const Domain& a, const Domain& b) {
    if (!domain_equal(a, b)) throw ContractError("field operation: domain mismatch");
}
}  // namespace

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    check_same_domain(dom_, o.dom_);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    check_same_domain(dom_, o.dom_);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double c) {
    for (double& x : v_) x *= c;
    return *this;
}

void ScalarField::axpy(double a, const ScalarField& x) {
    check_same_domain(dom_, x.dom_);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += a * x.v_[i];
}

bool ScalarField::has_nan() const {
    for (double x : v_)
        if (!std::isfinite(x)) return true;
    return false;
}

ScalarField ScalarField::sample(const Domain& dom,
                                const std::function<double(double, double, double)>& f) {
    ScalarField out(dom);
    for_each_point(dom, [&](std::size_t idx, double x, double y, double z) {
        out[idx] = f(x, y, z);
    });
    return out;
}

VectorField::VectorField(Domain dom, int ncomp) {
    if (ncomp < 1 || ncomp > 3) throw ParamError("VectorField: ncomp must be 1..3");
    comps_.reserve(ncomp);
    for (int c = 0; c < ncomp; ++c) comps_.emplace_back(dom);
}

VectorField& VectorField::operator+=(const VectorField& o) {
    if (ncomp() != o.ncomp()) throw ContractError("VectorField: component mismatch");
    for (int c = 0; c < ncomp(); ++c) comps_[c] += o.comps_[c];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    if (ncomp() != o.ncomp()) throw ContractError("VectorField: component mismatch");
    for (int c = 0; c < ncomp(); ++c) comps_[c] -= o.comps_[c];
    return *this;
}

VectorField& VectorField::operator*=(double c) {
    for (auto& f : comps_) f *= c;
    return *this;
}

void VectorField::axpy(double a, const VectorField& x) {
    if (ncomp() != x.ncomp()) throw ContractError("VectorField: component mismatch");
    for (int c = 0; c < ncomp(); ++c) comps_[c].axpy(a, x.comps_[c]);
}

bool VectorField::has_nan() const {
    for (const auto& f : comps_)
        if (f.has_nan()) return true;
    return false;
}

void for_each_point(const Domain& dom,
                    const std::function<void(std::size_t, double, double, double)>& f) {
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        std::size_t idx = 0;
        const int nz = box->dim == 3 ? box->n[2] : 1;
        for (int i = 0; i < box->n[0]; ++i)
            for (int j = 0; j < box->n[1]; ++j)
                for (int k = 0; k < nz; ++k, ++idx)
                    f(idx, i * box->spacing(0), j * box->spacing(1),
                      box->dim == 3 ? k * box->spacing(2) : 0.0);
    } else if (const auto* strip = std::get_if<StripDomain>(&dom)) {
        std::size_t idx = 0;
        for (int i = 0; i < strip->nx; ++i)
            for (int j = 0; j < strip->ny; ++j, ++idx)
                f(idx, strip->x_center(i), strip->y_center(j), 0.0);
    } else {
        const auto& ch = std::get<ChannelDomain>(dom);
        std::size_t idx = 0;
        for (int i = 0; i < ch.nx; ++i)
            for (int j = 0; j <= ch.nz; ++j, ++idx)
                f(idx, ch.x_node(i), 0.0, ch.z_node(j));
    }
}

}  // namespace turblab
