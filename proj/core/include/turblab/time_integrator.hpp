#pragma once

#include <cmath>
#include <string>

#include "turblab/errors.hpp"

namespace turblab {

enum class Scheme { RK4, IMEX };

/// Refuse to step when the advective CFL number dt*umax/dx exceeds the limit.
inline void require_cfl(double umax, double dx_min, double dt, double limit = 0.5) {
    const double cfl = dt * umax / dx_min;
    if (cfl > limit + 1e-12)
        throw CflError("CFL violation: dt*umax/dx = " + std::to_string(cfl) +
                       " exceeds limit " + std::to_string(limit));
}

/// Classic RK4 step. State must support copy, axpy(a, other), and the rhs
/// callable must map (state, t) -> state.
template <class State, class Rhs>
State rk4_step(const State& y, Rhs&& rhs, double t, double dt) {
    State k1 = rhs(y, t);
    State y2 = y;
    y2.axpy(0.5 * dt, k1);
    State k2 = rhs(y2, t + 0.5 * dt);
    State y3 = y;
    y3.axpy(0.5 * dt, k2);
    State k3 = rhs(y3, t + 0.5 * dt);
    State y4 = y;
    y4.axpy(dt, k3);
    State k4 = rhs(y4, t + dt);

    State out = y;
    out.axpy(dt / 6.0, k1);
    out.axpy(dt / 3.0, k2);
    out.axpy(dt / 3.0, k3);
    out.axpy(dt / 6.0, k4);
    return out;
}

/// First-order IMEX Euler: the stiff linear part is treated implicitly,
/// everything else explicitly.
///   y* = y + dt * explicit_rhs(y, t)
///   y_{n+1} = implicit_solve(y*, dt)   solving (I - dt L) y_{n+1} = y*
/// For a single diffusive Fourier mode this reduces to the multiplier
/// (1 + nu k^2 dt)^{-1}.
template <class State, class ExplicitRhs, class ImplicitSolve>
State imex_euler_step(const State& y, ExplicitRhs&& explicit_rhs,
                      ImplicitSolve&& implicit_solve, double t, double dt) {
    State star = y;
    State f = explicit_rhs(y, t);
    star.axpy(dt, f);
    return implicit_solve(star, dt);
}

/// Adapter that lets plain double work as a State in the templates above.
struct ScalarState {
    double v = 0.0;
    void axpy(double a, const ScalarState& o) { v += a * o.v; }
};

}  // namespace turblab
