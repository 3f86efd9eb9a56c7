#include "turblab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "turblab/diff_ops.hpp"

namespace turblab {

double sample_weight(const Domain& dom, std::size_t idx) {
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        (void)idx;
        return box->cell_volume();
    }
    if (const auto* strip = std::get_if<StripDomain>(&dom)) {
        (void)idx;
        return strip->dx() * strip->dy();
    }
    const auto& ch = std::get<ChannelDomain>(dom);
    const int j = static_cast<int>(idx % ch.nz_nodes());
    const double wz = (j == 0 || j == ch.nz) ? 0.5 * ch.dz() : ch.dz();
    return ch.dx() * wz;
}

double domain_volume(const Domain& dom) {
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        double v = box->side[0] * box->side[1];
        if (box->dim == 3) v *= box->side[2];
        return v;
    }
    if (const auto* strip = std::get_if<StripDomain>(&dom)) return 2.0 * strip->x_extent;
    return std::get<ChannelDomain>(dom).period;
}

double mean(const ScalarField& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * sample_weight(f.domain(), i);
    return acc / domain_volume(f.domain());
}

double mean_square(const ScalarField& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += f[i] * f[i] * sample_weight(f.domain(), i);
    return acc / domain_volume(f.domain());
}

double l2_norm(const ScalarField& f) {
    return std::sqrt(mean_square(f) * domain_volume(f.domain()));
}

double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

double mean_square(const VectorField& v) {
    double acc = 0.0;
    for (int c = 0; c < v.ncomp(); ++c) acc += mean_square(v.comp(c));
    return acc;
}

double l2_norm(const VectorField& v) {
    return std::sqrt(mean_square(v) * domain_volume(v.domain()));
}

double linf_norm(const VectorField& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.comp(0).size(); ++i) {
        double s = 0.0;
        for (int c = 0; c < v.ncomp(); ++c) s += v.comp(c)[i] * v.comp(c)[i];
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

namespace {

struct GridInfo {
    int n[3] = {1, 1, 1};
    double h[3] = {0, 0, 0};
    bool periodic[3] = {false, false, false};
    int dim = 2;
};

GridInfo grid_info(const Domain& dom) {
    GridInfo g;
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        g.dim = box->dim;
        for (int a = 0; a < box->dim; ++a) {
            g.n[a] = box->n[a];
            g.h[a] = box->spacing(a);
            g.periodic[a] = true;
        }
    } else if (const auto* strip = std::get_if<StripDomain>(&dom)) {
        g.dim = 2;
        g.n[0] = strip->nx;
        g.n[1] = strip->ny;
        g.h[0] = strip->dx();
        g.h[1] = strip->dy();
    } else {
        const auto& ch = std::get<ChannelDomain>(dom);
        g.dim = 2;
        g.n[0] = ch.nx;
        g.n[1] = ch.nz_nodes();
        g.h[0] = ch.dx();
        g.h[1] = ch.dz();
        g.periodic[0] = true;
    }
    return g;
}

}  // namespace

double holder_seminorm(const ScalarField& f, double alpha, int max_offset) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParamError("holder_seminorm: alpha must be in (0,1)");
    const GridInfo g = grid_info(f.domain());
    const int d = g.dim;

    auto flat = [&](int i, int j, int k) {
        return (static_cast<std::size_t>(i) * g.n[1] + j) * (d == 3 ? g.n[2] : 1) +
               (d == 3 ? k : 0);
    };

    double best = 0.0;
    // Enumerate offsets in a half-space to visit each unordered pair once.
    for (int oi = 0; oi <= max_offset; ++oi)
        for (int oj = (oi == 0 ? 0 : -max_offset); oj <= max_offset; ++oj)
            for (int ok = (d == 3 ? ((oi == 0 && oj == 0) ? 0 : -max_offset) : 0);
                 ok <= (d == 3 ? max_offset : 0); ++ok) {
                if (oi == 0 && oj == 0 && ok == 0) continue;
                if (oi > g.n[0] / 2 || std::abs(oj) > g.n[1] / 2 ||
                    (d == 3 && std::abs(ok) > g.n[2] / 2))
                    continue;
                const double dist = std::sqrt(oi * g.h[0] * oi * g.h[0] +
                                              oj * g.h[1] * oj * g.h[1] +
                                              ok * g.h[2] * ok * g.h[2]);
                const double denom = std::pow(dist, alpha);
                for (int i = 0; i < g.n[0]; ++i) {
                    int i2 = i + oi;
                    if (g.periodic[0]) {
                        i2 = (i2 + g.n[0]) % g.n[0];
                    } else if (i2 < 0 || i2 >= g.n[0]) {
                        continue;
                    }
                    for (int j = 0; j < g.n[1]; ++j) {
                        int j2 = j + oj;
                        if (g.periodic[1]) {
                            j2 = (j2 + g.n[1]) % g.n[1];
                        } else if (j2 < 0 || j2 >= g.n[1]) {
                            continue;
                        }
                        if (d == 2) {
                            const double q =
                                std::abs(f[flat(i, j, 0)] - f[flat(i2, j2, 0)]) / denom;
                            best = std::max(best, q);
                        } else {
                            for (int k = 0; k < g.n[2]; ++k) {
                                int k2 = k + ok;
                                if (g.periodic[2]) {
                                    k2 = (k2 + g.n[2]) % g.n[2];
                                } else if (k2 < 0 || k2 >= g.n[2]) {
                                    continue;
                                }
                                const double q =
                                    std::abs(f[flat(i, j, k)] - f[flat(i2, j2, k2)]) / denom;
                                best = std::max(best, q);
                            }
                        }
                    }
                }
            }
    return best;
}

double holder_norm(const ScalarField& f, double alpha) {
    return linf_norm(f) + holder_seminorm(f, alpha);
}

double grad_sup_frobenius(const VectorField& u) {
    const int dim = domain_dim(u.domain());
    std::vector<ScalarField> partials;
    partials.reserve(static_cast<std::size_t>(u.ncomp()) * dim);
    for (int c = 0; c < u.ncomp(); ++c)
        for (int a = 0; a < dim; ++a) partials.push_back(deriv(u.comp(c), a));
    double best = 0.0;
    for (std::size_t i = 0; i < u.comp(0).size(); ++i) {
        double s = 0.0;
        for (const auto& p : partials) s += p[i] * p[i];
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

double grad_mean_square(const VectorField& u) {
    const int dim = domain_dim(u.domain());
    double acc = 0.0;
    for (int c = 0; c < u.ncomp(); ++c)
        for (int a = 0; a < dim; ++a) acc += mean_square(deriv(u.comp(c), a));
    return acc;
}

}  // namespace turblab
