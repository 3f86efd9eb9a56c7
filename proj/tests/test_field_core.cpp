#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "turblab/checkpoint.hpp"
#include "turblab/diff_ops.hpp"
#include "turblab/field.hpp"
#include "turblab/leray.hpp"
#include "turblab/norms.hpp"
#include "turblab/series.hpp"
#include "turblab/spectral.hpp"
#include "turblab/time_integrator.hpp"

using namespace turblab;

namespace {

ScalarField random_field(const Domain& dom, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f(dom);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = dist(rng);
    return f;
}

// Independent O(n^2) DFT of a 2D field, evaluated at one stored mode index.
std::complex<double> direct_dft_2d(const ScalarField& f, const PeriodicBox& box, int m0,
                                   int m1) {
    std::complex<double> acc = 0.0;
    const int n0 = box.n[0], n1 = box.n[1];
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            const double phase =
                -2.0 * M_PI * (static_cast<double>(m0) * i / n0 +
                               static_cast<double>(m1) * j / n1);
            acc += f[static_cast<std::size_t>(i) * n1 + j] *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
    return acc / static_cast<double>(n0 * n1);
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("spectral transform: constant field has only the zero mode") {
    auto box = PeriodicBox::cube(2, 2.0 * M_PI, 16);
    ScalarField f{Domain(box)};
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 3.25;
    auto c = spectral_transform(f);
    CHECK(c[0].real() == doctest::Approx(3.25).epsilon(1e-13));
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-13);
}

TEST_CASE("spectral transform: cosine mode has conjugate pair of magnitude 1/2") {
    auto box = PeriodicBox::cube(2, 4.0, 16);
    auto f = ScalarField::sample(Domain(box),
                                 [](double x, double, double) { return std::cos(2.0 * M_PI * x / 4.0); });
    auto c = spectral_transform(f);
    // stored entry at (m0=1, m1=0); the partner at (-1,0) is implied
    const auto d = c.cdims();
    const std::complex<double> c10 = c[static_cast<std::size_t>(1) * d[1]];
    CHECK(std::abs(c10) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c10.imag() == doctest::Approx(0.0).epsilon(1e-12));
    // and by Hermitian symmetry the (n0-1, 0) entry is its conjugate
    const std::complex<double> cm1 = c[static_cast<std::size_t>(box.n[0] - 1) * d[1]];
    CHECK(std::abs(cm1 - std::conj(c10)) < 1e-13);
}

TEST_CASE("spectral transform matches direct DFT summation on a 16-point grid") {
    auto box = PeriodicBox::cube(2, 1.0, 16);
    auto f = random_field(Domain(box), 42);
    auto c = spectral_transform(f);
    const auto d = c.cdims();
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j) {
            const int m0 = mode_index(box.n[0], i);
            const auto want = direct_dft_2d(f, box, m0, j);
            const auto got = c[static_cast<std::size_t>(i) * d[1] + j];
            CHECK(std::abs(got - want) < 1e-12);
        }
}

TEST_CASE("spectral transform round-trip and Parseval within 1e-12") {
    for (int dim : {2, 3}) {
        auto box = PeriodicBox::cube(dim, 2.0 * M_PI, dim == 2 ? 32 : 16);
        auto f = random_field(Domain(box), 7);
        auto c = spectral_transform(f);
        auto back = inverse_transform(c);
        CHECK(max_abs_diff(f, back) < 1e-12 * linf_norm(f) + 1e-14);

        double spec_energy = 0.0;
        for_each_mode(box, [&](std::size_t flat, double, double, double, double w) {
            spec_energy += w * std::norm(c[flat]);
        });
        CHECK(spec_energy == doctest::Approx(mean_square(f)).epsilon(1e-12));
    }
}

TEST_CASE("spectral transform refuses non-periodic domains") {
    ScalarField f{Domain(StripDomain(4.0, 64, 16))};
    CHECK_THROWS_AS(spectral_transform(f), ContractError);
}

TEST_CASE("diff_ops: gradient of a constant vanishes") {
    for (Domain dom : {Domain(PeriodicBox::cube(2, 1.0, 16)),
                       Domain(StripDomain(2.0, 32, 16)), Domain(ChannelDomain(2.0, 16, 16))}) {
        ScalarField f(dom);
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = -1.5;
        auto g = gradient(f);
        for (int a = 0; a < g.ncomp(); ++a) CHECK(linf_norm(g.comp(a)) < 1e-11);
    }
}

TEST_CASE("diff_ops: curl of gradient vanishes on periodic boxes") {
    auto box = PeriodicBox::cube(3, 2.0 * M_PI, 16);
    auto f = ScalarField::sample(Domain(box), [](double x, double y, double z) {
        return std::sin(x) * std::cos(2 * y) + std::cos(x + z);
    });
    auto w = curl(gradient(f));
    for (int a = 0; a < 3; ++a) CHECK(linf_norm(w.comp(a)) < 1e-10);
}

TEST_CASE("diff_ops: laplacian of a sine is -(2pi/side)^2 sine") {
    const double side = 3.0;
    auto box = PeriodicBox::cube(2, side, 32);
    auto f = ScalarField::sample(Domain(box), [&](double x, double, double) {
        return std::sin(2.0 * M_PI * x / side);
    });
    auto lap = laplacian(f);
    const double k2 = std::pow(2.0 * M_PI / side, 2);
    ScalarField want = f;
    want *= -k2;
    CHECK(max_abs_diff(lap, want) < 1e-10);
}

TEST_CASE("diff_ops: laplacian equals div grad on periodic boxes") {
    auto box = PeriodicBox::cube(2, 2.0 * M_PI, 32);
    // band-limit the sample: first derivatives drop the sign-ambiguous
    // Nyquist modes, so the identity is asserted on resolved content
    auto c = spectral_transform(random_field(Domain(box), 3));
    dealias_truncate(c);
    auto f = inverse_transform(c);
    auto a = laplacian(f);
    auto b = divergence(gradient(f));
    CHECK(max_abs_diff(a, b) < 1e-10 * std::max(1.0, linf_norm(a)));
}

TEST_CASE("diff_ops are linear") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (Domain dom : {Domain(PeriodicBox::cube(2, 1.0, 16)),
                       Domain(StripDomain(1.0, 24, 12)), Domain(ChannelDomain(1.5, 16, 12))}) {
        const bool periodic = std::holds_alternative<PeriodicBox>(dom);
        const double tol = periodic ? 1e-12 : 1e-10;
        auto f = random_field(dom, 21);
        auto g = random_field(dom, 22);
        const double a = coeff(rng), b = coeff(rng);
        ScalarField combo = a * f + b * g;
        for (int axis = 0; axis < 2; ++axis) {
            auto lhs = deriv(combo, axis);
            ScalarField rhs = a * deriv(f, axis) + b * deriv(g, axis);
            const double scale = std::max(1.0, linf_norm(lhs));
            CHECK(max_abs_diff(lhs, rhs) < tol * scale);
        }
    }
}

TEST_CASE("leray: divergence-free input is returned unchanged") {
    auto box = PeriodicBox::cube(3, 2.0 * M_PI, 16);
    VectorField u{Domain(box), 3};
    u.comp(0) = ScalarField::sample(Domain(box),
                                    [](double, double y, double) { return std::sin(y); });
    u.comp(2) = ScalarField::sample(Domain(box),
                                    [](double x, double, double) { return std::cos(x); });
    auto p = leray_project(u);
    for (int a = 0; a < 3; ++a) CHECK(max_abs_diff(p.comp(a), u.comp(a)) < 1e-12);
}

TEST_CASE("leray: pure gradients project to zero") {
    auto box = PeriodicBox::cube(2, 2.0 * M_PI, 32);
    auto phi = ScalarField::sample(Domain(box), [](double x, double y, double) {
        return std::sin(x + 2 * y) + 0.3 * std::cos(3 * x);
    });
    auto g = gradient(phi);
    auto p = leray_project(g);
    for (int a = 0; a < 2; ++a) CHECK(linf_norm(p.comp(a)) < 1e-11);
}

TEST_CASE("leray matches the per-mode formula, is idempotent, kills divergence") {
    auto box = PeriodicBox::cube(3, 2.0 * M_PI, 16);
    VectorField u{Domain(box), 3};
    for (int a = 0; a < 3; ++a) u.comp(a) = random_field(Domain(box), 100 + a);
    auto p = leray_project(u);

    // oracle: same projection evaluated per mode straight from the transform
    std::vector<SpectralCoeffs> c = {spectral_transform(u.comp(0)),
                                     spectral_transform(u.comp(1)),
                                     spectral_transform(u.comp(2))};
    std::vector<SpectralCoeffs> pc = {spectral_transform(p.comp(0)),
                                      spectral_transform(p.comp(1)),
                                      spectral_transform(p.comp(2))};
    const double knyq = M_PI * box.n[0] / box.side[0];
    double worst = 0.0;
    for_each_mode(box, [&](std::size_t flat, double kx, double ky, double kz, double) {
        const double k2 = kx * kx + ky * ky + kz * kz;
        std::array<std::complex<double>, 3> want;
        if (k2 == 0.0) {
            want = {c[0][flat], c[1][flat], c[2][flat]};
        } else if (std::abs(kx) >= knyq - 1e-12 || std::abs(ky) >= knyq - 1e-12 ||
                   kz >= knyq - 1e-12) {
            want = {0.0, 0.0, 0.0};  // sign-ambiguous modes are dropped
        } else {
            const std::complex<double> kv =
                (kx * c[0][flat] + ky * c[1][flat] + kz * c[2][flat]) / k2;
            want = {c[0][flat] - kx * kv, c[1][flat] - ky * kv, c[2][flat] - kz * kv};
        }
        for (int a = 0; a < 3; ++a) worst = std::max(worst, std::abs(pc[a][flat] - want[a]));
    });
    CHECK(worst < 1e-12);

    auto pp = leray_project(p);
    for (int a = 0; a < 3; ++a) CHECK(max_abs_diff(pp.comp(a), p.comp(a)) < 1e-12);
    CHECK(linf_norm(divergence(p)) < 1e-10);
}

TEST_CASE("norms: constants, homogeneity") {
    auto box = PeriodicBox::cube(2, 1.0, 16);
    ScalarField f{Domain(box)};
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = -2.5;
    CHECK(linf_norm(f) == doctest::Approx(2.5));
    CHECK(holder_seminorm(f, 0.5) == doctest::Approx(0.0));
    CHECK(l2_norm(f) == doctest::Approx(2.5).epsilon(1e-12));

    auto g = random_field(Domain(box), 5);
    ScalarField g3 = 3.0 * g;
    CHECK(l2_norm(g3) == doctest::Approx(3.0 * l2_norm(g)).epsilon(1e-12));
    CHECK(linf_norm(g3) == doctest::Approx(3.0 * linf_norm(g)).epsilon(1e-12));
    CHECK(holder_seminorm(g3, 0.3) ==
          doctest::Approx(3.0 * holder_seminorm(g, 0.3)).epsilon(1e-12));
}

TEST_CASE("norms: Hoelder seminorm equals exhaustive pair search on a coarse grid") {
    auto box = PeriodicBox::cube(2, 1.0, 8);
    auto f = ScalarField::sample(Domain(box), [](double x, double, double) {
        return std::sin(2.0 * M_PI * x);
    });
    const double alpha = 0.5;
    // exhaustive all-pairs oracle with periodic minimum-image distance
    const int n = 8;
    const double h = 1.0 / 8;
    double oracle = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    if (i == i2 && j == j2) continue;
                    int di = std::abs(i - i2);
                    di = std::min(di, n - di);
                    int dj = std::abs(j - j2);
                    dj = std::min(dj, n - dj);
                    const double dist = h * std::sqrt(double(di * di + dj * dj));
                    const double q =
                        std::abs(f[static_cast<std::size_t>(i) * n + j] -
                                 f[static_cast<std::size_t>(i2) * n + j2]) /
                        std::pow(dist, alpha);
                    oracle = std::max(oracle, q);
                }
    const double got = holder_seminorm(f, alpha);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
    // at least the steepest-neighbor quotient
    const double steepest =
        std::abs(std::sin(2 * M_PI * h) - std::sin(0.0)) / std::pow(h, alpha);
    CHECK(got >= steepest - 1e-12);
    CHECK_THROWS_AS(holder_seminorm(f, 1.5), ParamError);
}

TEST_CASE("rk4: one step of y' = -y with dt = 0.1") {
    ScalarState y{1.0};
    auto rhs = [](const ScalarState& s, double) { return ScalarState{-s.v}; };
    auto y1 = rk4_step(y, rhs, 0.0, 0.1);
    CHECK(y1.v == doctest::Approx(0.9048375).epsilon(1e-12));
}

TEST_CASE("rk4: zero rhs leaves the state unchanged") {
    ScalarState y{0.7};
    auto rhs = [](const ScalarState&, double) { return ScalarState{0.0}; };
    CHECK(rk4_step(y, rhs, 0.0, 0.5).v == doctest::Approx(0.7));
}

TEST_CASE("rk4 observed order is ~4 on y' = -y") {
    auto rhs = [](const ScalarState& s, double) { return ScalarState{-s.v}; };
    auto integrate = [&](double dt) {
        ScalarState y{1.0};
        const int n = static_cast<int>(std::round(1.0 / dt));
        for (int i = 0; i < n; ++i) y = rk4_step(y, rhs, i * dt, dt);
        return std::abs(y.v - std::exp(-1.0));
    };
    const double e1 = integrate(0.1);
    const double e2 = integrate(0.05);
    const double order = std::log2(e1 / e2);
    CHECK(order > 3.7);
    CHECK(order < 4.3);
}

TEST_CASE("imex: pure heat mode gets the (1 + nu k^2 dt)^-1 multiplier") {
    const double nu = 0.3, dt = 0.1;
    auto box = PeriodicBox::cube(2, 1.0, 16);
    const double k = 2.0 * M_PI;  // first mode of the unit box
    auto f = ScalarField::sample(Domain(box),
                                 [&](double x, double, double) { return std::cos(k * x); });

    auto explicit_rhs = [](const ScalarField& s, double) {
        ScalarField z(s.domain());
        return z;
    };
    auto implicit_solve = [&](const ScalarField& s, double step) {
        auto c = spectral_transform(s);
        for_each_mode(box, [&](std::size_t flat, double kx, double ky, double kz, double) {
            const double k2 = kx * kx + ky * ky + kz * kz;
            c[flat] /= 1.0 + nu * k2 * step;
        });
        return inverse_transform(c);
    };
    auto out = imex_euler_step(f, explicit_rhs, implicit_solve, 0.0, dt);
    const double want = 1.0 / (1.0 + nu * k * k * dt);
    ScalarField expect = f;
    expect *= want;
    CHECK(max_abs_diff(out, expect) < 1e-12);
}

TEST_CASE("cfl guard refuses oversized steps") {
    CHECK_NOTHROW(require_cfl(1.0, 0.1, 0.05));
    CHECK_THROWS_AS(require_cfl(1.0, 0.1, 0.2), CflError);
}

TEST_CASE("checkpoints round-trip on every domain kind") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "turblab_ckpt_test";
    fs::create_directories(dir);
    int n = 0;
    for (Domain dom : {Domain(PeriodicBox::cube(3, 2.0, 8)),
                       Domain(StripDomain(3.0, 32, 8)), Domain(ChannelDomain(1.0, 8, 8))}) {
        auto f = random_field(dom, 700 + n);
        const std::string path = (dir / ("f" + std::to_string(n++) + ".tlb")).string();
        write_checkpoint(path, f, {{"time", "1.25"}, {"scheme", "rk4"}});
        auto back = read_scalar_checkpoint(path);
        REQUIRE(domain_equal(back.domain(), dom));
        CHECK(max_abs_diff(f, back) == 0.0);
        auto meta = read_metadata(path);
        CHECK(meta.at("time") == "1.25");
        CHECK(meta.at("scheme") == "rk4");
    }
    // vector field round-trip
    Domain dom{PeriodicBox::cube(2, 1.0, 16)};
    VectorField v(dom, 2);
    v.comp(0) = random_field(dom, 800);
    v.comp(1) = random_field(dom, 801);
    const std::string path = (dir / "v.tlb").string();
    write_checkpoint(path, v);
    auto back = read_vector_checkpoint(path);
    REQUIRE(back.ncomp() == 2);
    CHECK(max_abs_diff(back.comp(0), v.comp(0)) == 0.0);
    CHECK(max_abs_diff(back.comp(1), v.comp(1)) == 0.0);
}

TEST_CASE("diagnostics series: ordering, integration, csv") {
    DiagnosticsSeries s({"a", "b"});
    s.add_row(0.0, {0.0, 1.0});
    s.add_row(0.5, {0.5, 1.0});
    s.add_row(1.0, {1.0, 1.0});
    CHECK_THROWS_AS(s.add_row(1.0, {2.0, 2.0}), ContractError);
    CHECK(s.integrate("a") == doctest::Approx(0.5));
    CHECK(s.time_average("a", 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(s.time_average("b", 0.25, 0.75) == doctest::Approx(1.0));
    CHECK_THROWS_AS(s.time_average("a", 0.0, 2.0), ParamError);

    namespace fs = std::filesystem;
    const auto path = fs::temp_directory_path() / "turblab_series_test.csv";
    s.write_csv(path.string(), "deadbeef");
    std::ifstream is(path);
    std::string line;
    std::getline(is, line);
    CHECK(line == "# config_hash: deadbeef");
    std::getline(is, line);
    CHECK(line == "t,a,b");
}
