#include "turblab/banded.hpp"

#include <lapacke.h>

#include <cstring>

namespace turblab {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ab_(static_cast<std::size_t>(ldab()) * n, 0.0) {
    if (n < 1 || kl < 0 || ku < 0) throw ParamError("BandedMatrix: bad shape");
}

double& BandedMatrix::at(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || j - i > ku_ || i - j > kl_)
        throw ContractError("BandedMatrix::at outside band");
    // row kl+ku+i-j of column j (LAPACK band layout with fill rows on top)
    return ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_ + i - j)];
}

double BandedMatrix::at(int i, int j) const {
    return const_cast<BandedMatrix*>(this)->at(i, j);
}

std::vector<double> BandedMatrix::to_dense() const {
    std::vector<double> d(static_cast<std::size_t>(n_) * n_, 0.0);
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
            d[static_cast<std::size_t>(i) * n_ + j] = at(i, j);
    return d;
}

BandedLU::BandedLU(BandedMatrix m) : m_(std::move(m)), ipiv_(m_.n()) {
    const lapack_int info =
        LAPACKE_dgbtrf(LAPACK_COL_MAJOR, m_.n(), m_.n(), m_.kl(), m_.ku(),
                       m_.storage().data(), m_.ldab(), ipiv_.data());
    if (info != 0) throw SolverAbort("banded LU factorization failed, info=" +
                                     std::to_string(info));
}

void BandedLU::solve_inplace(std::vector<double>& rhs) const {
    if (static_cast<int>(rhs.size()) != m_.n())
        throw ContractError("BandedLU::solve size mismatch");
    const lapack_int info = LAPACKE_dgbtrs(
        LAPACK_COL_MAJOR, 'N', m_.n(), m_.kl(), m_.ku(), 1,
        const_cast<double*>(m_.storage().data()), m_.ldab(),
        const_cast<int*>(ipiv_.data()), rhs.data(), m_.n());
    if (info != 0) throw SolverAbort("banded solve failed");
}

std::vector<double> BandedLU::solve(std::vector<double> rhs) const {
    solve_inplace(rhs);
    return rhs;
}

void BandedLU::solve_inplace(std::vector<std::complex<double>>& rhs) const {
    std::vector<double> re(m_.n()), im(m_.n());
    for (int i = 0; i < m_.n(); ++i) {
        re[i] = rhs[i].real();
        im[i] = rhs[i].imag();
    }
    solve_inplace(re);
    solve_inplace(im);
    for (int i = 0; i < m_.n(); ++i) rhs[i] = {re[i], im[i]};
}

std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b, int n) {
    std::vector<int> ipiv(n);
    const lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, n, 1, a.data(), n,
                                          ipiv.data(), b.data(), 1);
    if (info != 0) throw SolverAbort("dense solve failed, info=" + std::to_string(info));
    return b;
}

std::vector<std::complex<double>> dense_solve(std::vector<std::complex<double>> a,
                                              std::vector<std::complex<double>> b, int n) {
    std::vector<int> ipiv(n);
    const lapack_int info = LAPACKE_zgesv(
        LAPACK_ROW_MAJOR, n, 1, reinterpret_cast<lapack_complex_double*>(a.data()), n,
        ipiv.data(), reinterpret_cast<lapack_complex_double*>(b.data()), 1);
    if (info != 0) throw SolverAbort("dense solve failed, info=" + std::to_string(info));
    return b;
}

BandedMatrixZ::BandedMatrixZ(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ab_(static_cast<std::size_t>(ldab()) * n, 0.0) {}

std::complex<double>& BandedMatrixZ::at(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || j - i > ku_ || i - j > kl_)
        throw ContractError("BandedMatrixZ::at outside band");
    return ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_ + i - j)];
}

std::vector<std::complex<double>> BandedMatrixZ::to_dense() const {
    std::vector<std::complex<double>> d(static_cast<std::size_t>(n_) * n_, 0.0);
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
            d[static_cast<std::size_t>(i) * n_ + j] =
                const_cast<BandedMatrixZ*>(this)->at(i, j);
    return d;
}

BandedLUZ::BandedLUZ(BandedMatrixZ m) : m_(std::move(m)), ipiv_(m_.n()) {
    const lapack_int info = LAPACKE_zgbtrf(
        LAPACK_COL_MAJOR, m_.n(), m_.n(), m_.kl(), m_.ku(),
        reinterpret_cast<lapack_complex_double*>(m_.storage().data()), m_.ldab(),
        ipiv_.data());
    if (info != 0) throw SolverAbort("complex banded LU failed, info=" +
                                     std::to_string(info));
}

void BandedLUZ::solve_inplace(std::vector<std::complex<double>>& rhs) const {
    if (static_cast<int>(rhs.size()) != m_.n())
        throw ContractError("BandedLUZ::solve size mismatch");
    const lapack_int info = LAPACKE_zgbtrs(
        LAPACK_COL_MAJOR, 'N', m_.n(), m_.kl(), m_.ku(), 1,
        reinterpret_cast<lapack_complex_double*>(
            const_cast<std::complex<double>*>(m_.storage().data())),
        m_.ldab(), const_cast<int*>(ipiv_.data()),
        reinterpret_cast<lapack_complex_double*>(rhs.data()), m_.n());
    if (info != 0) throw SolverAbort("complex banded solve failed");
}

BandedLU tridiagonal_lu(const std::vector<double>& lower, const std::vector<double>& diag,
                        const std::vector<double>& upper) {
    const int n = static_cast<int>(diag.size());
    BandedMatrix m(n, 1, 1);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = diag[i];
        if (i > 0) m.at(i, i - 1) = lower[i - 1];
        if (i + 1 < n) m.at(i, i + 1) = upper[i];
    }
    return BandedLU(std::move(m));
}

}  // namespace turblab
