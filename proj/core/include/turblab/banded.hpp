#pragma once

#include <complex>
#include <vector>

#include "turblab/errors.hpp"

namespace turblab {

/// General banded matrix in LAPACK band storage (column-major AB with
/// 2*kl+ku+1 rows, leading dimension includes fill space for the LU).
class BandedMatrix {
  public:
    BandedMatrix(int n, int kl, int ku);

    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    /// Entry A(i,j); valid when |i-j| is inside the band.
    double& at(int i, int j);
    double at(int i, int j) const;

    std::vector<double>& storage() { return ab_; }
    const std::vector<double>& storage() const { return ab_; }
    int ldab() const { return 2 * kl_ + ku_ + 1; }

    /// Dense copy, row-major n x n (for oracle solves and assembly checks).
    std::vector<double> to_dense() const;

  private:
    int n_, kl_, ku_;
    std::vector<double> ab_;
};

/// LU factorization of a banded matrix (dgbtrf); reusable for many
/// right-hand sides (dgbtrs). Throws SolverAbort on singular systems.
class BandedLU {
  public:
    explicit BandedLU(BandedMatrix m);

    void solve_inplace(std::vector<double>& rhs) const;
    std::vector<double> solve(std::vector<double> rhs) const;
    /// Applies the real factorization to the real and imaginary parts.
    void solve_inplace(std::vector<std::complex<double>>& rhs) const;

    int n() const { return m_.n(); }

  private:
    BandedMatrix m_;
    std::vector<int> ipiv_;
};

/// Dense LU solve (dgesv), used as the independent oracle for banded paths.
/// a is row-major n x n; returns x with a x = b.
std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b, int n);

/// Dense complex solve (zgesv), row-major.
std::vector<std::complex<double>> dense_solve(std::vector<std::complex<double>> a,
                                              std::vector<std::complex<double>> b, int n);

/// Complex banded solve (zgbsv). a_band maps (i,j) entries like BandedMatrix.
class BandedMatrixZ {
  public:
    BandedMatrixZ(int n, int kl, int ku);
    std::complex<double>& at(int i, int j);
    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }
    std::vector<std::complex<double>>& storage() { return ab_; }
    const std::vector<std::complex<double>>& storage() const { return ab_; }
    int ldab() const { return 2 * kl_ + ku_ + 1; }
    std::vector<std::complex<double>> to_dense() const;

  private:
    int n_, kl_, ku_;
    std::vector<std::complex<double>> ab_;
};

class BandedLUZ {
  public:
    explicit BandedLUZ(BandedMatrixZ m);
    void solve_inplace(std::vector<std::complex<double>>& rhs) const;
    int n() const { return m_.n(); }

  private:
    BandedMatrixZ m_;
    std::vector<int> ipiv_;
};

/// Tridiagonal factorization helper (kl = ku = 1 banded LU).
BandedLU tridiagonal_lu(const std::vector<double>& lower, const std::vector<double>& diag,
                        const std::vector<double>& upper);

}  // namespace turblab
