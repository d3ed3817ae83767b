#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>
#include <lapacke.h>

#include "levypide/errors.hpp"

namespace levypide {

// Real matrix stored by diagonals (LAPACK band layout): entry (i,j) with
// -kl <= j - i <= ku lives at data(ku + i - j, j). Entries outside the band
// are exactly zero.
struct BandedMatrix {
    int n = 0;
    int kl = 0;
    int ku = 0;
    Eigen::MatrixXd data;  // (kl + ku + 1) x n

    BandedMatrix() = default;
    BandedMatrix(int n_, int kl_, int ku_) : n(n_), kl(kl_), ku(ku_) {
        if (n < 3) throw GridError("BandedMatrix: size must be >= 3");
        data = Eigen::MatrixXd::Zero(kl + ku + 1, n);
    }

    static BandedMatrix identity(int n_) {
        BandedMatrix b(n_, 0, 0);
        b.data.setOnes();
        return b;
    }

    bool in_band(int i, int j) const {
        const int d = j - i;
        return d >= -kl && d <= ku;
    }

    double operator()(int i, int j) const {
        return in_band(i, j) ? data(ku + i - j, j) : 0.0;
    }

    double& at(int i, int j) {
        if (!in_band(i, j)) throw Error("BandedMatrix::at: index outside the band");
        return data(ku + i - j, j);
    }

    Eigen::MatrixXd to_dense() const {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i)
                A(i, j) = (*this)(i, j);
        return A;
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
        for (int j = 0; j < n; ++j) {
            const double vj = v[j];
            for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i)
                out[i] += (*this)(i, j) * vj;
        }
        return out;
    }
};

// out = sum_k coef[k] * term[k], bandwidths take the union.
inline BandedMatrix band_lincomb(const std::vector<std::pair<double, const BandedMatrix*>>& terms) {
    if (terms.empty()) throw Error("band_lincomb: empty term list");
    int n = terms.front().second->n, kl = 0, ku = 0;
    for (const auto& [c, m] : terms) {
        if (m->n != n) throw Error("band_lincomb: size mismatch");
        kl = std::max(kl, m->kl);
        ku = std::max(ku, m->ku);
    }
    BandedMatrix out(n, kl, ku);
    for (const auto& [c, m] : terms)
        for (int j = 0; j < n; ++j)
            for (int i = std::max(0, j - m->ku); i <= std::min(n - 1, j + m->kl); ++i)
                out.at(i, j) += c * (*m)(i, j);
    return out;
}

// C = A * B; bandwidths add.
inline BandedMatrix band_mul(const BandedMatrix& A, const BandedMatrix& B) {
    if (A.n != B.n) throw Error("band_mul: size mismatch");
    const int n = A.n;
    BandedMatrix C(n, std::min(n - 1, A.kl + B.kl), std::min(n - 1, A.ku + B.ku));
    for (int i = 0; i < n; ++i) {
        const int kmin = std::max(0, i - A.kl), kmax = std::min(n - 1, i + A.ku);
        for (int k = kmin; k <= kmax; ++k) {
            const double a = A(i, k);
            if (a == 0.0) continue;
            const int jmin = std::max({0, k - B.kl, i - C.kl});
            const int jmax = std::min({n - 1, k + B.ku, i + C.ku});
            for (int j = jmin; j <= jmax; ++j) C.at(i, j) += a * B(k, j);
        }
    }
    return C;
}

// LU factorization of a banded matrix (LAPACK dgbtrf), reusable across solves.
class BandedLU {
  public:
    explicit BandedLU(const BandedMatrix& A) : n_(A.n), kl_(A.kl), ku_(A.ku) {
        const int ldab = 2 * kl_ + ku_ + 1;
        ab_ = Eigen::MatrixXd::Zero(ldab, n_);
        ab_.block(kl_, 0, kl_ + ku_ + 1, n_) = A.data;
        ipiv_.resize(n_);
        const lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n_, n_, kl_, ku_,
                                               ab_.data(), ldab, ipiv_.data());
        if (info != 0)
            throw SolveError("BandedLU: dgbtrf failed with info=" + std::to_string(info));
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
        if (rhs.size() != n_) throw SolveError("BandedLU::solve: size mismatch");
        Eigen::VectorXd x = rhs;
        const lapack_int info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, 1,
                                               ab_.data(), int(ab_.rows()),
                                               ipiv_.data(), x.data(), n_);
        if (info != 0)
            throw SolveError("BandedLU: dgbtrs failed with info=" + std::to_string(info));
        return x;
    }

  private:
    int n_, kl_, ku_;
    Eigen::MatrixXd ab_;
    std::vector<lapack_int> ipiv_;
};

}  // namespace levypide
