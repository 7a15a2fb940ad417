#ifndef NILSLICE_EXACT_LINALG_HPP
#define NILSLICE_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "nilslice/errors.hpp"
#include "nilslice/scalar.hpp"

namespace nilslice {

/// Dense matrix over Q(i).
struct QMat {
    int rows = 0, cols = 0;
    std::vector<GaussianRational> e;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), e(size_t(r) * c) {}

    static QMat identity(int n) {
        QMat I(n, n);
        for (int k = 0; k < n; ++k) I.at(k, k) = GaussianRational(1);
        return I;
    }

    GaussianRational& at(int i, int j) { return e[size_t(i) * cols + j]; }
    const GaussianRational& at(int i, int j) const { return e[size_t(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& v : e)
            if (!v.is_zero()) return false;
        return true;
    }

    QMat transpose() const {
        QMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend QMat operator+(const QMat& a, const QMat& b) {
        QMat r = a;
        for (size_t k = 0; k < r.e.size(); ++k) r.e[k] += b.e[k];
        return r;
    }
    friend QMat operator-(const QMat& a, const QMat& b) {
        QMat r = a;
        for (size_t k = 0; k < r.e.size(); ++k) r.e[k] -= b.e[k];
        return r;
    }
    friend QMat operator*(const GaussianRational& s, const QMat& a) {
        QMat r = a;
        for (auto& v : r.e) v *= s;
        return r;
    }
    friend QMat operator*(const QMat& a, const QMat& b) {
        QMat r(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const GaussianRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols; ++j) {
                    const GaussianRational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
    friend bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

    GaussianRational trace() const {
        GaussianRational t;
        for (int k = 0; k < rows; ++k) t += at(k, k);
        return t;
    }
};

/// Exact rank via fraction-free Bareiss elimination with full pivoting;
/// rows are pre-scaled to Gaussian-integer entries so every interior
/// division is exact.
int rank_exact(QMat M);

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<GaussianRational>> solve_exact(QMat A, std::vector<GaussianRational> b);

/// det(t I - M), monic, via Faddeev-LeVerrier (divisions by integers only).
std::vector<GaussianRational> charpoly_faddeev(const QMat& M);

GaussianRational det_exact(const QMat& M);

/// Pf(M) for an antisymmetric even-dimensional matrix; Pf(M)^2 = det(M).
GaussianRational pfaffian_exact(const QMat& M);

}  // namespace nilslice

#endif
