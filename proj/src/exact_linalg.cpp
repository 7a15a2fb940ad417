#include "nilslice/exact_linalg.hpp"

namespace nilslice {

namespace {

// Multiply each row by the LCM of its component denominators so all entries
// become Gaussian integers; rank and row spans are unchanged.
void clear_row_denominators(QMat& M) {
    for (int i = 0; i < M.rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < M.cols; ++j) {
            const GaussianRational& v = M.at(i, j);
            mpz_class d1 = v.re.get_den(), d2 = v.im.get_den();
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), d2.get_mpz_t());
        }
        if (l == 1) continue;
        GaussianRational f{Rat(l), Rat(0)};
        for (int j = 0; j < M.cols; ++j) M.at(i, j) *= f;
    }
}

}  // namespace

int rank_exact(QMat M) {
    clear_row_denominators(M);
    const int R = M.rows, C = M.cols;
    int r = 0;
    GaussianRational prev(1);
    while (r < R && r < C) {
        // full pivoting over the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = r; i < R && pi < 0; ++i)
            for (int j = r; j < C; ++j)
                if (!M.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < C; ++j) std::swap(M.at(pi, j), M.at(r, j));
        if (pj != r)
            for (int i = 0; i < R; ++i) std::swap(M.at(i, pj), M.at(i, r));
        // Bareiss update: divisions are exact over the Gaussian integers
        for (int i = r + 1; i < R; ++i)
            for (int j = r + 1; j < C; ++j)
                M.at(i, j) = (M.at(r, r) * M.at(i, j) - M.at(i, r) * M.at(r, j)) / prev;
        for (int i = r + 1; i < R; ++i) M.at(i, r) = GaussianRational();
        prev = M.at(r, r);
        ++r;
    }
    return r;
}

std::optional<std::vector<GaussianRational>> solve_exact(QMat A, std::vector<GaussianRational> b) {
    const int R = A.rows, C = A.cols;
    if (int(b.size()) != R) throw ShapeMismatch("solve_exact: rhs length mismatch");
    std::vector<int> pivot_col;
    int r = 0;
    for (int j = 0; j < C && r < R; ++j) {
        int pi = -1;
        for (int i = r; i < R; ++i)
            if (!A.at(i, j).is_zero()) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        if (pi != r) {
            for (int k = 0; k < C; ++k) std::swap(A.at(pi, k), A.at(r, k));
            std::swap(b[pi], b[r]);
        }
        const GaussianRational inv = A.at(r, j).inverse();
        for (int k = j; k < C; ++k) A.at(r, k) *= inv;
        b[r] *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || A.at(i, j).is_zero()) continue;
            const GaussianRational f = A.at(i, j);
            for (int k = j; k < C; ++k) A.at(i, k) -= f * A.at(r, k);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (int i = r; i < R; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(C);
    for (int k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
    return x;
}

std::vector<GaussianRational> charpoly_faddeev(const QMat& A) {
    const int n = A.rows;
    if (A.cols != n) throw ShapeMismatch("charpoly_faddeev: square matrix required");
    std::vector<GaussianRational> c(n + 1);
    c[n] = GaussianRational(1);
    QMat M = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        GaussianRational ck = -(M.trace() / GaussianRational(k));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return c;
}

GaussianRational det_exact(const QMat& A) {
    const int n = A.rows;
    if (A.cols != n) throw ShapeMismatch("det_exact: square matrix required");
    QMat M = A;
    GaussianRational det(1);
    for (int j = 0; j < n; ++j) {
        int pi = -1;
        for (int i = j; i < n; ++i)
            if (!M.at(i, j).is_zero()) {
                pi = i;
                break;
            }
        if (pi < 0) return GaussianRational();
        if (pi != j) {
            for (int k = 0; k < n; ++k) std::swap(M.at(pi, k), M.at(j, k));
            det = -det;
        }
        det *= M.at(j, j);
        const GaussianRational inv = M.at(j, j).inverse();
        for (int i = j + 1; i < n; ++i) {
            if (M.at(i, j).is_zero()) continue;
            const GaussianRational f = M.at(i, j) * inv;
            for (int k = j; k < n; ++k) M.at(i, k) -= f * M.at(j, k);
        }
    }
    return det;
}

GaussianRational pfaffian_exact(const QMat& A) {
    const int n = A.rows;
    if (A.cols != n) throw ShapeMismatch("pfaffian_exact: square matrix required");
    if (n % 2 != 0) throw OddDimension("pfaffian_exact: odd dimension");
    if (A.transpose() != (GaussianRational(-1) * A))
        throw NotAntisymmetric("pfaffian_exact: matrix is not antisymmetric");
    QMat M = A;
    GaussianRational pf(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int pi = -1;
        for (int i = k + 1; i < n; ++i)
            if (!M.at(k, i).is_zero()) {
                pi = i;
                break;
            }
        if (pi < 0) return GaussianRational();
        if (pi != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(M.at(pi, j), M.at(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(M.at(i, pi), M.at(i, k + 1));
            pf = -pf;
        }
        const GaussianRational pivot = M.at(k, k + 1);
        pf *= pivot;
        const GaussianRational inv = pivot.inverse();
        for (int j = k + 2; j < n; ++j) {
            const GaussianRational f = M.at(k, j) * inv;
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) M.at(j, c) -= f * M.at(k + 1, c);
            for (int r = 0; r < n; ++r) M.at(r, j) -= f * M.at(r, k + 1);
        }
    }
    return pf;
}

}  // namespace nilslice
