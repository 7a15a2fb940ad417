#include <doctest.h>

#include "nilslice/liealg.hpp"
#include "nilslice/sampling.hpp"

using namespace nilslice;

namespace {

GMatrix unit_pair(AlgebraKind k, int m, std::initializer_list<std::array<int, 3>> entries) {
    GMatrix M(k, m);
    for (const auto& e : entries) M.at1(e[0], e[1]) = GaussianRational(e[2]);
    return M;
}

GMatrix random_member(AlgebraKind k, int m, Rng& rng) {
    const auto basis = algebra_basis(k, m);
    GMatrix X(k, m);
    for (const auto& b : basis) X = X + sample_rational(rng) * b;
    return X;
}

}  // namespace

TEST_CASE("dimensions of the realizations") {
    CHECK(matrix_size(AlgebraKind::C, 3) == 6);
    CHECK(matrix_size(AlgebraKind::D, 3) == 6);
    CHECK(matrix_size(AlgebraKind::B, 3) == 7);
    CHECK(algebra_dim(AlgebraKind::C, 3) == 21);
    CHECK(algebra_dim(AlgebraKind::D, 3) == 15);
    CHECK(algebra_dim(AlgebraKind::B, 3) == 21);
}

TEST_CASE("pinned root vectors") {
    // sp(4): X_{2e_1} = E_{1,3}
    CHECK(root_vector(AlgebraKind::C, 2, RootLabel::two_e(1)) ==
          unit_pair(AlgebraKind::C, 2, {{1, 3, 1}}));
    // so(4): X_{e_1-e_2} = E_{1,2} - E_{4,3}
    CHECK(root_vector(AlgebraKind::D, 2, RootLabel::e_minus_e(1, 2)) ==
          unit_pair(AlgebraKind::D, 2, {{1, 2, 1}, {4, 3, -1}}));
    // so(5): X_{e_1} = E_{1,4} - E_{2,1}  (extra first row/column)
    CHECK(root_vector(AlgebraKind::B, 2, RootLabel::e(1)) ==
          unit_pair(AlgebraKind::B, 2, {{1, 4, 1}, {2, 1, -1}}));
    // so(5): X_{-e_1} = E_{1,2} - E_{4,1}
    CHECK(root_vector(AlgebraKind::B, 2, RootLabel::e(1, true)) ==
          unit_pair(AlgebraKind::B, 2, {{1, 2, 1}, {4, 1, -1}}));
    CHECK_THROWS_AS(root_vector(AlgebraKind::C, 2, RootLabel::e(1)), InvalidRoot);
    CHECK_THROWS_AS(root_vector(AlgebraKind::D, 2, RootLabel::e_minus_e(1, 3)), InvalidRoot);
}

TEST_CASE("the invariant form is pinned by the root vectors") {
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        const int m = 2;
        const int N = matrix_size(kind, m);
        const auto basis = algebra_basis(kind, m);
        // unknowns: the N*N entries of Phi; constraints: X^T Phi + Phi X = 0
        QMat sys(N * N * int(basis.size()), N * N);
        int row = 0;
        for (const auto& X : basis) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    // sum_k X.M(k,i) Phi(k,j) + Phi(i,k) X.M(k,j)
                    for (int k = 0; k < N; ++k) {
                        sys.at(row, k * N + j) += X.M.at(k, i);
                        sys.at(row, i * N + k) += X.M.at(k, j);
                    }
                    ++row;
                }
        }
        CHECK(rank_exact(sys) == N * N - 1);  // 1-dimensional nullspace
        // and the frozen Phi spans it
        const QMat Phi = bilinear_form(kind, m);
        for (const auto& X : basis)
            CHECK((X.M.transpose() * Phi + Phi * X.M).is_zero());
    }
}

TEST_CASE("basis, membership, expansion") {
    Rng rng(cell_seed(11, AlgebraKind::D, 3, 0, "liealg"));
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        for (int m = 1; m <= 3; ++m) {
            const auto basis = algebra_basis(kind, m);
            CHECK(int(basis.size()) == algebra_dim(kind, m));
            for (const auto& b : basis) CHECK(is_member(b));
            // expansion round trip on a random combination
            std::vector<GaussianRational> coef(basis.size());
            GMatrix X(kind, m);
            for (size_t k = 0; k < basis.size(); ++k) {
                coef[k] = sample_rational(rng);
                X = X + coef[k] * basis[k];
            }
            CHECK(expand_in_basis(X) == coef);
        }
    }
    GMatrix bad(AlgebraKind::C, 2);
    bad.at1(1, 1) = GaussianRational(1);  // not symplectic
    CHECK(!is_member(bad));
    CHECK_THROWS_AS(expand_in_basis(bad), NotMember);
}

TEST_CASE("bracket closes and ad matches") {
    Rng rng(cell_seed(12, AlgebraKind::C, 2, 0, "liealg-ad"));
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        const int m = 2;
        const GMatrix X = random_member(kind, m, rng);
        const GMatrix Y = random_member(kind, m, rng);
        const GMatrix Z = bracket(X, Y);
        CHECK(is_member(Z));
        // ad matrix columns agree with bracket against the basis
        const QMat ad = ad_matrix(X);
        const auto basis = algebra_basis(kind, m);
        const auto ycoef = expand_in_basis(Y);
        const auto zcoef = expand_in_basis(Z);
        for (size_t i = 0; i < basis.size(); ++i) {
            GaussianRational acc;
            for (size_t j = 0; j < basis.size(); ++j) acc += ad.at(int(i), int(j)) * ycoef[j];
            CHECK(acc == zcoef[i]);
        }
        // Jacobi identity on one random triple
        const GMatrix W = random_member(kind, m, rng);
        const GMatrix jac =
            bracket(X, bracket(Y, W)) + bracket(Y, bracket(W, X)) + bracket(W, bracket(X, Y));
        CHECK(jac.M.is_zero());
    }
}

TEST_CASE("charpoly parity of the realizations") {
    Rng rng(cell_seed(13, AlgebraKind::B, 3, 0, "liealg-chi"));
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        for (int m = 1; m <= 3; ++m) {
            const GMatrix X = random_member(kind, m, rng);
            const Poly chi = charpoly_exact(X);
            CHECK(chi.deg() == matrix_size(kind, m));
            // eigenvalues come in +-pairs: chi(-t) = (-1)^N chi(t)
            const Poly refl = chi.reflect();
            if (matrix_size(kind, m) % 2 == 0)
                CHECK(refl == chi);
            else
                CHECK(refl == -chi);
        }
    }
}

TEST_CASE("pfaffian") {
    QMat A(2, 2);
    A.at(0, 1) = GaussianRational::from_frac(5, 3);
    A.at(1, 0) = -A.at(0, 1);
    CHECK(pfaffian_exact(A) == GaussianRational::from_frac(5, 3));

    // 4x4: Pf = a12 a34 - a13 a24 + a14 a23
    Rng rng(cell_seed(14, AlgebraKind::D, 2, 0, "pfaffian"));
    for (int trial = 0; trial < 10; ++trial) {
        QMat M(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                M.at(i, j) = sample_rational(rng);
                M.at(j, i) = -M.at(i, j);
            }
        const GaussianRational want =
            M.at(0, 1) * M.at(2, 3) - M.at(0, 2) * M.at(1, 3) + M.at(0, 3) * M.at(1, 2);
        const GaussianRational pf = pfaffian_exact(M);
        CHECK(pf == want);
        CHECK(pf * pf == det_exact(M));
    }
    QMat odd(3, 3);
    CHECK_THROWS_AS(pfaffian_exact(odd), OddDimension);
    QMat notskew(2, 2);
    notskew.at(0, 0) = GaussianRational(1);
    CHECK_THROWS_AS(pfaffian_exact(notskew), NotAntisymmetric);
}

TEST_CASE("exact solve and rank") {
    Rng rng(cell_seed(15, AlgebraKind::C, 2, 0, "linalg"));
    for (int trial = 0; trial < 10; ++trial) {
        QMat A(4, 3);
        for (auto& v : A.e) v = sample_rational(rng);
        std::vector<GaussianRational> x{sample_rational(rng), sample_rational(rng),
                                        sample_rational(rng)};
        std::vector<GaussianRational> b(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) b[i] += A.at(i, j) * x[j];
        const auto sol = solve_exact(A, b);
        REQUIRE(sol.has_value());
        // residual zero (solution need not be unique)
        for (int i = 0; i < 4; ++i) {
            GaussianRational acc;
            for (int j = 0; j < 3; ++j) acc += A.at(i, j) * (*sol)[j];
            CHECK(acc == b[i]);
        }
    }
    QMat I = QMat::identity(5);
    CHECK(rank_exact(I) == 5);
    I.at(2, 2) = GaussianRational(0);
    CHECK(rank_exact(I) == 4);
}
