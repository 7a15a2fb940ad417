#ifndef NILSLICE_LIEALG_HPP
#define NILSLICE_LIEALG_HPP

#include <string>
#include <vector>

#include "nilslice/exact_linalg.hpp"
#include "nilslice/poly.hpp"

namespace nilslice {

/// The three matrix families: C = sp(2m), D = so(2m), B = so(2m+1).
enum class AlgebraKind { C, D, B };

std::string kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& s);

/// Matrix dimension N of the realization.
int matrix_size(AlgebraKind k, int m);

/// dim g: 2m^2+m for C and B, 2m^2-m for D.
int algebra_dim(AlgebraKind k, int m);

/// The invariant bilinear form Phi of the realization, frozen per kind:
///   C: [[0, I],[-I, 0]]      (antisymmetric)
///   D: [[0, I],[ I, 0]]      (symmetric)
///   B: 1 (+) [[0, I],[I, 0]] (symmetric, distinguished first coordinate)
/// These are pinned by the root vectors themselves: the nullspace of
/// X^T Phi + Phi X = 0 over all root vectors is 1-dimensional and spanned
/// by the constant above (checked in the test suite).
QMat bilinear_form(AlgebraKind k, int m);

/// A Lie algebra element together with its realization tag.
struct GMatrix {
    AlgebraKind kind;
    int m;
    QMat M;

    GMatrix(AlgebraKind k, int rank) : kind(k), m(rank), M(matrix_size(k, rank), matrix_size(k, rank)) {}
    GMatrix(AlgebraKind k, int rank, QMat mat) : kind(k), m(rank), M(std::move(mat)) {}

    int N() const { return matrix_size(kind, m); }
    /// 1-indexed entry access matching the E_{i,j} conventions.
    GaussianRational& at1(int i, int j) { return M.at(i - 1, j - 1); }
    const GaussianRational& at1(int i, int j) const { return M.at(i - 1, j - 1); }

    friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
    friend GMatrix operator-(const GMatrix& a, const GMatrix& b);
    friend GMatrix operator*(const GaussianRational& s, const GMatrix& a);
    friend bool operator==(const GMatrix& a, const GMatrix& b);
};

/// Symbolic root si*e_i + sj*e_j.  Single-index roots (2e_i in type C,
/// e_i in type B) are written with j = 0, sj = 0 and si = +-2 / +-1.
struct RootLabel {
    int i = 0, j = 0;
    int si = 0, sj = 0;

    static RootLabel e_minus_e(int i, int j) { return {i, j, 1, -1}; }
    static RootLabel e_plus_e(int i, int j, bool negative = false) {
        int s = negative ? -1 : 1;
        return {i, j, s, s};
    }
    static RootLabel two_e(int i, bool negative = false) { return {i, 0, negative ? -2 : 2, 0}; }
    static RootLabel e(int i, bool negative = false) { return {i, 0, negative ? -1 : 1, 0}; }
};

/// The root vector X_alpha per the realization's E_{i,j} formulas
/// (type B is offset by the extra first row/column).
GMatrix root_vector(AlgebraKind k, int m, const RootLabel& root);

/// Cartan basis element h_i = E_{i,i} - E_{m+i,m+i} (shifted for type B).
GMatrix cartan(AlgebraKind k, int m, int i);

GMatrix bracket(const GMatrix& X, const GMatrix& Y);

/// True iff M^T Phi + Phi M = 0 for the realization's form.
bool is_member(const GMatrix& M);

/// Frozen ordered basis of g: positive roots in lexicographic root order
/// (e_i-e_j with i<j by (i,j), then e_i+e_j with i<j by (i,j), then the
/// single-index roots by i), then the negative roots in the mirrored order,
/// then the Cartan basis h_1..h_m.
std::vector<GMatrix> algebra_basis(AlgebraKind k, int m);

/// Coefficients of X in the frozen basis.  Each basis vector owns a unique
/// canonical matrix entry with coefficient 1, so expansion is a direct read;
/// the result is verified by full reconstruction.  Throws NotMember if X is
/// not in the span.
std::vector<GaussianRational> expand_in_basis(const GMatrix& X);

/// Matrix of ad(X): Y -> [X, Y] in the frozen basis.
QMat ad_matrix(const GMatrix& X);

/// det(tI - M), monic of degree N, exact.
Poly charpoly_exact(const GMatrix& M);

}  // namespace nilslice

#endif
