#ifndef NILSLICE_SLICES_HPP
#define NILSLICE_SLICES_HPP

#include <vector>

#include "nilslice/liealg.hpp"

namespace nilslice {

/// Index of a nilpotent orbit covered by the construction.
/// Validity: C: 2n <= m, n >= 0; D: 2n+1 <= m, n >= 0;
/// B: 2n-1 <= m, n >= 1 (the type-B slice is built from the D-slice at n-1).
struct OrbitIndex {
    AlgebraKind kind;
    int m;
    int n;
};

bool orbit_index_valid(const OrbitIndex& idx);
void check_orbit_index(const OrbitIndex& idx);  // throws InvalidIndex

/// Coordinates on the slice S_n, frozen ordering (a asc, y asc, z asc,
/// d asc, then a0, d0).  Lengths per kind:
///   C: a,y,z of length n, d of length m-n
///   D: a,y of length n, z of length n+1, d of length m-n-1
///   B: the D-lengths at n-1 plus the scalars a0, d0
struct SliceCoords {
    AlgebraKind kind;
    int m = 0, n = 0;
    std::vector<GaussianRational> a, y, z, d;
    GaussianRational a0, d0;  // type B only
};

/// Expected (a, y, z, d) lengths for idx.
struct CoordShape {
    int na, ny, nz, nd;
    bool has_scalars;
    int total() const { return na + ny + nz + nd + (has_scalars ? 2 : 0); }
};
CoordShape coord_shape(const OrbitIndex& idx);

SliceCoords zero_coords(const OrbitIndex& idx);
void check_shape(const OrbitIndex& idx, const SliceCoords& c);  // throws ShapeMismatch

/// Flatten to the frozen ordering (total length m + 2n) and back.
std::vector<GaussianRational> flatten_coords(const SliceCoords& c);
SliceCoords unflatten_coords(const OrbitIndex& idx, const std::vector<GaussianRational>& v);

/// The nilpotent orbit representative X_n (x_n for type B).
GMatrix nilpotent_rep(const OrbitIndex& idx);

struct JMTriple {
    GMatrix H, Nplus, Nminus;
};

/// JM triple with Nplus = nilpotent_rep(idx).  Type C uses the explicit
/// l_k / m_k block matrices; type D solves the exact linear system
/// [X, N] = H, [H, N] = -2N over the algebra basis; type B is the
/// inclusion image of the type-D triple at n-1 with H padded by a 0.
JMTriple jm_triple(const OrbitIndex& idx);

/// The slice element S(a, y, z, d).  Affine in the coordinates except for
/// the type-C boundary n = m/2, where the modified matrix M' carries the
/// quadratic entry d_1 + z_n^2 plus the extra z_n X_{e_m - e_n} term.
GMatrix slice_point(const OrbitIndex& idx, const SliceCoords& c);

/// Inverse of slice_point on its image; throws NotInSlice otherwise
/// (verified by full reconstruction).
SliceCoords coords_from_matrix(const OrbitIndex& idx, const GMatrix& S);

/// lambda_r(Y) = r * Delta^{-1} Y Delta with Delta = diag(r^{H_ii/2});
/// entry (i,j) picks up the factor r^{1 + (H_jj - H_ii)/2}.
GMatrix lambda_act_matrix(const GaussianRational& r, const GMatrix& Y, const GMatrix& H);

/// Integer weight w_k per flattened coordinate: lambda_r scales coordinate
/// k by r^{w_k}.  Type C (n < m/2) must match the closed-form table
/// (a_i: 2i, y_i: m-i+1, z_i: m-n-i+1, d_j: 2j); a mismatch throws.
/// D/B tables (and the C boundary case) are computed from
/// lambda_act_matrix on unit coordinate directions.
std::vector<long> lambda_weights(const OrbitIndex& idx);

SliceCoords lambda_act_coords(const OrbitIndex& idx, const GaussianRational& r, const SliceCoords& c);

/// Inclusion so(2m) -> so(2m+1), Y -> diag(0, Y).
GMatrix embed_b(const GMatrix& Y);

}  // namespace nilslice

#endif
