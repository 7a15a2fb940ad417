#ifndef NILSLICE_TRANSVERSALITY_HPP
#define NILSLICE_TRANSVERSALITY_HPP

#include "nilslice/slices.hpp"

namespace nilslice {

/// Exact rank certificate that the slice direction space V_n meets
/// [g, X_n] trivially and fills the complement:
///   verdict  <=>  rank_joint == rank_ad + dim_V == dim g.
struct TransversalityCertificate {
    AlgebraKind kind;
    int m = 0, n = 0;
    int dim_g = 0;
    int rank_ad = 0;
    int dim_V = 0;
    int rank_joint = 0;
    bool verdict = false;
};

/// Computed over Q(i) by fraction-free elimination on the columns of
/// ad_matrix(X_n) joined with a basis of V_n (the tangent directions of
/// the slice at the origin; the symmetric difference quotient kills the
/// quadratic boundary terms exactly).
TransversalityCertificate transversality_certificate(const OrbitIndex& idx);

/// Numeric rank (singular values > tol * sigma_max) of the Jacobian of
/// the m fiber-defining functions with respect to the m+2n slice
/// coordinates at c.  These are the reduced-charpoly coefficients except
/// for type D, whose constant coefficient (-1)^m p^2 is replaced by the
/// Pfaffian invariant p itself (the fiber is cut out by (c_1..c_{m-1}, p)
/// and d(p^2) degenerates where p = 0).  Entries are computed exactly by
/// a 5-point difference that is exact on the (degree <= 4 per
/// coordinate) coefficient polynomials, then rank is taken numerically.
int fiber_jacobian_rank(const OrbitIndex& idx, const SliceCoords& c, double tol = 1e-8);

/// The exact Jacobian as a row-major (m) x (m+2n) complex matrix, for
/// cross-checks against central finite differences.
std::vector<std::complex<double>> fiber_jacobian(const OrbitIndex& idx, const SliceCoords& c);

}  // namespace nilslice

#endif
