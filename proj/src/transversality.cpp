#include "nilslice/transversality.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "nilslice/spectra.hpp"

namespace nilslice {

namespace {

// Tangent directions of the slice at the origin, one per flat coordinate.
// The symmetric difference quotient (S(+e_k) - S(-e_k)) / 2 is exact here
// because every matrix entry is at most quadratic in a single coordinate.
std::vector<GMatrix> slice_directions(const OrbitIndex& idx) {
    const CoordShape shape = coord_shape(idx);
    const GaussianRational half = GaussianRational::from_frac(1, 2);
    std::vector<GMatrix> dirs;
    dirs.reserve(shape.total());
    for (int k = 0; k < shape.total(); ++k) {
        std::vector<GaussianRational> flat(shape.total());
        flat[k] = GaussianRational(1);
        const GMatrix plus = slice_point(idx, unflatten_coords(idx, flat));
        flat[k] = GaussianRational(-1);
        const GMatrix minus = slice_point(idx, unflatten_coords(idx, flat));
        dirs.push_back(half * (plus - minus));
    }
    return dirs;
}

}  // namespace

TransversalityCertificate transversality_certificate(const OrbitIndex& idx) {
    check_orbit_index(idx);
    TransversalityCertificate cert;
    cert.kind = idx.kind;
    cert.m = idx.m;
    cert.n = idx.n;
    cert.dim_g = algebra_dim(idx.kind, idx.m);

    const GMatrix X = nilpotent_rep(idx);
    const QMat ad = ad_matrix(X);
    cert.rank_ad = rank_exact(ad);

    const auto dirs = slice_directions(idx);
    cert.dim_V = int(dirs.size());

    QMat joint(cert.dim_g, cert.dim_g + cert.dim_V);
    for (int i = 0; i < cert.dim_g; ++i)
        for (int j = 0; j < cert.dim_g; ++j) joint.at(i, j) = ad.at(i, j);
    for (int k = 0; k < cert.dim_V; ++k) {
        const auto col = expand_in_basis(dirs[k]);
        for (int i = 0; i < cert.dim_g; ++i) joint.at(i, cert.dim_g + k) = col[i];
    }
    cert.rank_joint = rank_exact(joint);
    cert.verdict = (cert.rank_joint == cert.rank_ad + cert.dim_V) && (cert.rank_joint == cert.dim_g);
    return cert;
}

std::vector<std::complex<double>> fiber_jacobian(const OrbitIndex& idx, const SliceCoords& c) {
    check_shape(idx, c);
    const auto flat0 = flatten_coords(c);
    const int cols = int(flat0.size());
    const int m = idx.m;
    const GaussianRational inv12 = GaussianRational::from_frac(1, 12);
    const GaussianRational eight(8);
    std::vector<std::complex<double>> J(size_t(m) * cols);
    for (int k = 0; k < cols; ++k) {
        auto at = [&](long e) {
            auto flat = flat0;
            flat[k] += GaussianRational(e);
            auto g = reduced_charpoly_coeffs_flat(idx, flat);
            // type D: the constant coefficient is (-1)^m p^2, a function of
            // the Pfaffian invariant p; the fiber is cut out by
            // (c_1..c_{m-1}, p), so differentiate p itself
            if (idx.kind == AlgebraKind::D)
                g[0] = p_invariant_exact(slice_point(idx, unflatten_coords(idx, flat)));
            return g;
        };
        // five-point first-derivative stencil: exact for polynomials of
        // degree <= 4 in the k-th coordinate, which covers every
        // coefficient function here
        const auto gm2 = at(-2), gm1 = at(-1), gp1 = at(1), gp2 = at(2);
        for (int j = 0; j < m; ++j) {
            const GaussianRational d = inv12 * (gm2[j] - eight * gm1[j] + eight * gp1[j] - gp2[j]);
            J[size_t(j) * cols + k] = d.to_complex();
        }
    }
    return J;
}

int fiber_jacobian_rank(const OrbitIndex& idx, const SliceCoords& c, double tol) {
    const auto J = fiber_jacobian(idx, c);
    const int m = idx.m;
    const int cols = int(J.size()) / m;
    Eigen::MatrixXcd M(m, cols);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = J[size_t(i) * cols + j];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cut = tol * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

}  // namespace nilslice
