#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "nilslice/sampling.hpp"
#include "nilslice/spectra.hpp"
#include "nilslice/transversality.hpp"

using namespace nilslice;

TEST_CASE("exact certificates, all cells m <= 4") {
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B})
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; n <= m; ++n) {
                const OrbitIndex idx{kind, m, n};
                if (!orbit_index_valid(idx)) continue;
                const TransversalityCertificate cert = transversality_certificate(idx);
                CHECK(cert.verdict);
                CHECK(cert.dim_V == m + 2 * n);
                CHECK(cert.dim_g == algebra_dim(kind, m));
                CHECK(cert.rank_ad == cert.dim_g - cert.dim_V);  // orbit codimension
                CHECK(cert.rank_joint == cert.dim_g);
            }
}

TEST_CASE("boundary sp slice certificate (modified matrix)") {
    const TransversalityCertificate cert = transversality_certificate({AlgebraKind::C, 4, 2});
    CHECK(cert.verdict);
    CHECK(cert.dim_V == 8);
}

TEST_CASE("fiber jacobian rank m at regular points") {
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        const OrbitIndex idx{kind, 3, kind == AlgebraKind::B ? 2 : 1};
        Rng rng(cell_seed(31, idx.kind, idx.m, idx.n, "tv-rank"));
        int checked = 0;
        for (int trial = 0; trial < 40 && checked < 3; ++trial) {
            const SliceCoords c = sample_coords(idx, rng);
            if (!is_regular(spectral_class_of(slice_point(idx, c)))) continue;
            ++checked;
            CHECK(fiber_jacobian_rank(idx, c) == idx.m);
            // rank is lambda-equivariant
            const SliceCoords scaled = lambda_act_coords(idx, GaussianRational::from_frac(3, 2), c);
            CHECK(fiber_jacobian_rank(idx, scaled) == idx.m);
        }
        CHECK(checked == 3);
    }
}

TEST_CASE("jacobian agrees with central finite differences") {
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        const OrbitIndex idx{kind, 3, 1};
        Rng rng(cell_seed(32, idx.kind, idx.m, idx.n, "tv-fd"));
        const SliceCoords c = sample_coords(idx, rng);
        const auto J = fiber_jacobian(idx, c);
        const auto flat = flatten_coords(c);
        const int cols = int(flat.size());
        const double h = 1e-6;
        double scale = 1.0;
        for (const auto& v : J) scale = std::max(scale, std::abs(v));
        // type D row 0 differentiates p rather than the constant coefficient
        const int row0 = kind == AlgebraKind::D ? 1 : 0;
        for (int k = 0; k < cols; ++k) {
            std::vector<std::complex<double>> fp(cols), fm(cols);
            for (int j = 0; j < cols; ++j) fp[j] = fm[j] = flat[j].to_complex();
            fp[k] += h;
            fm[k] -= h;
            const auto gp = reduced_charpoly_coeffs_flat(idx, fp);
            const auto gm = reduced_charpoly_coeffs_flat(idx, fm);
            for (int j = row0; j < idx.m; ++j) {
                const std::complex<double> fd = (gp[j] - gm[j]) / (2.0 * h);
                CHECK(std::abs(J[size_t(j) * cols + k] - fd) < 1e-6 * scale);
            }
        }
    }
}

TEST_CASE("type-D p-row matches the Pfaffian derivative where p = 0") {
    // mu with a zero entry is regular for type D, and there the constant
    // coefficient (-1)^m p^2 has vanishing differential while dp does not
    const OrbitIndex idx{AlgebraKind::D, 2, 0};
    SliceCoords c = zero_coords(idx);  // tau = 0: p = 0
    CHECK(p_invariant_exact(slice_point(idx, c)).is_zero());
    const auto J = fiber_jacobian(idx, c);
    const int cols = idx.m + 2 * idx.n;
    double row0 = 0.0;
    for (int k = 0; k < cols; ++k) row0 = std::max(row0, std::abs(J[size_t(0) * cols + k]));
    CHECK(row0 > 0.1);  // dp does not vanish at the nilpotent point
}
