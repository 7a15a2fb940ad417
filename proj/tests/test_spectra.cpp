#include <doctest.h>

#include <complex>

#include "nilslice/sampling.hpp"
#include "nilslice/spectra.hpp"

using namespace nilslice;

namespace {

std::vector<OrbitIndex> cells(int m_max, int m_min = 1) {
    std::vector<OrbitIndex> out;
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B})
        for (int m = m_min; m <= m_max; ++m)
            for (int n = 0; n <= m; ++n)
                if (orbit_index_valid({kind, m, n})) out.push_back({kind, m, n});
    return out;
}

}  // namespace

TEST_CASE("sp(8) n = 1 worked example") {
    const OrbitIndex idx{AlgebraKind::C, 4, 1};
    SliceCoords c = zero_coords(idx);
    c.a[0] = GaussianRational(1);   // A = t^2 - 1
    c.y[0] = GaussianRational(2);   // B = 2 - 3t
    c.z[0] = GaussianRational(3);
    const ClosedFormPolys p = closed_form_polys(idx, c);
    CHECK(p.A == Poly(std::vector<GaussianRational>{GaussianRational(-1), GaussianRational(0),
                                                    GaussianRational(1)}));
    CHECK(p.D == Poly::monomial(6));  // d = 0: D = t^{2(m-n)}
    CHECK(p.B == Poly(std::vector<GaussianRational>{GaussianRational(2), GaussianRational(-3)}));
    // chi = A D - B(t) B(-t) = (t^2-1) t^6 - (4 - 9t^2); the alternative
    // sign (-1)^m = +1 in front of B(t)B(-t) does not match the matrix
    const Poly chi = charpoly_exact(slice_point(idx, c));
    CHECK(chi == p.A * p.D - p.B * p.B.reflect());
    CHECK(chi != p.A * p.D + p.B * p.B.reflect());
}

TEST_CASE("characteristic-polynomial identities, exact, all kinds") {
    for (const auto& idx : cells(5, 2)) {
        Rng rng(cell_seed(21, idx.kind, idx.m, idx.n, "spectra-chi"));
        for (int trial = 0; trial < 3; ++trial) {
            const SliceCoords c = sample_coords(idx, rng);
            CHECK(charpoly_identity_check(idx, c).is_zero());
            // and against the determinant directly
            const Poly chi = charpoly_exact(slice_point(idx, c));
            const Poly lhs = idx.kind == AlgebraKind::B ? chi.shift_up(1) : chi;
            CHECK(lhs == closed_chi_flat(idx, flatten_coords(c)));
        }
    }
}

TEST_CASE("type-B closed forms: constant corrections for n >= 2") {
    const OrbitIndex idx{AlgebraKind::B, 5, 3};
    Rng rng(cell_seed(22, idx.kind, idx.m, idx.n, "spectra-b"));
    const SliceCoords c = sample_coords(idx, rng);
    const ClosedFormPolys p = closed_form_polys(idx, c);
    const GaussianRational half = GaussianRational::from_frac(1, 2);
    // n odd here: a = t^2 A - d0^2/2, dt2 = t^2 D + 2(-1)^{m-n} a0^2
    CHECK(p.a == p.A.shift_up(2) - Poly::constant(half * c.d0 * c.d0));
    CHECK(p.dt2 == p.D.shift_up(2) + Poly::constant(GaussianRational(2) * c.a0 * c.a0));
    CHECK(p.bt == p.B.shift_up(1) - Poly::constant(c.a0 * c.d0));
    // flip invariance of all three combinations
    SliceCoords f = c;
    f.a0 = -f.a0;
    f.d0 = -f.d0;
    const ClosedFormPolys q = closed_form_polys(idx, f);
    CHECK(q.a == p.a);
    CHECK(q.dt2 == p.dt2);
    CHECK(q.bt == p.bt);
}

TEST_CASE("reduced charpoly coefficients match the spectral class") {
    for (const auto& idx : cells(4, 2)) {
        Rng rng(cell_seed(23, idx.kind, idx.m, idx.n, "spectra-red"));
        const SliceCoords c = sample_coords(idx, rng);
        const auto coeffs = reduced_charpoly_coeffs_flat(idx, flatten_coords(c));
        REQUIRE(int(coeffs.size()) == idx.m);
        const SpectralClass tau = spectral_class_of(slice_point(idx, c));
        REQUIRE(int(tau.mu.size()) == idx.m);
        // sum of coeff_j z^j + z^m vanishes at each squared eigenvalue
        double scale = 1.0;
        for (const auto& v : coeffs) scale = std::max(scale, std::abs(v.to_complex()));
        for (const auto& z : tau.mu) {
            std::complex<double> acc = 1.0;
            for (int j = idx.m - 1; j >= 0; --j) acc = acc * z + coeffs[j].to_complex();
            CHECK(std::abs(acc) < 1e-6 * scale * (1.0 + std::pow(std::abs(z), idx.m)));
        }
    }
}

TEST_CASE("type-D sign invariant and q_tau reconstruction") {
    const OrbitIndex idx{AlgebraKind::D, 3, 1};
    Rng rng(cell_seed(24, idx.kind, idx.m, idx.n, "spectra-p"));
    // diagonal h-members: p is the product of the eigenvalue parameters
    GMatrix h(AlgebraKind::D, 3);
    const long xs[3] = {2, -3, 5};
    for (int i = 1; i <= 3; ++i) {
        h.at1(i, i) = GaussianRational(xs[i - 1]);
        h.at1(3 + i, 3 + i) = GaussianRational(-xs[i - 1]);
    }
    CHECK(p_invariant_exact(h) == GaussianRational(2 * -3 * 5));

    for (int trial = 0; trial < 5; ++trial) {
        const SliceCoords c = sample_coords(idx, rng);
        const GMatrix S = slice_point(idx, c);
        const SpectralClass tau = spectral_class_of(S);
        REQUIRE(tau.has_psign);
        // psign^2 equals the product of the mu (exactly p^2)
        std::complex<double> prod = 1.0;
        for (const auto& z : tau.mu) prod *= z;
        CHECK(std::abs(tau.psign * tau.psign - prod) < 1e-6 * (1.0 + std::abs(prod)));
        CHECK(std::abs(tau.psign - p_invariant_exact(S).to_complex()) < 1e-6);
        // q_tau: t * Q_tau + P_mu(0) = P_mu
        const PolyF Q = q_tau(tau);
        const PolyF P = p_mu(tau);
        const PolyF rebuilt = Q.shift_up(1) + PolyF::constant(P.coeff(0));
        for (int k = 0; k <= P.deg(); ++k)
            CHECK(std::abs(rebuilt.coeff(k) - P.coeff(k)) < 1e-9 * (1.0 + std::abs(P.coeff(k))));
    }
}

TEST_CASE("fiber residual vanishes on the fiber and detects perturbations") {
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        const OrbitIndex idx{kind, 4, kind == AlgebraKind::B ? 2 : 1};
        Rng rng(cell_seed(25, idx.kind, idx.m, idx.n, "spectra-fiber"));
        const SliceCoords c = sample_coords(idx, rng);
        const SpectralClass tau = spectral_class_of(slice_point(idx, c));
        const PolyF res = fiber_residual(idx, c, tau);
        double worst = 0.0;
        for (const auto& v : res.coeffs) worst = std::max(worst, std::abs(v));
        CHECK(worst < 1e-7);
        // a coordinate kick moves the point off this fiber
        SliceCoords moved = c;
        moved.z[0] += GaussianRational(1);
        const PolyF res2 = fiber_residual(idx, moved, tau);
        double kicked = 0.0;
        for (const auto& v : res2.coeffs) kicked = std::max(kicked, std::abs(v));
        CHECK(kicked > 1e-3);
    }
}

TEST_CASE("regularity predicate") {
    SpectralClass t;
    t.kind = AlgebraKind::C;
    t.m = 2;
    t.mu = {{1.0, 0.0}, {2.0, 0.0}};
    CHECK(is_regular(t));
    t.mu = {{1.0, 0.0}, {1.0, 0.0}};
    CHECK(!is_regular(t));
    t.mu = {{0.0, 0.0}, {2.0, 0.0}};
    CHECK(!is_regular(t));  // zero forbidden for C/B
    t.kind = AlgebraKind::D;
    CHECK(is_regular(t));  // zero allowed for D
}

TEST_CASE("kleinian degenerations") {
    for (int m = 2; m <= 5; ++m) {
        const KleinianReport c = kleinian_check(AlgebraKind::C, m);
        CHECK(c.pass);
        CHECK(c.type == "D" + std::to_string(m + 1));
        if (m >= 3) {  // so(2m) needs m >= 3 for the minimal orbit cell
            const KleinianReport d = kleinian_check(AlgebraKind::D, m);
            CHECK(d.pass);
            CHECK(d.type == "D" + std::to_string(m));
        }
        const KleinianReport b = kleinian_check(AlgebraKind::B, m);
        CHECK(b.pass);
        CHECK(b.type == "A" + std::to_string(2 * m - 1));
    }
}
