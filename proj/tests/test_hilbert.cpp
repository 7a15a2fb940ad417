#include <doctest.h>

#include <complex>

#include "nilslice/hilbert.hpp"
#include "nilslice/sampling.hpp"

using namespace nilslice;

namespace {

std::vector<OrbitIndex> embed_cells(int m_max) {
    std::vector<OrbitIndex> out;
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B})
        for (int m = 2; m <= m_max; ++m)
            for (int n = 1; n <= m; ++n)
                if (orbit_index_valid({kind, m, n})) out.push_back({kind, m, n});
    return out;
}

}  // namespace

TEST_CASE("ideal point shapes and the fiber identity") {
    for (const auto& idx : embed_cells(4)) {
        Rng rng(cell_seed(41, idx.kind, idx.m, idx.n, "hilbert-shape"));
        for (int trial = 0; trial < 3; ++trial) {
            const SliceCoords c = sample_coords(idx, rng);
            const IdealPoint ip = ideal_point_from_coords(idx, c);
            CHECK(ip.Ahat.deg() == idx.n);
            CHECK(ip.Ahat.leading() == GaussianRational(1));
            CHECK(ip.Vhat.deg() <= idx.n - 1);
            CHECK(ip.Uhat.deg() <= (idx.kind == AlgebraKind::D ? idx.n : idx.n - 1));
            // fiber identity with the reduced charpoly, exact
            const auto coeffs = reduced_charpoly_coeffs_flat(idx, flatten_coords(c));
            Poly Phat = Poly::monomial(idx.m);
            for (int j = 0; j < idx.m; ++j)
                Phat = Phat + Poly::monomial(j, coeffs[j]);
            const Poly lhs0 = ip.Uhat * ip.Uhat + (ip.Vhat * ip.Vhat).shift_up(1);
            switch (idx.kind) {
                case AlgebraKind::C:
                    CHECK(Phat + lhs0 == ip.Ahat * ip.Dhat);
                    break;
                case AlgebraKind::D:
                    CHECK(Phat + lhs0 == (ip.Ahat * ip.Dhat).shift_up(1));
                    break;
                case AlgebraKind::B:
                    CHECK(Phat.shift_up(1) + lhs0 == ip.Ahat * ip.Dhat);
                    break;
            }
        }
    }
}

TEST_CASE("zero coordinates: A-hat = t^n") {
    for (const auto& idx : embed_cells(4)) {
        const IdealPoint ip = ideal_point_from_coords(idx, zero_coords(idx));
        CHECK(ip.Ahat == Poly::monomial(idx.n));
    }
}

TEST_CASE("support points lie on the fiber surface") {
    for (const auto& idx : embed_cells(4)) {
        if (idx.kind == AlgebraKind::B) continue;
        Rng rng(cell_seed(42, idx.kind, idx.m, idx.n, "hilbert-surface"));
        const SliceCoords c = sample_coords(idx, rng);
        const SpectralClass tau = spectral_class_of(slice_point(idx, c));
        const SupportPoints sp = support_points(ideal_point_from_coords(idx, c));
        REQUIRE(int(sp.pts.size()) == idx.n);
        const SurfaceSpec spec = surface(idx.kind, tau, idx);
        for (const auto& p : sp.pts)
            CHECK(std::abs(surface_residual(spec, p[0], p[1], p[2])) < 1e-6);
    }
}

TEST_CASE("round trip reconstructs the ideal point") {
    for (const auto& idx : embed_cells(4)) {
        if (idx.kind == AlgebraKind::B) continue;
        Rng rng(cell_seed(43, idx.kind, idx.m, idx.n, "hilbert-rt"));
        int done = 0;
        for (int trial = 0; trial < 10 && done < 3; ++trial) {
            const SliceCoords c = sample_coords(idx, rng);
            const IdealPoint ip = ideal_point_from_coords(idx, c);
            const SpectralClass tau = spectral_class_of(slice_point(idx, c));
            try {
                const IdealPointF rt = round_trip(support_points(ip), tau, idx);
                CHECK(ideal_point_distance(ip, rt) < 1e-8);
                ++done;
            } catch (const RepeatedSupport&) {
                continue;  // coincident support: reconstruction is ill-posed
            }
        }
        CHECK(done == 3);
    }
}

TEST_CASE("repeated support is rejected") {
    const OrbitIndex idx{AlgebraKind::C, 4, 2};
    SupportPoints sp;
    sp.kind = AlgebraKind::C;
    sp.pts = {{std::complex<double>(1, 0), std::complex<double>(2, 0), std::complex<double>(3, 0)},
              {std::complex<double>(0, 0), std::complex<double>(1, 0), std::complex<double>(3, 0)}};
    SpectralClass tau;
    tau.kind = AlgebraKind::C;
    tau.m = 4;
    tau.mu = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    CHECK_THROWS_AS(round_trip(sp, tau, idx), RepeatedSupport);
}

TEST_CASE("support distance") {
    SupportPoints a, b;
    a.kind = b.kind = AlgebraKind::C;
    a.pts = {{std::complex<double>(1, 0), std::complex<double>(0, 0), std::complex<double>(2, 0)},
             {std::complex<double>(5, 0), std::complex<double>(1, 0), std::complex<double>(-1, 0)}};
    b.pts = {a.pts[1], a.pts[0]};  // permuted: distance zero
    CHECK(support_distance(a, b) == 0.0);
    b.pts[0][0] += 1e-3;
    CHECK(support_distance(a, b) == doctest::Approx(1e-3));
    b.pts.pop_back();
    CHECK(support_distance(a, b) == std::numeric_limits<double>::infinity());
}

TEST_CASE("type-B partner involution and the 2:1 collapse") {
    const OrbitIndex idx{AlgebraKind::B, 4, 2};
    Rng rng(cell_seed(44, idx.kind, idx.m, idx.n, "hilbert-partner"));
    for (int trial = 0; trial < 5; ++trial) {
        const SliceCoords c = sample_coords(idx, rng);
        const SliceCoords p = b_fiber_partner(c);
        CHECK(p.a0 == -c.a0);
        CHECK(p.d0 == -c.d0);
        CHECK(flatten_coords(b_fiber_partner(p)) == flatten_coords(c));
        // partners produce the identical ideal point, hence identical support
        const IdealPoint i1 = ideal_point_from_coords(idx, c);
        const IdealPoint i2 = ideal_point_from_coords(idx, p);
        CHECK(i1.Ahat == i2.Ahat);
        CHECK(i1.Dhat == i2.Dhat);
        CHECK(i1.Uhat == i2.Uhat);
        CHECK(i1.Vhat == i2.Vhat);
        CHECK(support_distance(support_points(i1), support_points(i2)) == 0.0);
    }
    // fixed locus: a0 = d0 = 0
    SliceCoords fix = zero_coords(idx);
    CHECK(flatten_coords(b_fiber_partner(fix)) == flatten_coords(fix));
    CHECK_THROWS_AS(b_fiber_partner(zero_coords({AlgebraKind::C, 2, 1})), WrongKind);
}

TEST_CASE("numeric ideal point matches the exact one") {
    const OrbitIndex idx{AlgebraKind::D, 4, 1};
    Rng rng(cell_seed(45, idx.kind, idx.m, idx.n, "hilbert-num"));
    const SliceCoords c = sample_coords(idx, rng);
    const auto flat_exact = flatten_coords(c);
    std::vector<std::complex<double>> flat(flat_exact.size());
    for (size_t k = 0; k < flat.size(); ++k) flat[k] = flat_exact[k].to_complex();
    const IdealPoint exact = ideal_point_from_coords(idx, c);
    const IdealPointF numeric = ideal_point_numeric(idx, flat);
    CHECK(ideal_point_distance(exact, numeric) < 1e-9);
}
