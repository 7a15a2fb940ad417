#include <doctest.h>

#include "nilslice/sampling.hpp"
#include "nilslice/slices.hpp"

using namespace nilslice;

namespace {

std::vector<OrbitIndex> cells(int m_max) {
    std::vector<OrbitIndex> out;
    for (const auto kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B})
        for (int m = 1; m <= m_max; ++m)
            for (int n = 0; n <= m; ++n)
                if (orbit_index_valid({kind, m, n})) out.push_back({kind, m, n});
    return out;
}

}  // namespace

TEST_CASE("orbit index validity") {
    CHECK(orbit_index_valid({AlgebraKind::C, 4, 2}));
    CHECK(!orbit_index_valid({AlgebraKind::C, 4, 3}));
    CHECK(orbit_index_valid({AlgebraKind::D, 5, 2}));
    CHECK(!orbit_index_valid({AlgebraKind::D, 4, 2}));
    CHECK(orbit_index_valid({AlgebraKind::B, 3, 2}));
    CHECK(!orbit_index_valid({AlgebraKind::B, 3, 0}));
    CHECK(!orbit_index_valid({AlgebraKind::B, 1, 1}));  // needs n < m
    CHECK(!orbit_index_valid({AlgebraKind::C, 0, 0}));
    CHECK_THROWS_AS(check_orbit_index({AlgebraKind::C, 4, 3}), InvalidIndex);
}

TEST_CASE("coordinate shapes and flattening") {
    for (const auto& idx : cells(6)) {
        const CoordShape s = coord_shape(idx);
        CHECK(s.total() == idx.m + 2 * idx.n);
        switch (idx.kind) {
            case AlgebraKind::C:
                CHECK(s.na == idx.n);
                CHECK(s.nz == idx.n);
                CHECK(s.nd == idx.m - idx.n);
                break;
            case AlgebraKind::D:
                CHECK(s.nz == idx.n + 1);
                CHECK(s.nd == idx.m - idx.n - 1);
                break;
            case AlgebraKind::B:
                CHECK(s.na == idx.n - 1);
                CHECK(s.nz == idx.n);
                CHECK(s.nd == idx.m - idx.n);
                CHECK(s.has_scalars);
                break;
        }
        Rng rng(cell_seed(3, idx.kind, idx.m, idx.n, "slices-flat"));
        const auto flat = sample_flat(rng, size_t(s.total()));
        CHECK(flatten_coords(unflatten_coords(idx, flat)) == flat);
    }
    CHECK_THROWS_AS(unflatten_coords({AlgebraKind::C, 2, 1}, {}), ShapeMismatch);
}

TEST_CASE("zero coordinates give the orbit representative") {
    for (const auto& idx : cells(5)) {
        CHECK(slice_point(idx, zero_coords(idx)) == nilpotent_rep(idx));
        CHECK(is_member(nilpotent_rep(idx)));
    }
}

TEST_CASE("slice points are algebra members and coords invert") {
    for (const auto& idx : cells(5)) {
        Rng rng(cell_seed(4, idx.kind, idx.m, idx.n, "slices-member"));
        for (int trial = 0; trial < 3; ++trial) {
            const SliceCoords c = sample_coords(idx, rng);
            const GMatrix S = slice_point(idx, c);
            CHECK(is_member(S));
            const SliceCoords back = coords_from_matrix(idx, S);
            CHECK(flatten_coords(back) == flatten_coords(c));
        }
    }
    // an arbitrary member is generally not on the slice
    const OrbitIndex jidx{AlgebraKind::C, 2, 1};
    const GMatrix junk = nilpotent_rep(jidx) + root_vector(AlgebraKind::C, 2, RootLabel::e_minus_e(1, 2));
    CHECK_THROWS_AS(coords_from_matrix(jidx, junk), NotInSlice);
}

TEST_CASE("the slice map is affine except at the sp boundary") {
    for (const auto& idx : cells(5)) {
        if (idx.kind == AlgebraKind::C && 2 * idx.n == idx.m) continue;
        Rng rng(cell_seed(5, idx.kind, idx.m, idx.n, "slices-affine"));
        const auto f1 = sample_flat(rng, size_t(coord_shape(idx).total()));
        const auto f2 = sample_flat(rng, size_t(coord_shape(idx).total()));
        auto sum = f1;
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += f2[k];
        const GMatrix lhs = slice_point(idx, unflatten_coords(idx, sum));
        const GMatrix rhs = slice_point(idx, unflatten_coords(idx, f1)) +
                            slice_point(idx, unflatten_coords(idx, f2)) - nilpotent_rep(idx);
        CHECK(lhs == rhs);
    }
    // boundary cell: the d_1 entry carries the quadratic z_n^2 term
    const OrbitIndex bd{AlgebraKind::C, 2, 1};
    SliceCoords c = zero_coords(bd);
    c.z[0] = GaussianRational(3);
    const GMatrix S = slice_point(bd, c);
    CHECK(S.at1(3, 1) == GaussianRational(9));  // d_1 + z_1^2 with d_1 = 0
    CHECK(flatten_coords(coords_from_matrix(bd, S)) == flatten_coords(c));
}

TEST_CASE("jm triples satisfy the bracket relations") {
    for (const auto& idx : cells(4)) {
        const JMTriple t = jm_triple(idx);
        CHECK(t.Nplus == nilpotent_rep(idx));
        CHECK(bracket(t.H, t.Nplus) == GaussianRational(2) * t.Nplus);
        CHECK(bracket(t.H, t.Nminus) == GaussianRational(-2) * t.Nminus);
        CHECK(bracket(t.Nplus, t.Nminus) == t.H);
    }
}

TEST_CASE("type-C lambda weights match the closed-form table") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; 2 * n <= m; ++n) {
            const OrbitIndex idx{AlgebraKind::C, m, n};
            const auto w = lambda_weights(idx);
            REQUIRE(int(w.size()) == m + 2 * n);
            int k = 0;
            for (int i = 1; i <= n; ++i) CHECK(w[k++] == 2 * i);          // a_i
            for (int i = 1; i <= n; ++i) CHECK(w[k++] == m - i + 1);      // y_i
            for (int i = 1; i <= n; ++i) CHECK(w[k++] == m - n - i + 1);  // z_i
            for (int j = 1; j <= m - n; ++j) CHECK(w[k++] == 2 * j);      // d_j
        }
}

TEST_CASE("pinned r = 2 action, sp(8) n = 1") {
    // z_1 carries weight m - n - 1 + 1 = 3, so r = 2 scales it by 8
    // (not by 32, which the exponent m + n - i + 1 would give)
    const OrbitIndex idx{AlgebraKind::C, 4, 1};
    SliceCoords c = zero_coords(idx);
    c.a[0] = GaussianRational(1);
    c.y[0] = GaussianRational(1);
    c.z[0] = GaussianRational(1);
    c.d[1] = GaussianRational(1);
    const SliceCoords s = lambda_act_coords(idx, GaussianRational(2), c);
    CHECK(s.a[0] == GaussianRational(4));    // weight 2
    CHECK(s.y[0] == GaussianRational(16));   // weight m = 4
    CHECK(s.z[0] == GaussianRational(8));    // weight 3
    CHECK(s.z[0] != GaussianRational(32));
    CHECK(s.d[1] == GaussianRational(16));   // weight 4
}

TEST_CASE("matrix and coordinate lambda actions agree") {
    for (const auto& idx : cells(4)) {
        Rng rng(cell_seed(6, idx.kind, idx.m, idx.n, "slices-lambda"));
        const GMatrix H = jm_triple(idx).H;
        for (int trial = 0; trial < 3; ++trial) {
            GaussianRational r = sample_rational(rng);
            if (r.is_zero()) r = GaussianRational(2);
            const SliceCoords c = sample_coords(idx, rng);
            CHECK(lambda_act_matrix(r, slice_point(idx, c), H) ==
                  slice_point(idx, lambda_act_coords(idx, r, c)));
        }
    }
}

TEST_CASE("embed_b places so(2m) inside so(2m+1)") {
    Rng rng(cell_seed(8, AlgebraKind::D, 3, 1, "slices-embed"));
    const auto basis = algebra_basis(AlgebraKind::D, 3);
    GMatrix Y(AlgebraKind::D, 3);
    for (const auto& b : basis) Y = Y + sample_rational(rng) * b;
    const GMatrix E = embed_b(Y);
    CHECK(E.kind == AlgebraKind::B);
    CHECK(is_member(E));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) CHECK(E.at1(i + 1, j + 1) == Y.at1(i, j));
    for (int i = 1; i <= 7; ++i) {
        CHECK(E.at1(1, i).is_zero());
        CHECK(E.at1(i, 1).is_zero());
    }
}
