#include "nilslice/slices.hpp"

#include <map>
#include <mutex>

namespace nilslice {

bool orbit_index_valid(const OrbitIndex& idx) {
    if (idx.m < 1) return false;
    switch (idx.kind) {
        case AlgebraKind::C: return idx.n >= 0 && 2 * idx.n <= idx.m;
        case AlgebraKind::D: return idx.n >= 0 && 2 * idx.n + 1 <= idx.m;
        // n < m keeps the a0 and d0 directions independent (they coincide
        // when m = n = 1) and the partition [2(m-n)-1, 2n+1, 1] meaningful
        default: return idx.n >= 1 && 2 * idx.n - 1 <= idx.m && idx.n < idx.m;
    }
}

void check_orbit_index(const OrbitIndex& idx) {
    if (!orbit_index_valid(idx)) throw InvalidIndex("invalid orbit index");
}

namespace {

/// Short-root index carrying the d_0 coordinate of the so(2m+1) slice.
int b_d0_index(const OrbitIndex& idx) { return std::min(idx.m, idx.m - idx.n + 2); }

}  // namespace

CoordShape coord_shape(const OrbitIndex& idx) {
    check_orbit_index(idx);
    const int m = idx.m, n = idx.n;
    switch (idx.kind) {
        case AlgebraKind::C: return {n, n, n, m - n, false};
        case AlgebraKind::D: return {n, n, n + 1, m - n - 1, false};
        default: return {n - 1, n - 1, n, m - n, true};  // D shapes at n-1
    }
}

SliceCoords zero_coords(const OrbitIndex& idx) {
    const CoordShape s = coord_shape(idx);
    SliceCoords c;
    c.kind = idx.kind;
    c.m = idx.m;
    c.n = idx.n;
    c.a.resize(s.na);
    c.y.resize(s.ny);
    c.z.resize(s.nz);
    c.d.resize(s.nd);
    return c;
}

void check_shape(const OrbitIndex& idx, const SliceCoords& c) {
    const CoordShape s = coord_shape(idx);
    if (c.kind != idx.kind || c.m != idx.m || c.n != idx.n || int(c.a.size()) != s.na ||
        int(c.y.size()) != s.ny || int(c.z.size()) != s.nz || int(c.d.size()) != s.nd)
        throw ShapeMismatch("slice coordinates do not match the orbit index");
}

std::vector<GaussianRational> flatten_coords(const SliceCoords& c) {
    std::vector<GaussianRational> v;
    v.insert(v.end(), c.a.begin(), c.a.end());
    v.insert(v.end(), c.y.begin(), c.y.end());
    v.insert(v.end(), c.z.begin(), c.z.end());
    v.insert(v.end(), c.d.begin(), c.d.end());
    if (c.kind == AlgebraKind::B) {
        v.push_back(c.a0);
        v.push_back(c.d0);
    }
    return v;
}

SliceCoords unflatten_coords(const OrbitIndex& idx, const std::vector<GaussianRational>& v) {
    const CoordShape s = coord_shape(idx);
    if (int(v.size()) != s.total()) throw ShapeMismatch("flattened coordinate length mismatch");
    SliceCoords c = zero_coords(idx);
    size_t k = 0;
    for (auto& x : c.a) x = v[k++];
    for (auto& x : c.y) x = v[k++];
    for (auto& x : c.z) x = v[k++];
    for (auto& x : c.d) x = v[k++];
    if (s.has_scalars) {
        c.a0 = v[k++];
        c.d0 = v[k++];
    }
    return c;
}

GMatrix embed_b(const GMatrix& Y) {
    if (Y.kind != AlgebraKind::D) throw KindMismatch("embed_b: type-D input required");
    GMatrix out(AlgebraKind::B, Y.m);
    for (int i = 0; i < 2 * Y.m; ++i)
        for (int j = 0; j < 2 * Y.m; ++j) out.M.at(i + 1, j + 1) = Y.M.at(i, j);
    return out;
}

GMatrix nilpotent_rep(const OrbitIndex& idx) {
    check_orbit_index(idx);
    const int m = idx.m, n = idx.n;
    if (idx.kind == AlgebraKind::B) return embed_b(nilpotent_rep({AlgebraKind::D, m, n - 1}));
    GMatrix X(idx.kind, m);
    for (int i = 1; i <= m - 1; ++i) {
        if (i == m - n) continue;
        X = X + root_vector(idx.kind, m, RootLabel::e_minus_e(i, i + 1));
    }
    if (idx.kind == AlgebraKind::C) {
        X = X + root_vector(idx.kind, m, RootLabel::two_e(m - n));
        if (n >= 1) X = X + root_vector(idx.kind, m, RootLabel::two_e(m));
    } else {
        if (m - n >= 2) X = X + root_vector(idx.kind, m, RootLabel::e_plus_e(m - n - 1, m - n));
        if (n >= 1) X = X + root_vector(idx.kind, m, RootLabel::e_plus_e(m - n, m));
    }
    return X;
}

namespace {

// diag blocks l_k = diag(2k-1, 2k-3, ..., 1) and the subdiagonal matrix m_k
// with (j+1, j) entry j(2k - j)
void put_l_block(GMatrix& H, int start, int k, int sign) {
    for (int j = 0; j < k; ++j) H.at1(start + j, start + j) = GaussianRational(sign * (2 * k - 1 - 2 * j));
}

void put_m_block(QMat& M, int r0, int c0, int k, int sign, bool transpose) {
    for (int j = 1; j < k; ++j) {
        const long v = sign * j * (2L * k - j);
        if (transpose)
            M.at(r0 + j - 1, c0 + j) = GaussianRational(v);
        else
            M.at(r0 + j, c0 + j - 1) = GaussianRational(v);
    }
}

JMTriple jm_triple_c(const OrbitIndex& idx) {
    const int m = idx.m, n = idx.n;
    GMatrix H(AlgebraKind::C, m);
    put_l_block(H, 1, m - n, 1);
    put_l_block(H, m - n + 1, n, 1);
    put_l_block(H, m + 1, m - n, -1);
    put_l_block(H, m + m - n + 1, n, -1);

    GMatrix N(AlgebraKind::C, m);
    put_m_block(N.M, 0, 0, m - n, 1, false);
    put_m_block(N.M, m - n, m - n, n, 1, false);
    // bottom-right blocks are -m_k^T (forced by the symplectic condition)
    put_m_block(N.M, m, m, m - n, -1, true);
    put_m_block(N.M, m + m - n, m + m - n, n, -1, true);
    if (m - n >= 1) N.at1(m + m - n, m - n) = GaussianRational(long(m - n) * (m - n));
    if (n >= 1) N.at1(2 * m, m) = GaussianRational(long(n) * n);
    return {H, nilpotent_rep(idx), N};
}

GMatrix jm_h_d(const OrbitIndex& idx) {
    const int m = idx.m, n = idx.n;
    GMatrix H(AlgebraKind::D, m);
    for (int j = 0; j < m - n; ++j) {
        H.at1(1 + j, 1 + j) = GaussianRational(2 * (m - n - 1 - j));
        H.at1(m + 1 + j, m + 1 + j) = GaussianRational(-2 * (m - n - 1 - j));
    }
    for (int j = 0; j < n; ++j) {
        H.at1(m - n + 1 + j, m - n + 1 + j) = GaussianRational(2 * (n - j));
        H.at1(m + m - n + 1 + j, m + m - n + 1 + j) = GaussianRational(-2 * (n - j));
    }
    return H;
}

JMTriple jm_triple_d(const OrbitIndex& idx) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, JMTriple> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({idx.m, idx.n});
        if (it != cache.end()) return it->second;
    }
    const GMatrix H = jm_h_d(idx);
    const GMatrix X = nilpotent_rep(idx);
    const auto basis = algebra_basis(idx.kind, idx.m);
    const int dim = int(basis.size());
    // unknown N = sum x_k b_k with [X, N] = H and [H, N] + 2N = 0
    QMat A(2 * dim, dim);
    std::vector<GaussianRational> rhs(2 * dim);
    for (int c = 0; c < dim; ++c) {
        const auto col1 = expand_in_basis(bracket(X, basis[c]));
        const auto col2 = expand_in_basis(bracket(H, basis[c]));
        for (int r = 0; r < dim; ++r) {
            A.at(r, c) = col1[r];
            A.at(dim + r, c) = col2[r];
        }
        A.at(dim + c, c) += GaussianRational(2);
    }
    const auto h_coeffs = expand_in_basis(H);
    for (int r = 0; r < dim; ++r) rhs[r] = h_coeffs[r];
    const auto sol = solve_exact(A, rhs);
    if (!sol) throw Error("jm_triple: no solution to the JM system (type D)");
    GMatrix N(idx.kind, idx.m);
    for (int k = 0; k < dim; ++k)
        if (!(*sol)[k].is_zero()) N = N + (*sol)[k] * basis[k];
    JMTriple t{H, X, N};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(idx.m, idx.n), t);
    return t;
}

}  // namespace

JMTriple jm_triple(const OrbitIndex& idx) {
    check_orbit_index(idx);
    switch (idx.kind) {
        case AlgebraKind::C: return jm_triple_c(idx);
        case AlgebraKind::D: return jm_triple_d(idx);
        default: {
            const JMTriple t = jm_triple_d({AlgebraKind::D, idx.m, idx.n - 1});
            return {embed_b(t.H), embed_b(t.Nplus), embed_b(t.Nminus)};
        }
    }
}

namespace {

// symmetric write into the lower-left m x m block of a type-C matrix
void put_m_sym(GMatrix& S, int i, int j, const GaussianRational& v) {
    const int m = S.m;
    S.at1(m + i, j) += v;
    if (i != j) S.at1(m + j, i) += v;
}

GMatrix slice_point_c(const OrbitIndex& idx, const SliceCoords& c) {
    const int m = idx.m, n = idx.n;
    GMatrix S = nilpotent_rep(idx);
    const bool modified = (2 * n == m);
    for (int i = 1; i <= m - n; ++i) {
        GaussianRational v = c.d[m - n - i];  // d_{m-n-i+1}
        if (modified && i == m - n) v += c.z[n - 1] * c.z[n - 1];  // d_1 + z_n^2
        put_m_sym(S, i, i, v);
    }
    for (int i = 1; i <= n; ++i) put_m_sym(S, m - n + i, m - n + i, c.a[n - i]);  // a_{n-i+1}
    for (int i = 1; i <= n; ++i) put_m_sym(S, 1, m - n + i, c.y[i - 1]);
    const int z_in_matrix = modified ? n - 1 : n;
    for (int j = 1; j <= z_in_matrix; ++j) put_m_sym(S, 1 + j, m, c.z[j - 1]);
    if (modified) {
        // extra z_n X_{e_m - e_n} term
        const GaussianRational& zn = c.z[n - 1];
        S.at1(m, n) += zn;
        S.at1(m + n, 2 * m) -= zn;
    }
    return S;
}

GMatrix slice_point_d(const OrbitIndex& idx, const SliceCoords& c) {
    const int m = idx.m, n = idx.n;
    GMatrix S = nilpotent_rep(idx);
    if (n >= 1) {
        // a_1 E_{m-n,n} block pair
        S.at1(m - n, m) += c.a[0];
        S.at1(2 * m, 2 * m - n) -= c.a[0];
    }
    if (m - n - 1 >= 1) {
        // the d_1 entries of -M_{z,d} and M_{z,d}^T
        S.at1(m - n, m - n - 1) -= c.d[0];
        S.at1(m + m - n - 1, m + m - n) += c.d[0];
    }
    for (int i = 1; i <= n - 1; ++i) {
        // M_a superdiagonal a_n .. a_2
        S.at1(m + m - n + i, m - n + i + 1) += c.a[n - i];
        S.at1(m + m - n + i + 1, m - n + i) -= c.a[n - i];
    }
    for (int i = 1; i <= n; ++i) {
        // M_y first row / -M_y^T first column
        S.at1(m + 1, m - n + i) += c.y[i - 1];
        S.at1(m + m - n + i, 1) -= c.y[i - 1];
    }
    for (int j = 1; j <= n + 1; ++j) {
        // M_z last row inside -M_{z,d} and M_{z,d}^T
        S.at1(m - n, j) -= c.z[j - 1];
        S.at1(m + j, m + m - n) += c.z[j - 1];
    }
    for (int k = 1; k <= m - n - 1; ++k) {
        // M_d superdiagonal d_{m-n-1} .. d_1
        S.at1(m + k, k + 1) += c.d[m - n - 1 - k];
        S.at1(m + k + 1, k) -= c.d[m - n - 1 - k];
    }
    return S;
}

GMatrix slice_point_b(const OrbitIndex& idx, const SliceCoords& c) {
    const int m = idx.m, n = idx.n;
    SliceCoords cd = c;
    cd.kind = AlgebraKind::D;
    cd.n = n - 1;
    GMatrix S = embed_b(slice_point_d({AlgebraKind::D, m, n - 1}, cd));
    // a_0 X_{-e_1} + d_0 X_{-e_j0} with j0 = min(m, m - n + 2); any other
    // short-root placement of d_0 leaves the slice tangent to the orbit.
    const int j0 = b_d0_index(idx);
    S.at1(1, 2) += c.a0;
    S.at1(m + 2, 1) -= c.a0;
    S.at1(1, j0 + 1) += c.d0;
    S.at1(m + j0 + 1, 1) -= c.d0;
    return S;
}

}  // namespace

GMatrix slice_point(const OrbitIndex& idx, const SliceCoords& c) {
    check_shape(idx, c);
    switch (idx.kind) {
        case AlgebraKind::C: return slice_point_c(idx, c);
        case AlgebraKind::D: return slice_point_d(idx, c);
        default: return slice_point_b(idx, c);
    }
}

namespace {

SliceCoords extract_c(const OrbitIndex& idx, const GMatrix& S) {
    const int m = idx.m, n = idx.n;
    const bool modified = (2 * n == m);
    SliceCoords c = zero_coords(idx);
    const GMatrix V = S - nilpotent_rep(idx);
    for (int i = 1; i <= n; ++i) c.a[n - i] = V.at1(m + m - n + i, m - n + i);
    for (int i = 1; i <= n; ++i) c.y[i - 1] = V.at1(m + 1, m - n + i);
    const int z_in_matrix = modified ? n - 1 : n;
    for (int j = 1; j <= z_in_matrix; ++j) c.z[j - 1] = V.at1(m + 1 + j, m);
    if (modified) c.z[n - 1] = V.at1(m, n);
    for (int i = 1; i <= m - n; ++i) {
        GaussianRational v = V.at1(m + i, i);
        if (modified && i == m - n) v -= c.z[n - 1] * c.z[n - 1];
        c.d[m - n - i] = v;
    }
    return c;
}

SliceCoords extract_d(const OrbitIndex& idx, const GMatrix& S) {
    const int m = idx.m, n = idx.n;
    SliceCoords c = zero_coords(idx);
    const GMatrix V = S - nilpotent_rep(idx);
    if (n >= 1) c.a[0] = V.at1(m - n, m);
    for (int i = 1; i <= n - 1; ++i) c.a[n - i] = V.at1(m + m - n + i, m - n + i + 1);
    for (int i = 1; i <= n; ++i) c.y[i - 1] = V.at1(m + 1, m - n + i);
    for (int k = 1; k <= m - n - 1; ++k) c.d[m - n - 1 - k] = V.at1(m + k, k + 1);
    for (int j = 1; j <= n + 1; ++j) {
        GaussianRational v = V.at1(m + j, m + m - n);
        if (j == m - n - 1) v -= c.d[0];  // entry shared with the d_1 term of M_{z,d}^T
        c.z[j - 1] = v;
    }
    return c;
}

SliceCoords extract_b(const OrbitIndex& idx, const GMatrix& S) {
    const int m = idx.m, n = idx.n;
    GMatrix Sd(AlgebraKind::D, m);
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * m; ++j) Sd.M.at(i, j) = S.M.at(i + 1, j + 1);
    SliceCoords c = extract_d({AlgebraKind::D, m, n - 1}, Sd);
    c.kind = AlgebraKind::B;
    c.n = n;
    c.a0 = S.at1(1, 2);
    c.d0 = S.at1(1, b_d0_index(idx) + 1);
    return c;
}

}  // namespace

SliceCoords coords_from_matrix(const OrbitIndex& idx, const GMatrix& S) {
    check_orbit_index(idx);
    if (S.kind != idx.kind || S.m != idx.m) throw KindMismatch("coords_from_matrix: wrong realization");
    SliceCoords c;
    switch (idx.kind) {
        case AlgebraKind::C: c = extract_c(idx, S); break;
        case AlgebraKind::D: c = extract_d(idx, S); break;
        default: c = extract_b(idx, S); break;
    }
    if (!(slice_point(idx, c) == S)) throw NotInSlice("matrix does not lie on the slice");
    return c;
}

GMatrix lambda_act_matrix(const GaussianRational& r, const GMatrix& Y, const GMatrix& H) {
    if (r.is_zero()) throw Error("lambda_act_matrix: r must be nonzero");
    if (Y.kind != H.kind || Y.m != H.m) throw KindMismatch("lambda_act_matrix: kind mismatch");
    const int N = Y.N();
    std::vector<long> h(N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j)
            if (i != j && !H.M.at(i, j).is_zero()) throw NonDiagonalH("lambda_act_matrix: H not diagonal");
        const GaussianRational& v = H.M.at(i, i);
        if (!v.is_real() || v.re.get_den() != 1) throw NonDiagonalH("lambda_act_matrix: H not integral");
        h[i] = v.re.get_num().get_si();
    }
    GMatrix out(Y.kind, Y.m);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const GaussianRational& v = Y.M.at(i, j);
            if (v.is_zero()) continue;
            const long diff = h[j] - h[i];
            if (diff % 2 != 0) throw OddWeight("lambda_act_matrix: odd weight difference");
            out.M.at(i, j) = r.pow(1 + diff / 2) * v;
        }
    return out;
}

namespace {

long exact_log2(const Rat& q) {
    // q must be an exact power of two
    const mpz_class num = q.get_num(), den = q.get_den();
    if (den == 1) {
        const size_t b = mpz_sizeinbase(num.get_mpz_t(), 2);
        if (mpz_scan1(num.get_mpz_t(), 0) != b - 1) throw Error("lambda weight is not a power of two");
        return long(b) - 1;
    }
    if (num != 1) throw Error("lambda weight is not a power of two");
    const size_t b = mpz_sizeinbase(den.get_mpz_t(), 2);
    if (mpz_scan1(den.get_mpz_t(), 0) != b - 1) throw Error("lambda weight is not a power of two");
    return -(long(b) - 1);
}

std::vector<long> compute_weights(const OrbitIndex& idx) {
    const GMatrix H = jm_triple(idx).H;
    const CoordShape shape = coord_shape(idx);
    const int total = shape.total();
    std::vector<long> w(total);
    const GaussianRational two(2);
    for (int k = 0; k < total; ++k) {
        std::vector<GaussianRational> unit(total);
        unit[k] = GaussianRational(1);
        const SliceCoords c = unflatten_coords(idx, unit);
        const GMatrix L = lambda_act_matrix(two, slice_point(idx, c), H);
        const SliceCoords cp = coords_from_matrix(idx, L);
        const auto flat = flatten_coords(cp);
        for (int j = 0; j < total; ++j) {
            if (j == k) continue;
            if (!flat[j].is_zero()) throw Error("lambda action is not diagonal on coordinates");
        }
        if (!flat[k].is_real() || flat[k].re <= 0) throw Error("lambda weight is not a power of two");
        w[k] = exact_log2(flat[k].re);
    }
    if (idx.kind == AlgebraKind::C && 2 * idx.n < idx.m) {
        // the closed-form table is authoritative here; disagreement is fatal
        const int m = idx.m, n = idx.n;
        std::vector<long> expected;
        for (int i = 1; i <= n; ++i) expected.push_back(2 * i);
        for (int i = 1; i <= n; ++i) expected.push_back(m - i + 1);
        // z_i pairs the root e_{i+1} + e_m, whose H-value is 2(m-n-i),
        // giving weight m-n-i+1
        for (int i = 1; i <= n; ++i) expected.push_back(m - n - i + 1);
        for (int j = 1; j <= m - n; ++j) expected.push_back(2 * j);
        if (expected != w) throw Error("type-C lambda weight table mismatch");
    }
    return w;
}

}  // namespace

std::vector<long> lambda_weights(const OrbitIndex& idx) {
    check_orbit_index(idx);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<long>> cache;
    const auto key = std::make_tuple(int(idx.kind), idx.m, idx.n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto w = compute_weights(idx);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, w);
    return w;
}

SliceCoords lambda_act_coords(const OrbitIndex& idx, const GaussianRational& r, const SliceCoords& c) {
    check_shape(idx, c);
    if (r.is_zero()) throw Error("lambda_act_coords: r must be nonzero");
    const auto w = lambda_weights(idx);
    auto flat = flatten_coords(c);
    for (size_t k = 0; k < flat.size(); ++k) flat[k] = r.pow(w[k]) * flat[k];
    return unflatten_coords(idx, flat);
}

}  // namespace nilslice
