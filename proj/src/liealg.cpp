#include "nilslice/liealg.hpp"

#include <utility>

namespace nilslice {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::C: return "C";
        case AlgebraKind::D: return "D";
        default: return "B";
    }
}

AlgebraKind kind_from_name(const std::string& s) {
    if (s == "C") return AlgebraKind::C;
    if (s == "D") return AlgebraKind::D;
    if (s == "B") return AlgebraKind::B;
    throw ConfigError("unknown algebra kind: " + s);
}

int matrix_size(AlgebraKind k, int m) { return k == AlgebraKind::B ? 2 * m + 1 : 2 * m; }

int algebra_dim(AlgebraKind k, int m) { return k == AlgebraKind::D ? 2 * m * m - m : 2 * m * m + m; }

QMat bilinear_form(AlgebraKind k, int m) {
    const int N = matrix_size(k, m);
    QMat phi(N, N);
    const int off = k == AlgebraKind::B ? 1 : 0;
    if (k == AlgebraKind::B) phi.at(0, 0) = GaussianRational(1);
    for (int i = 0; i < m; ++i) {
        phi.at(off + i, off + m + i) = GaussianRational(1);
        phi.at(off + m + i, off + i) = GaussianRational(k == AlgebraKind::C ? -1 : 1);
    }
    return phi;
}

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
    if (a.kind != b.kind || a.m != b.m) throw KindMismatch("GMatrix addition: kind/rank mismatch");
    return {a.kind, a.m, a.M + b.M};
}

GMatrix operator-(const GMatrix& a, const GMatrix& b) {
    if (a.kind != b.kind || a.m != b.m) throw KindMismatch("GMatrix subtraction: kind/rank mismatch");
    return {a.kind, a.m, a.M - b.M};
}

GMatrix operator*(const GaussianRational& s, const GMatrix& a) { return {a.kind, a.m, s * a.M}; }

bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.kind == b.kind && a.m == b.m && a.M == b.M;
}

namespace {

void check_index(int i, int m) {
    if (i < 1 || i > m) throw InvalidRoot("root index out of range");
}

// adds c * E_{i,j} (1-indexed)
void add_e(GMatrix& X, int i, int j, long c) { X.at1(i, j) += GaussianRational(c); }

}  // namespace

GMatrix root_vector(AlgebraKind k, int m, const RootLabel& root) {
    GMatrix X(k, m);
    const int off = k == AlgebraKind::B ? 1 : 0;
    const int i = root.i, j = root.j;
    if (root.si == 2 || root.si == -2) {
        // +-2e_i, type C only
        if (k != AlgebraKind::C || root.j != 0 || root.sj != 0) throw InvalidRoot("long root invalid here");
        check_index(i, m);
        if (root.si > 0)
            add_e(X, i, i + m, 1);
        else
            add_e(X, i + m, i, 1);
        return X;
    }
    if (root.j == 0) {
        // +-e_i, type B only
        if (k != AlgebraKind::B || (root.si != 1 && root.si != -1)) throw InvalidRoot("short root invalid here");
        check_index(i, m);
        if (root.si > 0) {
            add_e(X, 1, i + m + 1, 1);
            add_e(X, i + 1, 1, -1);
        } else {
            add_e(X, 1, i + 1, 1);
            add_e(X, i + m + 1, 1, -1);
        }
        return X;
    }
    check_index(i, m);
    check_index(j, m);
    if (i == j) throw InvalidRoot("root indices must differ");
    if (root.si == 1 && root.sj == -1) {
        // e_i - e_j
        if (k == AlgebraKind::C) {
            add_e(X, i, j, 1);
            add_e(X, j + m, i + m, -1);
        } else {
            add_e(X, off + i, off + j, 1);
            add_e(X, off + m + j, off + m + i, -1);
        }
        return X;
    }
    if (root.si == 1 && root.sj == 1) {
        if (k == AlgebraKind::C) {
            add_e(X, i, j + m, 1);
            add_e(X, j, i + m, 1);
        } else {
            // orthogonal formula requires i < j; the root space is the same
            int a = std::min(i, j), b = std::max(i, j);
            add_e(X, off + a, off + m + b, 1);
            add_e(X, off + b, off + m + a, -1);
        }
        return X;
    }
    if (root.si == -1 && root.sj == -1) {
        if (k == AlgebraKind::C) {
            add_e(X, i + m, j, 1);
            add_e(X, j + m, i, 1);
        } else {
            int a = std::min(i, j), b = std::max(i, j);
            add_e(X, off + m + a, off + b, 1);
            add_e(X, off + m + b, off + a, -1);
        }
        return X;
    }
    if (root.si == -1 && root.sj == 1) return root_vector(k, m, RootLabel::e_minus_e(j, i));
    throw InvalidRoot("unrecognized root label");
}

GMatrix cartan(AlgebraKind k, int m, int i) {
    check_index(i, m);
    GMatrix X(k, m);
    const int off = k == AlgebraKind::B ? 1 : 0;
    add_e(X, off + i, off + i, 1);
    add_e(X, off + m + i, off + m + i, -1);
    return X;
}

GMatrix bracket(const GMatrix& X, const GMatrix& Y) {
    if (X.kind != Y.kind || X.m != Y.m) throw KindMismatch("bracket: kind/rank mismatch");
    return {X.kind, X.m, X.M * Y.M - Y.M * X.M};
}

bool is_member(const GMatrix& M) {
    const QMat phi = bilinear_form(M.kind, M.m);
    return (M.M.transpose() * phi + phi * M.M).is_zero();
}

namespace {

struct BasisEntry {
    RootLabel root;   // valid when cartan_index == 0
    int cartan_index; // 1-indexed when a Cartan element, else 0
    int ci, cj;       // canonical 1-indexed entry with coefficient +1
};

std::vector<BasisEntry> basis_plan(AlgebraKind k, int m) {
    const int off = k == AlgebraKind::B ? 1 : 0;
    std::vector<BasisEntry> plan;
    plan.reserve(size_t(algebra_dim(k, m)));
    auto add_positive = [&](bool negative) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                if (!negative)
                    plan.push_back({RootLabel::e_minus_e(i, j), 0, off + i, off + j});
                else
                    plan.push_back({RootLabel::e_minus_e(j, i), 0, off + j, off + i});
            }
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                if (k == AlgebraKind::C)
                    plan.push_back({RootLabel::e_plus_e(i, j, negative), 0,
                                    negative ? i + m : i, negative ? j : j + m});
                else
                    plan.push_back({RootLabel::e_plus_e(i, j, negative), 0,
                                    negative ? off + m + i : off + i,
                                    negative ? off + j : off + m + j});
            }
        if (k == AlgebraKind::C)
            for (int i = 1; i <= m; ++i)
                plan.push_back({RootLabel::two_e(i, negative), 0, negative ? i + m : i,
                                negative ? i : i + m});
        if (k == AlgebraKind::B)
            for (int i = 1; i <= m; ++i)
                plan.push_back({RootLabel::e(i, negative), 0, 1, negative ? i + 1 : i + m + 1});
    };
    add_positive(false);
    add_positive(true);
    for (int i = 1; i <= m; ++i) plan.push_back({RootLabel{}, i, off + i, off + i});
    return plan;
}

}  // namespace

std::vector<GMatrix> algebra_basis(AlgebraKind k, int m) {
    std::vector<GMatrix> basis;
    for (const BasisEntry& e : basis_plan(k, m))
        basis.push_back(e.cartan_index ? cartan(k, m, e.cartan_index) : root_vector(k, m, e.root));
    return basis;
}

std::vector<GaussianRational> expand_in_basis(const GMatrix& X) {
    const auto plan = basis_plan(X.kind, X.m);
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(plan.size());
    GMatrix recon(X.kind, X.m);
    for (const BasisEntry& e : plan) {
        const GaussianRational c = X.at1(e.ci, e.cj);
        coeffs.push_back(c);
        if (c.is_zero()) continue;
        GMatrix b = e.cartan_index ? cartan(X.kind, X.m, e.cartan_index)
                                   : root_vector(X.kind, X.m, e.root);
        recon = recon + c * b;
    }
    if (!(recon == X)) throw NotMember("expand_in_basis: matrix is not in the algebra's span");
    return coeffs;
}

QMat ad_matrix(const GMatrix& X) {
    if (!is_member(X)) throw NotMember("ad_matrix: argument is not a member");
    const auto basis = algebra_basis(X.kind, X.m);
    const int dim = int(basis.size());
    QMat ad(dim, dim);
    for (int c = 0; c < dim; ++c) {
        const auto col = expand_in_basis(bracket(X, basis[c]));
        for (int r = 0; r < dim; ++r) ad.at(r, c) = col[r];
    }
    return ad;
}

Poly charpoly_exact(const GMatrix& M) { return Poly(charpoly_faddeev(M.M)); }

}  // namespace nilslice
