#include "nilslice/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace nilslice {

namespace {

// Read only the even-position coefficients (the odd ones are identically
// zero for the inputs used here; for numeric scalars they may carry
// rounding residue, which this drops).
template <class K>
PolyT<K> even_read(const PolyT<K>& p) {
    PolyT<K> r;
    for (int k = 0; k <= p.deg(); k += 2) r.coeffs.push_back(p.coeffs[k]);
    r.trim();
    return r;
}

double coeff_scale(const PolyF& p) {
    double s = 1.0;
    for (const auto& c : p.coeffs) s = std::max(s, std::abs(c));
    return s;
}

void check_remainder(const Poly& rem, const Poly&) {
    if (!rem.is_zero()) throw ReductionFailure("ideal point: fiber identity division left a remainder");
}

void check_remainder(const PolyF& rem, const PolyF& lhs) {
    double worst = 0.0;
    for (const auto& c : rem.coeffs) worst = std::max(worst, std::abs(c));
    if (worst > 1e-6 * coeff_scale(lhs))
        throw ReductionFailure("ideal point: numeric fiber identity division left a remainder");
}

template <class K>
IdealPointT<K> ideal_point_impl(const OrbitIndex& idx, const std::vector<K>& flat) {
    check_orbit_index(idx);
    const auto polys = closed_form_polys_flat(idx, flat);
    const int m = idx.m;
    IdealPointT<K> ip;
    ip.kind = idx.kind;
    ip.m = m;
    ip.n = idx.n;

    const bool is_d = idx.kind == AlgebraKind::D;
    const PolyT<K>& Araw = idx.kind == AlgebraKind::B ? polys.a : polys.A;
    const PolyT<K>& Braw = idx.kind == AlgebraKind::B ? polys.bt : polys.B;
    const int power = is_d ? m : m + 1;

    ip.Ahat = even_read(Araw);
    const auto uv = uv_from_b(Braw, power);
    PolyT<K> Uh = even_read(uv.first), Vh = even_read(uv.second);
    // reduce: V-hat mod A-hat; U-hat mod A-hat, except type D uses
    // t * A-hat so the constant term -y survives and the lhs stays
    // divisible by t
    const PolyT<K> umod = is_d ? ip.Ahat.shift_up(1) : ip.Ahat;
    Uh = divide_exact(Uh, umod).second;
    Vh = divide_exact(Vh, ip.Ahat).second;
    ip.Uhat = Uh;
    ip.Vhat = Vh;

    // reduced characteristic polynomial (for B, closed_chi_flat is t*chi,
    // whose even read is t * P-hat already)
    const PolyT<K> Phat = even_read(closed_chi_flat(idx, flat));
    const PolyT<K> lhs = Phat + Uh * Uh + (Vh * Vh).shift_up(1);
    const PolyT<K> divisor = is_d ? ip.Ahat.shift_up(1) : ip.Ahat;
    auto qr = divide_exact(lhs, divisor);
    check_remainder(qr.second, lhs);
    ip.Dhat = qr.first;
    return ip;
}

template <class K>
SupportPoints support_points_impl(const IdealPointT<K>& ip, double tol) {
    SupportPoints sp;
    sp.kind = ip.kind;
    if (ip.Ahat.deg() < 1) return sp;
    std::vector<std::complex<double>> zs;
    if constexpr (std::is_same_v<K, GaussianRational>)
        zs = roots(ip.Ahat, tol);
    else
        zs = roots(ip.Ahat, tol);
    PolyF c1p, c2p;
    if (ip.kind == AlgebraKind::D) {
        const auto wy = w_from_u(ip.Uhat);
        if constexpr (std::is_same_v<K, GaussianRational>) {
            c1p = to_numeric(ip.Vhat);
            c2p = to_numeric(wy.first);
        } else {
            c1p = ip.Vhat;
            c2p = wy.first;
        }
    } else {
        if constexpr (std::is_same_v<K, GaussianRational>) {
            c1p = to_numeric(ip.Uhat);
            c2p = to_numeric(ip.Vhat);
        } else {
            c1p = ip.Uhat;
            c2p = ip.Vhat;
        }
    }
    for (const auto& z : zs) sp.pts.push_back({c1p.eval(z), c2p.eval(z), z});
    return sp;
}

PolyF lagrange_interp(const std::vector<std::complex<double>>& xs,
                      const std::vector<std::complex<double>>& ys) {
    PolyF acc;
    for (size_t k = 0; k < xs.size(); ++k) {
        PolyF lk = PolyF::constant({1.0, 0.0});
        std::complex<double> denom{1.0, 0.0};
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            PolyF lin;
            lin.coeffs = {-xs[j], {1.0, 0.0}};
            lk = lk * lin;
            denom *= xs[k] - xs[j];
        }
        acc = acc + (ys[k] / denom) * lk;
    }
    return acc;
}

}  // namespace

IdealPoint ideal_point_from_coords(const OrbitIndex& idx, const SliceCoords& c) {
    check_shape(idx, c);
    return ideal_point_impl(idx, flatten_coords(c));
}

IdealPointF ideal_point_numeric(const OrbitIndex& idx,
                                const std::vector<std::complex<double>>& flat) {
    return ideal_point_impl(idx, flat);
}

SupportPoints support_points(const IdealPoint& ip, double tol) { return support_points_impl(ip, tol); }
SupportPoints support_points(const IdealPointF& ip, double tol) { return support_points_impl(ip, tol); }

double support_distance(const SupportPoints& a, const SupportPoints& b) {
    if (a.pts.size() != b.pts.size()) return std::numeric_limits<double>::infinity();
    const size_t n = a.pts.size();
    if (n == 0) return 0.0;
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (size_t k = 0; k < n; ++k)
            for (int c = 0; c < 3; ++c)
                worst = std::max(worst, std::abs(a.pts[k][c] - b.pts[perm[k]][c]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

IdealPointF round_trip(const SupportPoints& sp, const SpectralClass& tau, const OrbitIndex& idx,
                       double sep_tol) {
    check_orbit_index(idx);
    const size_t n = sp.pts.size();
    std::vector<std::complex<double>> zs(n), c1(n), c2(n);
    for (size_t k = 0; k < n; ++k) {
        c1[k] = sp.pts[k][0];
        c2[k] = sp.pts[k][1];
        zs[k] = sp.pts[k][2];
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(zs[i] - zs[j]) < sep_tol)
                throw RepeatedSupport("round_trip: repeated support point");

    IdealPointF ip;
    ip.kind = idx.kind;
    ip.m = idx.m;
    ip.n = idx.n;
    ip.Ahat = PolyF::constant({1.0, 0.0});
    for (const auto& z : zs) {
        PolyF lin;
        lin.coeffs = {-z, {1.0, 0.0}};
        ip.Ahat = ip.Ahat * lin;
    }
    const PolyF P = p_mu(tau);
    PolyF lhs, divisor;
    if (idx.kind == AlgebraKind::D) {
        ip.Vhat = lagrange_interp(zs, c1);
        const PolyF What = lagrange_interp(zs, c2);
        const std::complex<double> y = kappa_d(idx).to_complex() * tau.psign;
        ip.Uhat = What.shift_up(1) - PolyF::constant(y);
        lhs = P + ip.Uhat * ip.Uhat + (ip.Vhat * ip.Vhat).shift_up(1);
        divisor = ip.Ahat.shift_up(1);
    } else {
        ip.Uhat = lagrange_interp(zs, c1);
        ip.Vhat = lagrange_interp(zs, c2);
        const PolyF Pk = idx.kind == AlgebraKind::B ? P.shift_up(1) : P;
        lhs = Pk + ip.Uhat * ip.Uhat + (ip.Vhat * ip.Vhat).shift_up(1);
        divisor = ip.Ahat;
    }
    auto qr = divide_exact(lhs, divisor);
    ip.Dhat = qr.first;
    return ip;
}

double ideal_point_distance(const IdealPoint& a, const IdealPointF& b) {
    auto dist = [](const Poly& p, const PolyF& q) {
        const PolyF pf = to_numeric(p);
        double scale = coeff_scale(pf);
        double worst = 0.0;
        const int d = std::max(pf.deg(), q.deg());
        for (int k = 0; k <= d; ++k) worst = std::max(worst, std::abs(pf.coeff(k) - q.coeff(k)));
        return worst / scale;
    };
    double worst = dist(a.Ahat, b.Ahat);
    worst = std::max(worst, dist(a.Dhat, b.Dhat));
    worst = std::max(worst, dist(a.Uhat, b.Uhat));
    worst = std::max(worst, dist(a.Vhat, b.Vhat));
    return worst;
}

SliceCoords b_fiber_partner(const SliceCoords& c) {
    if (c.kind != AlgebraKind::B) throw WrongKind("b_fiber_partner: type B only");
    SliceCoords out = c;
    out.a0 = -c.a0;
    out.d0 = -c.d0;
    return out;
}

}  // namespace nilslice
