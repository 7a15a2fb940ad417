#ifndef NILSLICE_KERNEL_HPP
#define NILSLICE_KERNEL_HPP

#include <complex>
#include <utility>
#include <vector>

#include "nilslice/poly.hpp"

namespace nilslice {

/// Split a polynomial B into the even-power pair (U, V) with
///   U(t) = (i^{m-1}/2) (B(t) + B(-t)),   V(t) = (i^m/(2t)) (B(t) - B(-t)),
/// so that U(t)^2 + t^2 V(t)^2 = (-1)^{m-1} B(t) B(-t).
/// The division by t is exact by parity.
template <class K>
std::pair<PolyT<K>, PolyT<K>> uv_from_b(const PolyT<K>& B, int m) {
    const K half = ScalarTraits<K>::one() / ScalarTraits<K>::from_int(2);
    const K iu = ScalarTraits<K>::imag_unit();
    K im1 = ScalarTraits<K>::one();  // i^{m-1}
    for (int k = 0; k < ((m - 1) % 4 + 4) % 4; ++k) im1 = im1 * iu;
    const K im = im1 * iu;  // i^m

    const PolyT<K> Br = B.reflect();
    PolyT<K> U = (im1 * half) * (B + Br);
    PolyT<K> diff = B - Br;  // only odd powers survive
    PolyT<K> V;
    for (int k = 1; k <= diff.deg(); k += 2) {
        while (int(V.coeffs.size()) < k) V.coeffs.push_back(ScalarTraits<K>::zero());
        V.coeffs[k - 1] = im * half * diff.coeffs[k];
    }
    V.trim();
    return {U, V};
}

/// Peel the constant off U_hat:  U_hat(t) = t W_hat(t) - y.
template <class K>
std::pair<PolyT<K>, K> w_from_u(const PolyT<K>& Uhat) {
    K y = -Uhat.coeff(0);
    PolyT<K> W;
    for (int k = 1; k <= Uhat.deg(); ++k) W.coeffs.push_back(Uhat.coeffs[k]);
    W.trim();
    return {W, y};
}

/// All deg(p) roots of p, with multiplicities clustered by single-linkage
/// at radius tol and the result ordered (re, im) lexicographically.
/// Companion-matrix eigenvalues with guarded Newton polishing; throws
/// NonConvergence if the backward-error bound
/// |p(z)| / (1 + sum_k |c_k| |z|^k) < 10*tol fails at some root.
std::vector<std::complex<double>> roots(const PolyF& p, double tol = 1e-10);
std::vector<std::complex<double>> roots(const Poly& p, double tol = 1e-10);

}  // namespace nilslice

#endif
