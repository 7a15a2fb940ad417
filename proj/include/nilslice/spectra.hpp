#ifndef NILSLICE_SPECTRA_HPP
#define NILSLICE_SPECTRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "nilslice/kernel.hpp"
#include "nilslice/slices.hpp"

namespace nilslice {

/// A point of h/W after the squared-eigenvalue identification: the
/// unordered m-multiset mu (sorted (re, im) lexicographically) plus, for
/// type D only, the sign invariant p.
struct SpectralClass {
    AlgebraKind kind;
    int m = 0;
    std::vector<std::complex<double>> mu;
    bool has_psign = false;
    std::complex<double> psign{};
};

/// The slice's closed-form characteristic-polynomial data.  For type B,
/// the base polynomials A, D, B are the type-D forms at n-1 and the
/// combinations entering t * chi = a * dt2 + (-1)^{m+1} bt(t) bt(-t) are
/// also returned.  For n >= 2 (d_0 on X_{-e_{m-n+2}}):
///   a   = t^2 A + (-1)^n (1/2) d0^2     (even, monic, degree 2n)
///   dt2 = t^2 D + 2 (-1)^{m-n} a0^2    (even, degree 2(m-n))
///   bt  = t B - a0 d0
/// For n = 1 (d_0 on X_{-e_m}):
///   a   = t^2 A - (1/2) d0^2
///   dt2 = t^2 D + 2 (-1)^{m-1} a0^2 + 2 t^{2(m-1)} d0^2
///           + [m odd] 4 t^{m-1} a0 d0
///   bt  = t B - a0 d0 - (-1)^m t^{m-1} d0^2
template <class K>
struct ClosedFormPolysT {
    PolyT<K> A, D, B;
    PolyT<K> a, dt2, bt;  // type B only
};
using ClosedFormPolys = ClosedFormPolysT<GaussianRational>;

template <class K>
ClosedFormPolysT<K> closed_form_polys_flat(const OrbitIndex& idx, const std::vector<K>& flat);

ClosedFormPolys closed_form_polys(const OrbitIndex& idx, const SliceCoords& c);

/// The closed-form characteristic polynomial of the slice point with flat
/// coordinates (for type B this is t * chi, the cleared form).
template <class K>
PolyT<K> closed_chi_flat(const OrbitIndex& idx, const std::vector<K>& flat);

/// The m non-leading coefficients of the reduced (hat) characteristic
/// polynomial as functions of the flat coordinates: entry j is the s^j
/// coefficient, j = 0..m-1 (the s^m coefficient is 1).
template <class K>
std::vector<K> reduced_charpoly_coeffs_flat(const OrbitIndex& idx, const std::vector<K>& flat);

/// charpoly_exact(slice_point(idx, c)) minus the closed-form right side
/// of the kind-appropriate identity; identically zero on the slice.
Poly charpoly_identity_check(const OrbitIndex& idx, const SliceCoords& c);

/// The type-D invariant p as an exact scalar: the Pfaffian of Phi*S
/// calibrated per m so that diagonal h-members give p = prod x_i.
GaussianRational p_invariant_exact(const GMatrix& S);

/// chi -> reduced degree-m polynomial (dividing by t first for type B)
/// -> numeric roots.  Throws ParityViolation when the parity structure of
/// the characteristic polynomial fails.
SpectralClass spectral_class_of(const GMatrix& S, double root_tol = 1e-8);

/// The monic polynomial with roots mu.
PolyF p_mu(const SpectralClass& tau);

/// Q_tau = (P_mu - P_mu(0)) / t, using P_mu(0) = (-1)^m psign^2; throws
/// InconsistentSign if the constant term disagrees with the sign data.
PolyF q_tau(const SpectralClass& tau, double tol = 1e-9);

/// The calibrated unit kappa with y = kappa * p on the type-D slice,
/// where -y is the constant term of U-hat; frozen per (m, n).
GaussianRational kappa_d(const OrbitIndex& idx);

/// Left side minus right side of the kind-appropriate fiber equation:
///   C: P_tau(t) + Uhat^2 + t Vhat^2 - Ahat Dhat
///   D: Q_tau(t) + Vhat^2 + t What^2 - 2 y What - Ahat Dhat, y = kappa p(tau)
///   B: t P_tau(t) + Uhat^2 + t Vhat^2 - ahat (t dhat)
/// evaluated with numeric tau; zero (to tolerance) iff c lies on the fiber.
PolyF fiber_residual(const OrbitIndex& idx, const SliceCoords& c, const SpectralClass& tau);

/// Trivariate surface residual data.  Types C and B use
/// P(z) + u^2 + z v^2; type D uses P(z) + v^2 + z w^2 - ylin * w with
/// P = Q_tau and ylin = 2 kappa p(tau) (the calibrated coefficient of the
/// linear w term).
struct SurfaceSpec {
    AlgebraKind kind;
    PolyF P;
    std::complex<double> ylin{};
};

SurfaceSpec surface(AlgebraKind kind, const SpectralClass& tau, const OrbitIndex& idx_for_kappa);
std::complex<double> surface_residual(const SurfaceSpec& s, std::complex<double> c1,
                                      std::complex<double> c2, std::complex<double> z);

/// Regularity of the spectral parameter: pairwise-distinct mu, and for
/// types C/B also nonzero mu.
bool is_regular(const SpectralClass& tau, double tol = 1e-9);

/// Kleinian degeneration at (n = 1, tau = 0).
struct KleinianReport {
    AlgebraKind kind;
    int m = 0;
    std::string type;  // "D{m+1}", "D{m}", or "A{2m-1}"
    bool pass = false;
    std::string detail;
};
KleinianReport kleinian_check(AlgebraKind kind, int m);

}  // namespace nilslice

#endif
