#ifndef NILSLICE_HILBERT_HPP
#define NILSLICE_HILBERT_HPP

#include <array>
#include <complex>
#include <vector>

#include "nilslice/spectra.hpp"

namespace nilslice {

/// The 4-tuple of polynomials representing a point of the Hilbert scheme
/// over a slice fiber.  A-hat is monic of degree n; U-hat and V-hat are
/// reduced modulo A-hat (for type D, U-hat modulo t * A-hat, preserving
/// its constant term -y), so deg U-hat <= n-1 (<= n for D) and
/// deg V-hat <= n-1; D-hat is recovered by exact division from the
/// kind-appropriate fiber identity:
///   C: P-hat + U-hat^2 + t V-hat^2 = A-hat D-hat
///   D: P-hat + U-hat^2 + t V-hat^2 = t A-hat D-hat
///   B: t P-hat + U-hat^2 + t V-hat^2 = A-hat D-hat
/// with P-hat the reduced characteristic polynomial of the slice point.
template <class K>
struct IdealPointT {
    AlgebraKind kind;
    int m = 0, n = 0;
    PolyT<K> Ahat, Dhat, Uhat, Vhat;
};
using IdealPoint = IdealPointT<GaussianRational>;
using IdealPointF = IdealPointT<std::complex<double>>;

/// Exact construction from slice coordinates; throws ReductionFailure if
/// the division leaves a remainder (it cannot, when the closed forms are
/// consistent).
IdealPoint ideal_point_from_coords(const OrbitIndex& idx, const SliceCoords& c);

/// Numeric construction from complex flat coordinates (used for
/// perturb-and-project fiber sampling); remainder checked to 1e-6.
IdealPointF ideal_point_numeric(const OrbitIndex& idx,
                                const std::vector<std::complex<double>>& flat);

/// The Hilbert-Chow support: n surface points (c1, c2, z) with z a root
/// of A-hat and, per kind,
///   C/B: (c1, c2) = (U-hat(z), V-hat(z))
///   D:   (c1, c2) = (V-hat(z), W-hat(z)),  U-hat = t W-hat - y.
struct SupportPoints {
    AlgebraKind kind;
    std::vector<std::array<std::complex<double>, 3>> pts;
};

SupportPoints support_points(const IdealPoint& ip, double tol = 1e-10);
SupportPoints support_points(const IdealPointF& ip, double tol = 1e-10);

/// Minimal over matchings of the max componentwise distance between the
/// two point multisets; infinity if sizes differ.
double support_distance(const SupportPoints& a, const SupportPoints& b);

/// Reconstruction from support data: A-hat from the roots, U-hat/V-hat by
/// Lagrange interpolation (type D: W-hat interpolated, then
/// U-hat = t W-hat - y with y = kappa * p(tau)), D-hat by polynomial
/// division against P-hat built from tau.  Throws RepeatedSupport when
/// two z-values are closer than sep_tol (interpolation ill-posed).
IdealPointF round_trip(const SupportPoints& sp, const SpectralClass& tau, const OrbitIndex& idx,
                       double sep_tol = 1e-6);

/// Max relative coefficient deviation between two ideal points.
double ideal_point_distance(const IdealPoint& a, const IdealPointF& b);

/// The type-B deck transformation (a0, d0) -> (-a0, -d0); WrongKind
/// otherwise.
SliceCoords b_fiber_partner(const SliceCoords& c);

}  // namespace nilslice

#endif
