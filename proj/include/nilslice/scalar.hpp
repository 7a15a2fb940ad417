#ifndef NILSLICE_SCALAR_HPP
#define NILSLICE_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nilslice {

using Rat = mpq_class;

/// Exact scalar field Q(i): complex numbers with rational real and
/// imaginary parts.  mpq_class keeps every component canonical
/// (positive denominator, lowest terms) after each operation.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(const Rat& r) : re(r), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }
    static GaussianRational from_frac(long num, long den) {
        Rat r(num, den);
        r.canonicalize();
        return GaussianRational(r);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |x|^2 as a rational.
    Rat norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rat n = norm();
        return {re / n, -im / n};
    }

    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// x^k for any integer k (negative exponents invert first).
    GaussianRational pow(long k) const {
        GaussianRational base = *this;
        if (k < 0) {
            base = base.inverse();
            k = -k;
        }
        GaussianRational acc(1);
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    /// Textual form "a/b+c/d*i", omitting zero parts ("0" for zero).
    std::string str() const;
    static GaussianRational parse(const std::string& s);
};

inline GaussianRational pow_i(long k) {
    // i^k
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

// ---- scalar traits shared by the exact and numeric polynomial layers ----

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational imag_unit() { return GaussianRational::i(); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> imag_unit() { return {0.0, 1.0}; }
    static std::complex<double> from_int(long v) { return {double(v), 0.0}; }
    static bool is_zero(const std::complex<double>& v) { return v.real() == 0.0 && v.imag() == 0.0; }
};

}  // namespace nilslice

#endif
