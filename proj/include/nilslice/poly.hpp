#ifndef NILSLICE_POLY_HPP
#define NILSLICE_POLY_HPP

#include <utility>
#include <vector>

#include "nilslice/errors.hpp"
#include "nilslice/scalar.hpp"

namespace nilslice {

/// Dense univariate polynomial; coeffs[k] is the coefficient of t^k and
/// the representation never carries trailing zeros (zero poly = empty).
template <class K>
struct PolyT {
    std::vector<K> coeffs;

    PolyT() = default;
    explicit PolyT(std::vector<K> c) : coeffs(std::move(c)) { trim(); }

    static PolyT zero() { return PolyT{}; }
    static PolyT constant(K v) {
        PolyT p;
        p.coeffs.push_back(std::move(v));
        p.trim();
        return p;
    }
    static PolyT monomial(int degree, K v = ScalarTraits<K>::one()) {
        PolyT p;
        p.coeffs.assign(degree + 1, ScalarTraits<K>::zero());
        p.coeffs[degree] = std::move(v);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    int deg() const { return int(coeffs.size()) - 1; }
    K coeff(int k) const {
        if (k < 0 || k >= int(coeffs.size())) return ScalarTraits<K>::zero();
        return coeffs[k];
    }
    K leading() const { return is_zero() ? ScalarTraits<K>::zero() : coeffs.back(); }

    void trim() {
        while (!coeffs.empty() && ScalarTraits<K>::is_zero(coeffs.back())) coeffs.pop_back();
    }

    K eval(const K& x) const {
        K acc = ScalarTraits<K>::zero();
        for (int k = deg(); k >= 0; --k) acc = acc * x + coeffs[k];
        return acc;
    }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        PolyT r;
        r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), ScalarTraits<K>::zero());
        for (size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] = r.coeffs[k] + a.coeffs[k];
        for (size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] = r.coeffs[k] + b.coeffs[k];
        r.trim();
        return r;
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT{};
        PolyT r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ScalarTraits<K>::zero());
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
        r.trim();
        return r;
    }
    friend PolyT operator*(const K& s, const PolyT& p) {
        PolyT r = p;
        for (auto& c : r.coeffs) c = s * c;
        r.trim();
        return r;
    }
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    /// p(-t)
    PolyT reflect() const {
        PolyT r = *this;
        for (int k = 1; k < int(r.coeffs.size()); k += 2) r.coeffs[k] = -r.coeffs[k];
        return r;
    }

    /// p(t^2)
    PolyT inflate() const {
        PolyT r;
        r.coeffs.assign(coeffs.empty() ? 0 : 2 * coeffs.size() - 1, ScalarTraits<K>::zero());
        for (size_t k = 0; k < coeffs.size(); ++k) r.coeffs[2 * k] = coeffs[k];
        r.trim();
        return r;
    }

    /// Multiply by t^k.
    PolyT shift_up(int k) const {
        if (is_zero()) return PolyT{};
        PolyT r;
        r.coeffs.assign(coeffs.size() + k, ScalarTraits<K>::zero());
        for (size_t j = 0; j < coeffs.size(); ++j) r.coeffs[j + k] = coeffs[j];
        return r;
    }

    PolyT derivative() const {
        PolyT r;
        for (int k = 1; k <= deg(); ++k) r.coeffs.push_back(ScalarTraits<K>::from_int(k) * coeffs[k]);
        r.trim();
        return r;
    }
};

/// Euclidean division P = A*Q + R, deg R < deg A; exact over the field K.
template <class K>
std::pair<PolyT<K>, PolyT<K>> divide_exact(const PolyT<K>& P, const PolyT<K>& A) {
    if (A.is_zero()) throw Error("divide_exact: zero divisor");
    PolyT<K> r = P;
    PolyT<K> q;
    const int da = A.deg();
    if (r.deg() >= da) q.coeffs.assign(r.deg() - da + 1, ScalarTraits<K>::zero());
    const K lead_inv = ScalarTraits<K>::one() / A.leading();
    while (!r.is_zero() && r.deg() >= da) {
        const int k = r.deg() - da;
        const K f = r.leading() * lead_inv;
        q.coeffs[k] = f;
        for (int j = 0; j <= da; ++j) r.coeffs[j + k] = r.coeffs[j + k] - f * A.coeffs[j];
        r.coeffs.pop_back();
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// The half-degree polynomial q_hat with q_hat(t^2) = q(t).
/// Every odd coefficient of q must vanish.
template <class K>
PolyT<K> even_part(const PolyT<K>& q) {
    for (int k = 1; k <= q.deg(); k += 2)
        if (!ScalarTraits<K>::is_zero(q.coeffs[k])) throw OddCoefficient(k);
    PolyT<K> r;
    for (int k = 0; k <= q.deg(); k += 2) r.coeffs.push_back(q.coeffs[k]);
    r.trim();
    return r;
}

using Poly = PolyT<GaussianRational>;
using PolyF = PolyT<std::complex<double>>;

inline PolyF to_numeric(const Poly& p) {
    PolyF r;
    r.coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) r.coeffs.push_back(c.to_complex());
    return r;
}

}  // namespace nilslice

#endif
