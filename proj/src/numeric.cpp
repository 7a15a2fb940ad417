#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "nilslice/errors.hpp"
#include "nilslice/kernel.hpp"

namespace nilslice {

namespace {

bool lex_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::vector<std::complex<double>> roots(const PolyF& p, double tol) {
    PolyF q = p;
    q.trim();
    const int n = q.deg();
    if (n < 1) throw Error("roots: degree must be at least 1");
    const std::complex<double> lead = q.leading();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) comp(k, n - 1) = -q.coeffs[k] / lead;
    for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NonConvergence("roots: eigenvalue iteration failed");

    std::vector<std::complex<double>> zs(n);
    for (int k = 0; k < n; ++k) zs[k] = solver.eigenvalues()(k);

    // evaluation scale sum |c_k| |z|^k: |q(z)| below eps * scale is noise
    auto eval_scale = [&q](const std::complex<double>& z) {
        double s = 0.0, pw = 1.0;
        for (const auto& c : q.coeffs) {
            s += std::abs(c) * pw;
            pw *= std::abs(z);
        }
        return s;
    };
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // Newton polishing sharpens simple roots to full precision.  Near a
    // multiple root both q and q' sit at the rounding noise floor and a
    // Newton step is garbage, so stop at the floor and never accept a step
    // that fails to reduce |q|.
    const PolyF dq = q.derivative();
    for (auto& z : zs) {
        for (int it = 0; it < 8; ++it) {
            const std::complex<double> fv = q.eval(z);
            if (std::abs(fv) <= 4.0 * eps * eval_scale(z)) break;
            const std::complex<double> dv = dq.eval(z);
            if (std::abs(dv) == 0.0) break;
            const std::complex<double> zn = z - fv / dv;
            if (!(std::abs(q.eval(zn)) < std::abs(fv))) break;
            z = zn;
        }
    }

    // backward-error bound on every returned root
    for (const auto& z : zs) {
        if (std::abs(q.eval(z)) / (1.0 + eval_scale(z)) >= 10.0 * tol)
            throw NonConvergence("roots: residual bound violated");
    }

    // single-linkage clustering at radius tol; each cluster is replaced by its
    // centroid, repeated with the cluster's multiplicity
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(zs[i] - zs[j]) < tol) parent[find(i)] = find(j);
    std::vector<std::complex<double>> sum(n);
    std::vector<int> count(n, 0);
    for (int i = 0; i < n; ++i) {
        sum[find(i)] += zs[i];
        ++count[find(i)];
    }
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (count[i] == 0) continue;
        const std::complex<double> c = sum[i] / double(count[i]);
        for (int k = 0; k < count[i]; ++k) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<std::complex<double>> roots(const Poly& p, double tol) { return roots(to_numeric(p), tol); }

}  // namespace nilslice
