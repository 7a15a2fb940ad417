#include "nilslice/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <json.hpp>

#include "nilslice/hilbert.hpp"
#include "nilslice/sampling.hpp"
#include "nilslice/spectra.hpp"
#include "nilslice/transversality.hpp"

namespace nilslice {

std::string command_name(Command c) {
    switch (c) {
        case Command::Charpoly: return "verify-charpoly";
        case Command::JM: return "verify-jm";
        case Command::Lambda: return "verify-lambda";
        case Command::Transversality: return "verify-transversality";
        case Command::Kleinian: return "verify-kleinian";
        case Command::Embedding: return "verify-embedding";
        case Command::Smoothness: return "verify-smoothness";
        default: return "report-all";
    }
}

std::vector<OrbitIndex> enumerate_cells(const CampaignConfig& cfg, int m_min) {
    std::vector<OrbitIndex> cells;
    for (AlgebraKind kind : {AlgebraKind::C, AlgebraKind::D, AlgebraKind::B}) {
        if (cfg.kind && *cfg.kind != kind) continue;
        const int lo = cfg.m ? *cfg.m : m_min;
        const int hi = cfg.m ? *cfg.m : cfg.m_max;
        for (int m = lo; m <= hi; ++m)
            for (int n = 0; n <= m; ++n) {
                if (cfg.n && *cfg.n != n) continue;
                const OrbitIndex idx{kind, m, n};
                if (orbit_index_valid(idx)) cells.push_back(idx);
            }
    }
    return cells;
}

namespace {

using Clk = std::chrono::steady_clock;

CellResult make_cell(const std::string& check, const OrbitIndex& idx) {
    CellResult r;
    r.check = check;
    r.kind = idx.kind;
    r.m = idx.m;
    r.n = idx.n;
    r.pass = true;
    return r;
}

GaussianRational sample_nonzero_rational(Rng& rng) {
    for (;;) {
        const GaussianRational v = sample_rational(rng);
        if (!v.is_zero()) return v;
    }
}

// --- individual checks -------------------------------------------------

CellResult check_charpoly(const OrbitIndex& idx, const CampaignConfig& cfg) {
    CellResult r = make_cell("charpoly", idx);
    Rng rng(cell_seed(cfg.seed, idx.kind, idx.m, idx.n, "charpoly"));
    for (int s = 0; s < cfg.samples; ++s) {
        const SliceCoords c = sample_coords(idx, rng);
        const Poly resid = charpoly_identity_check(idx, c);
        ++r.samples_run;
        if (!resid.is_zero()) {
            r.pass = false;
            r.detail = "nonzero residual at sample " + std::to_string(s);
            return r;
        }
    }
    return r;
}

CellResult check_jm(const OrbitIndex& idx, const CampaignConfig&) {
    CellResult r = make_cell("jm", idx);
    const JMTriple t = jm_triple(idx);
    const GaussianRational two(2);
    const bool ok = bracket(t.H, t.Nplus) == two * t.Nplus &&
                    bracket(t.H, t.Nminus) == GaussianRational(-2) * t.Nminus &&
                    bracket(t.Nplus, t.Nminus) == t.H && t.Nplus == nilpotent_rep(idx);
    r.pass = ok;
    if (!ok) r.detail = "bracket relations failed";
    return r;
}

CellResult check_transversality(const OrbitIndex& idx, const CampaignConfig&) {
    CellResult r = make_cell("transversality", idx);
    const TransversalityCertificate cert = transversality_certificate(idx);
    r.pass = cert.verdict && cert.dim_V == idx.m + 2 * idx.n;
    std::ostringstream os;
    os << "rank_ad=" << cert.rank_ad << " dim_V=" << cert.dim_V << " rank_joint=" << cert.rank_joint
       << " dim_g=" << cert.dim_g;
    r.detail = os.str();
    return r;
}

// greedy nearest matching of mu multisets, returns max relative distance
double mu_match_distance(const std::vector<std::complex<double>>& got,
                         std::vector<std::complex<double>> want) {
    double worst = 0.0;
    double scale = 1.0;
    for (const auto& w : want) scale = std::max(scale, std::abs(w));
    for (const auto& g : got) {
        size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < want.size(); ++k) {
            const double d = std::abs(g - want[k]);
            if (d < bd) {
                bd = d;
                best = k;
            }
        }
        worst = std::max(worst, bd / scale);
        want.erase(want.begin() + long(best));
    }
    return worst;
}

CellResult check_lambda(const OrbitIndex& idx, const CampaignConfig& cfg) {
    CellResult r = make_cell("lambda", idx);
    Rng rng(cell_seed(cfg.seed, idx.kind, idx.m, idx.n, "lambda"));
    try {
        lambda_weights(idx);  // throws on a type-C table mismatch
    } catch (const Error& e) {
        r.pass = false;
        r.detail = e.what();
        return r;
    }
    const GMatrix H = jm_triple(idx).H;
    for (int s = 0; s < cfg.samples; ++s) {
        const GaussianRational rr = sample_nonzero_rational(rng);
        const SliceCoords c = sample_coords(idx, rng);
        const GMatrix S = slice_point(idx, c);
        const GMatrix left = lambda_act_matrix(rr, S, H);
        const GMatrix right = slice_point(idx, lambda_act_coords(idx, rr, c));
        ++r.samples_run;
        if (!(left == right)) {
            r.pass = false;
            r.detail = "matrix/coordinate action mismatch at sample " + std::to_string(s);
            return r;
        }
        // epsilon-equivariance: squared eigenvalues scale by r^2
        const SpectralClass t0 = spectral_class_of(S);
        const SpectralClass t1 = spectral_class_of(left);
        const std::complex<double> r2 = rr.to_complex() * rr.to_complex();
        std::vector<std::complex<double>> want;
        for (const auto& z : t0.mu) want.push_back(r2 * z);
        const double d = mu_match_distance(t1.mu, want);
        r.max_residual = std::max(r.max_residual, d);
        if (d > cfg.tol) {
            r.pass = false;
            r.detail = "mu equivariance residual " + std::to_string(d);
            return r;
        }
    }
    return r;
}

CellResult check_kleinian(AlgebraKind kind, int m) {
    CellResult r = make_cell("kleinian", OrbitIndex{kind, m, 1});
    const KleinianReport rep = kleinian_check(kind, m);
    r.pass = rep.pass;
    r.detail = rep.type + ": " + rep.detail;
    return r;
}

double surface_scale(const SurfaceSpec& spec, const std::complex<double>& c1,
                     const std::complex<double>& c2, const std::complex<double>& z) {
    double s = 1.0 + std::abs(spec.P.eval(z)) + std::abs(c1 * c1) + std::abs(z * c2 * c2);
    if (spec.kind == AlgebraKind::D) s += std::abs(spec.ylin * c2);
    if (spec.kind == AlgebraKind::B) s += std::abs(z * spec.P.eval(z));
    return s;
}

CellResult check_embedding_cd(const OrbitIndex& idx, const CampaignConfig& cfg) {
    CellResult r = make_cell("embedding", idx);
    Rng rng(cell_seed(cfg.seed, idx.kind, idx.m, idx.n, "embedding"));
    for (int s = 0; s < cfg.samples; ++s) {
        const SliceCoords c = sample_coords(idx, rng);
        const SpectralClass tau = spectral_class_of(slice_point(idx, c));
        const IdealPoint ip = ideal_point_from_coords(idx, c);
        const SupportPoints sp = support_points(ip);
        ++r.samples_run;
        const SurfaceSpec spec = surface(idx.kind, tau, idx);
        for (const auto& p : sp.pts) {
            const double res = std::abs(surface_residual(spec, p[0], p[1], p[2])) /
                               surface_scale(spec, p[0], p[1], p[2]);
            r.max_residual = std::max(r.max_residual, res);
            if (res > cfg.tol) {
                r.pass = false;
                r.detail = "surface residual " + std::to_string(res);
                return r;
            }
        }
        try {
            const IdealPointF rt = round_trip(sp, tau, idx);
            const double err = ideal_point_distance(ip, rt);
            if (err > 1e-8) {
                r.pass = false;
                r.detail = "round-trip error " + std::to_string(err);
                return r;
            }
        } catch (const RepeatedSupport&) {
            ++r.skipped;
        }
    }
    if (r.skipped * 2 > r.samples_run) {
        r.pass = false;
        r.detail = "too many repeated-support samples";
    }
    return r;
}

// numeric Jacobian of the reduced-charpoly coefficient map
Eigen::MatrixXcd numeric_jacobian(const OrbitIndex& idx, const std::vector<std::complex<double>>& flat,
                                  double h) {
    const int cols = int(flat.size());
    Eigen::MatrixXcd J(idx.m, cols);
    for (int k = 0; k < cols; ++k) {
        auto fp = flat, fm = flat;
        fp[k] += h;
        fm[k] -= h;
        const auto gp = reduced_charpoly_coeffs_flat(idx, fp);
        const auto gm = reduced_charpoly_coeffs_flat(idx, fm);
        for (int j = 0; j < idx.m; ++j) J(j, k) = (gp[j] - gm[j]) / (2.0 * h);
    }
    return J;
}

// Newton projection of flat onto the fiber with the given reduced-charpoly
// target; returns false if it fails to converge.
bool project_to_fiber(const OrbitIndex& idx, std::vector<std::complex<double>>& flat,
                      const std::vector<std::complex<double>>& target) {
    double scale = 1.0;
    for (const auto& t : target) scale = std::max(scale, std::abs(t));
    for (int it = 0; it < 40; ++it) {
        const auto g = reduced_charpoly_coeffs_flat(idx, flat);
        double worst = 0.0;
        Eigen::VectorXcd gv(idx.m);
        for (int j = 0; j < idx.m; ++j) {
            gv(j) = g[j] - target[j];
            worst = std::max(worst, std::abs(gv(j)));
        }
        if (worst < 1e-12 * scale) return true;
        const Eigen::MatrixXcd J = numeric_jacobian(idx, flat, 1e-6);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXcd delta = svd.solve(gv);
        for (size_t k = 0; k < flat.size(); ++k) flat[k] -= delta(long(k));
    }
    return false;
}

CellResult check_b_support(const OrbitIndex& idx, const CampaignConfig& cfg) {
    CellResult r = make_cell("b-support", idx);
    Rng rng(cell_seed(cfg.seed, idx.kind, idx.m, idx.n, "b-support"));
    int distinct = 0, projected = 0;
    for (int s = 0; s < cfg.samples; ++s) {
        const SliceCoords c = sample_coords(idx, rng);
        const IdealPoint ip = ideal_point_from_coords(idx, c);
        const SupportPoints sp = support_points(ip);
        ++r.samples_run;

        // partner: the deck transformation must give the identical ideal
        // point (exactly) and identical support multiset (numerically)
        const SliceCoords cp = b_fiber_partner(c);
        const IdealPoint ipp = ideal_point_from_coords(idx, cp);
        if (!(ip.Ahat == ipp.Ahat && ip.Dhat == ipp.Dhat && ip.Uhat == ipp.Uhat &&
              ip.Vhat == ipp.Vhat)) {
            r.pass = false;
            r.detail = "partner ideal points differ exactly";
            return r;
        }
        double pscale = 1.0;
        for (const auto& p : sp.pts)
            for (int k = 0; k < 3; ++k) pscale = std::max(pscale, std::abs(p[k]));
        const double pd = support_distance(sp, support_points(ipp)) / pscale;
        r.max_residual = std::max(r.max_residual, pd);
        if (pd > cfg.tol) {
            r.pass = false;
            r.detail = "partner support distance " + std::to_string(pd);
            return r;
        }

        // non-partner same-fiber point by perturb-and-project
        const auto flat_exact = flatten_coords(c);
        std::vector<std::complex<double>> flat0(flat_exact.size()), flat1(flat_exact.size());
        for (size_t k = 0; k < flat_exact.size(); ++k) flat0[k] = flat_exact[k].to_complex();
        const auto target_exact = reduced_charpoly_coeffs_flat(idx, flat_exact);
        std::vector<std::complex<double>> target(target_exact.size());
        for (size_t k = 0; k < target_exact.size(); ++k) target[k] = target_exact[k].to_complex();
        for (size_t k = 0; k < flat0.size(); ++k) {
            const double dre = double(rng.int_in(-100, 100)) / 400.0;
            const double dim = double(rng.int_in(-100, 100)) / 400.0;
            flat1[k] = flat0[k] + std::complex<double>(dre, dim);
        }
        if (!project_to_fiber(idx, flat1, target)) {
            ++r.skipped;
            continue;
        }
        auto far_from = [&](const std::vector<std::complex<double>>& ref) {
            double d = 0.0;
            for (size_t k = 0; k < flat1.size(); ++k) d = std::max(d, std::abs(flat1[k] - ref[k]));
            return d > 1e-4;
        };
        std::vector<std::complex<double>> flatp = flat0;
        flatp[flatp.size() - 2] = -flatp[flatp.size() - 2];
        flatp[flatp.size() - 1] = -flatp[flatp.size() - 1];
        if (!far_from(flat0) || !far_from(flatp)) {
            ++r.skipped;  // landed back on the original or its partner
            continue;
        }
        ++projected;
        try {
            const SupportPoints sp1 = support_points(ideal_point_numeric(idx, flat1));
            if (support_distance(sp, sp1) / pscale > 1e-6) ++distinct;
        } catch (const ReductionFailure&) {
            ++r.skipped;
            --projected;
        }
    }
    std::ostringstream os;
    os << "projected=" << projected << " distinct=" << distinct << " skipped=" << r.skipped;
    r.detail = os.str();
    if (projected * 2 < cfg.samples) {
        r.pass = false;
        r.detail += " (too few successful fiber projections)";
    } else if (distinct * 100 < projected * 99) {
        r.pass = false;
        r.detail += " (non-partner support collision rate too high)";
    }
    return r;
}

CellResult check_smoothness(const OrbitIndex& idx, const CampaignConfig& cfg) {
    CellResult r = make_cell("smoothness", idx);
    Rng rng(cell_seed(cfg.seed, idx.kind, idx.m, idx.n, "smoothness"));
    const int wanted = cfg.samples;
    int attempts = 0;
    while (r.samples_run < wanted && attempts < 20 * wanted) {
        ++attempts;
        const SliceCoords c = sample_coords(idx, rng);
        const SpectralClass tau = spectral_class_of(slice_point(idx, c));
        if (!is_regular(tau)) continue;
        ++r.samples_run;
        const int rank = fiber_jacobian_rank(idx, c);
        if (rank != idx.m) {
            r.pass = false;
            r.detail = "jacobian rank " + std::to_string(rank) + " at a regular point";
            return r;
        }
        if (r.samples_run == 1) {
            // analytic (exact-stencil) vs central finite differences
            const auto J = fiber_jacobian(idx, c);
            const auto flat_exact = flatten_coords(c);
            std::vector<std::complex<double>> flat(flat_exact.size());
            for (size_t k = 0; k < flat.size(); ++k) flat[k] = flat_exact[k].to_complex();
            const Eigen::MatrixXcd JFD = numeric_jacobian(idx, flat, 1e-5);
            double scale = 1.0, worst = 0.0;
            for (const auto& v : J) scale = std::max(scale, std::abs(v));
            const int cols = int(flat.size());
            // type D: row 0 of the exact jacobian differentiates the Pfaffian
            // invariant p, not the constant coefficient (-1)^m p^2 that the
            // numeric coefficient map produces, so skip it in the comparison
            const int row0 = idx.kind == AlgebraKind::D ? 1 : 0;
            for (int i = row0; i < idx.m; ++i)
                for (int j = 0; j < cols; ++j)
                    worst = std::max(worst, std::abs(J[size_t(i) * cols + j] - JFD(i, j)));
            r.max_residual = worst / scale;
            if (r.max_residual > 1e-6) {
                r.pass = false;
                r.detail = "finite-difference cross-check residual " + std::to_string(r.max_residual);
                return r;
            }
        }
    }
    if (r.samples_run < wanted) {
        r.pass = false;
        r.detail = "could not find enough regular samples";
    }
    return r;
}

// --- scheduling --------------------------------------------------------

int resolve_threads(const CampaignConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("NILSLICE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

Report run_campaign(const CampaignConfig& cfg) {
    const auto t0 = Clk::now();
    Report rep;
    rep.config = cfg;

    std::vector<std::function<CellResult()>> tasks;
    auto want = [&](Command c) { return cfg.command == Command::All || cfg.command == c; };

    if (want(Command::Charpoly))
        for (const auto& idx : enumerate_cells(cfg, 2))
            tasks.push_back([idx, &cfg] { return check_charpoly(idx, cfg); });
    if (want(Command::JM))
        for (const auto& idx : enumerate_cells(cfg, 1))
            tasks.push_back([idx, &cfg] { return check_jm(idx, cfg); });
    if (want(Command::Lambda))
        for (const auto& idx : enumerate_cells(cfg, 1))
            tasks.push_back([idx, &cfg] { return check_lambda(idx, cfg); });
    if (want(Command::Transversality))
        for (const auto& idx : enumerate_cells(cfg, 1))
            tasks.push_back([idx, &cfg] { return check_transversality(idx, cfg); });
    if (want(Command::Kleinian))
        for (const auto& idx : enumerate_cells(cfg, 2))
            if (idx.n == 1) tasks.push_back([idx] { return check_kleinian(idx.kind, idx.m); });
    if (want(Command::Embedding))
        for (const auto& idx : enumerate_cells(cfg, 2)) {
            if (idx.n < 1) continue;
            if (idx.kind == AlgebraKind::B)
                tasks.push_back([idx, &cfg] { return check_b_support(idx, cfg); });
            else
                tasks.push_back([idx, &cfg] { return check_embedding_cd(idx, cfg); });
        }
    if (want(Command::Smoothness))
        for (const auto& idx : enumerate_cells(cfg, 1))
            tasks.push_back([idx, &cfg] { return check_smoothness(idx, cfg); });

    rep.cells.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const auto c0 = Clk::now();
            CellResult res;
            try {
                res = tasks[k]();
            } catch (const std::exception& e) {
                res.check = "error";
                res.pass = false;
                res.detail = e.what();
            }
            res.seconds = std::chrono::duration<double>(Clk::now() - c0).count();
            rep.cells[k] = std::move(res);
        }
    };
    const int nthreads = resolve_threads(cfg);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    rep.all_pass = true;
    for (const auto& c : rep.cells) rep.all_pass = rep.all_pass && c.pass;
    rep.seconds = std::chrono::duration<double>(Clk::now() - t0).count();
    return rep;
}

std::string report_to_json(const Report& rep, bool include_timings) {
    nlohmann::json j;
    j["schema_version"] = rep.schema_version;
    j["config"] = {{"command", command_name(rep.config.command)},
                   {"kind", rep.config.kind ? kind_name(*rep.config.kind) : "all"},
                   {"m", rep.config.m ? nlohmann::json(*rep.config.m) : nlohmann::json(nullptr)},
                   {"n", rep.config.n ? nlohmann::json(*rep.config.n) : nlohmann::json(nullptr)},
                   {"m_max", rep.config.m_max},
                   {"samples", rep.config.samples},
                   {"seed", rep.config.seed},
                   {"tol", rep.config.tol}};
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : rep.cells) {
        nlohmann::json jc{{"check", c.check},
                          {"kind", kind_name(c.kind)},
                          {"m", c.m},
                          {"n", c.n},
                          {"pass", c.pass},
                          {"samples", c.samples_run},
                          {"skipped", c.skipped},
                          {"max_residual", c.max_residual},
                          {"detail", c.detail},
                          {"seconds", include_timings ? c.seconds : 0.0}};
        cells.push_back(jc);
    }
    j["cells"] = cells;
    j["all_pass"] = rep.all_pass;
    j["seconds"] = include_timings ? rep.seconds : 0.0;
    return j.dump(2);
}

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    for (const auto& c : rep.cells) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.check << "  " << kind_name(c.kind) << "  m="
           << c.m << " n=" << c.n;
        if (c.samples_run > 0) os << "  samples=" << c.samples_run;
        if (c.skipped > 0) os << " skipped=" << c.skipped;
        if (c.max_residual > 0) os << "  max_residual=" << c.max_residual;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << (rep.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace nilslice
