#include "nilslice/serialize.hpp"

namespace nilslice {

using nlohmann::json;

json to_json(const GaussianRational& v) { return v.str(); }

json to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs) a.push_back(c.str());
    return a;
}

json to_json(const PolyF& p) {
    json a = json::array();
    for (const auto& c : p.coeffs) a.push_back(json::array({c.real(), c.imag()}));
    return a;
}

json to_json(const GMatrix& M) {
    json rows = json::array();
    const int N = M.N();
    for (int i = 0; i < N; ++i) {
        json row = json::array();
        for (int j = 0; j < N; ++j) row.push_back(M.M.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"kind", kind_name(M.kind)}, {"m", M.m}, {"entries", rows}};
}

json to_json(const SliceCoords& c) {
    auto arr = [](const std::vector<GaussianRational>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(x.str());
        return a;
    };
    json j{{"kind", kind_name(c.kind)}, {"m", c.m},     {"n", c.n},
           {"a", arr(c.a)},            {"y", arr(c.y)}, {"z", arr(c.z)},
           {"d", arr(c.d)}};
    if (c.kind == AlgebraKind::B) {
        j["a0"] = c.a0.str();
        j["d0"] = c.d0.str();
    }
    return j;
}

json to_json(const SpectralClass& t) {
    json mu = json::array();
    for (const auto& z : t.mu) mu.push_back(json::array({z.real(), z.imag()}));
    json j{{"kind", kind_name(t.kind)}, {"m", t.m}, {"mu", mu}};
    if (t.has_psign) j["pSign"] = json::array({t.psign.real(), t.psign.imag()});
    return j;
}

json to_json(const TransversalityCertificate& cert) {
    return json{{"kind", kind_name(cert.kind)}, {"m", cert.m},
                {"n", cert.n},                  {"dim_g", cert.dim_g},
                {"rank_ad", cert.rank_ad},      {"dim_V", cert.dim_V},
                {"rank_joint", cert.rank_joint}, {"verdict", cert.verdict}};
}

json to_json(const IdealPoint& ip) {
    return json{{"kind", kind_name(ip.kind)}, {"m", ip.m},           {"n", ip.n},
                {"Ahat", to_json(ip.Ahat)},   {"Dhat", to_json(ip.Dhat)},
                {"Uhat", to_json(ip.Uhat)},   {"Vhat", to_json(ip.Vhat)}};
}

json to_json(const SupportPoints& sp) {
    json pts = json::array();
    for (const auto& p : sp.pts) {
        json t = json::array();
        for (int c = 0; c < 3; ++c) t.push_back(json::array({p[c].real(), p[c].imag()}));
        pts.push_back(t);
    }
    return json{{"kind", kind_name(sp.kind)}, {"points", pts}};
}

GaussianRational rational_from_json(const json& j) { return GaussianRational::parse(j.get<std::string>()); }

Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& c : j) p.coeffs.push_back(GaussianRational::parse(c.get<std::string>()));
    p.trim();
    return p;
}

GMatrix gmatrix_from_json(const json& j) {
    const AlgebraKind kind = kind_from_name(j.at("kind").get<std::string>());
    const int m = j.at("m").get<int>();
    GMatrix M(kind, m);
    const auto& rows = j.at("entries");
    for (int i = 0; i < M.N(); ++i)
        for (int k = 0; k < M.N(); ++k)
            M.M.at(i, k) = GaussianRational::parse(rows.at(i).at(k).get<std::string>());
    return M;
}

SliceCoords coords_from_json(const json& j) {
    SliceCoords c;
    c.kind = kind_from_name(j.at("kind").get<std::string>());
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    auto arr = [](const json& a) {
        std::vector<GaussianRational> v;
        for (const auto& x : a) v.push_back(GaussianRational::parse(x.get<std::string>()));
        return v;
    };
    c.a = arr(j.at("a"));
    c.y = arr(j.at("y"));
    c.z = arr(j.at("z"));
    c.d = arr(j.at("d"));
    if (j.contains("a0")) c.a0 = GaussianRational::parse(j.at("a0").get<std::string>());
    if (j.contains("d0")) c.d0 = GaussianRational::parse(j.at("d0").get<std::string>());
    return c;
}

}  // namespace nilslice
