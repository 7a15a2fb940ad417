#ifndef NILSLICE_SERIALIZE_HPP
#define NILSLICE_SERIALIZE_HPP

#include <json.hpp>

#include "nilslice/hilbert.hpp"
#include "nilslice/transversality.hpp"

namespace nilslice {

/// JSON forms:
///   GaussianRational: string "a/b+c/d*i" (zero parts omitted)
///   Poly: array of such strings, index = degree
///   GMatrix: {kind, m, entries: [[...]]}
///   SliceCoords: {kind, m, n, a, y, z, d, a0?, d0?}
///   SpectralClass: {kind, m, mu: [[re, im], ...] sorted, pSign?}
///   TransversalityCertificate: field-for-field
///   IdealPoint: {kind, m, n, Ahat, Dhat, Uhat, Vhat}
///   SupportPoints: {kind, points: [[u, v, z], ...]} with complex [re, im]
nlohmann::json to_json(const GaussianRational& v);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const PolyF& p);
nlohmann::json to_json(const GMatrix& M);
nlohmann::json to_json(const SliceCoords& c);
nlohmann::json to_json(const SpectralClass& t);
nlohmann::json to_json(const TransversalityCertificate& cert);
nlohmann::json to_json(const IdealPoint& ip);
nlohmann::json to_json(const SupportPoints& sp);

GaussianRational rational_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
GMatrix gmatrix_from_json(const nlohmann::json& j);
SliceCoords coords_from_json(const nlohmann::json& j);

}  // namespace nilslice

#endif
