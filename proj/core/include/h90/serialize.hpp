#pragma once

#include <json.hpp>

#include "h90/certificates.hpp"
#include "h90/cyclotomic.hpp"
#include "h90/lifts.hpp"

namespace h90 {

using Json = nlohmann::ordered_json;

// FieldCtx as {p, n, modulus}; rationals as p = 0.
Json to_json(const FieldCtxPtr& ctx);
// Element as [int, ...] over finite fields (length n) or "num/den" over the
// rationals.
Json to_json(const FElem& x);
// {ctx, coeffs} lowest-degree-first.
Json to_json(const Poly& f);
Json to_json(const RatFunc& f);
Json to_json(const QuotientRecord& rec);
Json to_json(const CycloReport& rep);
Json to_json(const BranchData& bd);
Json to_json(const LacunaryProfile& prof);
Json to_json(const CertificateReport& rep);
Json to_json(const DescentConditions& dc);
Json to_json(const ExponentFunction& f);  // sorted (exponent, coefficient) pairs

FieldCtxPtr ctx_from_json(const Json& j);
Poly poly_from_json(const Json& j);

}  // namespace h90
