#pragma once
// JSON encodings of rings, matrices, factorizations, morphisms, witnesses,
// chains and Gamma_n data. Polynomials are coefficient arrays (low to high);
// rationals are "num/den" strings; F_{p^e} elements are digit arrays over F_p.

#include <string>

#include "json.hpp"
#include "nfold/cok_bridge.hpp"
#include "nfold/homotopy.hpp"

namespace nfold {

using json = nlohmann::json;

json to_json(const FieldSpec& f);
FieldSpec field_spec_from_json(const json& j);

json to_json(const Ring& r);
Ring ring_from_json(const json& j);

json to_json(const Ring& r, const Poly& p);
Poly poly_from_json(const Ring& r, const json& j);

json to_json(const TwistedMatrix& m);
TwistedMatrix matrix_from_json(const Ring& r, const json& j);

json to_json(const NFactorization& x);
NFactorization object_from_json(const Ring& r, const json& j);

// {"source": object, "target": object, "components": [matrix, ...]}
json to_json(const FactorMorphism& f);
FactorMorphism morphism_from_json(const Ring& r, const json& j);

json to_json(const HomotopyWitness& w);

json to_json(const ModulePresentation& p);
ModulePresentation presentation_from_json(const Ring& r, const json& j);

json to_json(const ChainModule& c);
ChainModule chain_from_json(const Ring& r, const json& j);

json to_json(const GammaModuleData& g);
GammaModuleData gamma_from_json(const Ring& r, const json& j);

json to_json(const KMatrix& m);

json read_json_file(const std::string& path);

}  // namespace nfold
