#pragma once

// JSON forms of every domain object. Parsers report problems as ValidationError
// with a JSON pointer to the offending value.

#include <json.hpp>

#include "tbs/classify.hpp"

namespace tbs {

using Json = nlohmann::json;

Json to_json(const Phase& p);
Json to_json(const Cyclotomic& c);
Json to_json(const AbGroup& G);
Json to_json(const AbElem& g);
Json to_json(const AbHom& f);
Json to_json(const Character& c);
Json to_json(const Cocycle& mu);
Json to_json(const Bicharacter& b);
Json to_json(const LatticePoint& k);
Json to_json(const Matrix2& m);
Json to_json(const AffineSL2& a);
Json to_json(const OplusElem& lambda);
Json to_json(const AlgElem& x);
Json to_json(const TensorElem& x);
Json to_json(const GroupStructure& s);
Json to_json(const ConjugacyReport& r);
Json to_json(const CentralizerReport& r);
Json to_json(const Nondegeneracy& n);

Phase phase_from_json(const Json& j, const std::string& path = "");
AbGroup group_from_json(const Json& j, const std::string& path = "");
AbElem element_from_json(const AbGroup& G, const Json& j, const std::string& path = "");
AbHom hom_from_json(const AbGroup& source, const AbGroup& target, const Json& j, const std::string& path = "");
Character character_from_json(const AbGroup& G, const Json& j, const std::string& path = "");
// Table entries not listed are 0.
Cocycle cocycle_from_json(const AbGroup& G, const Json& j, const std::string& path = "");
Triplet triplet_from_json(const Json& j);
Triplet read_triplet_file(const std::string& file);

}  // namespace tbs
