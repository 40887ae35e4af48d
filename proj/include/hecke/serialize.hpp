#pragma once

// JSON and plain-text renderings of library objects. Scalars always appear
// as strings in the scalar syntax, matrices as nested arrays of them. All
// orders are deterministic, so identical inputs give identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hecke/algebra.hpp"
#include "hecke/h2bax.hpp"
#include "hecke/seminormal.hpp"
#include "hecke/verify.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const Element& e);
Json to_json(const ScalarMatrix& m);
Json to_json(const RationalMatrix& m);
Json to_json(const MPartition& p);
Json to_json(const StandardMTableau& t);
Json to_json(const ParamSpec& p);
Json to_json(const H2Rep& r);
Json to_json(const BaxterReport& r);
Json to_json(const CompletenessReport& r);
Json to_json(const CheckReport& r);

// Matrices of `rep`, specialized when `spec` is given.
Json representation_json(const Representation& rep, const std::optional<ParamSpec>& spec);
std::string representation_text(const Representation& rep, const std::optional<ParamSpec>& spec);

Json basis_json(const Algebra& h);
// One bracketed normal word per line.
std::string basis_text(const Algebra& h);

// Shapes with their standard tableaux and content strings.
Json tableaux_json(const std::vector<MPartition>& shapes);
std::string tableaux_text(const std::vector<MPartition>& shapes);

std::string h2_text(const H2Rep& r);
std::string baxter_text(const BaxterReport& r);
std::string check_text(const CheckReport& r);

}  // namespace hecke
