#ifndef CHIPRES_SERIALIZE_HPP
#define CHIPRES_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "chipres/cw_part.hpp"
#include "chipres/resolution.hpp"

namespace chipres {

using Json = nlohmann::ordered_json;

Json to_json(const Multigraph& g);

/// Blocks as sorted 1-based vertex arrays, arcs as [tail, head] block indices.
Json to_json(const AcyclicPartition& c);
AcyclicPartition partition_from_json(const Json& j);

/// Term list [[coefficient, exponents, t exponent], ...].
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const FreeComplex& f);
FreeComplex complex_from_json(const Json& j);

Json to_json(const CWPoset& p);

/// Bases and differential matrices, human readable.
std::string to_text(const FreeComplex& f);

enum class Ideal { MG, IG, T };

/// Macaulay2 session that resolves the ideal independently and prints its Betti table.
std::string cas_script(const Multigraph& g, Ideal ideal, const WeightVector* w = nullptr);

}  // namespace chipres

#endif
