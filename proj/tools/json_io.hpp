#ifndef LOGMONOID_TOOLS_JSON_IO_HPP
#define LOGMONOID_TOOLS_JSON_IO_HPP

#include "logmonoid/cones.hpp"
#include "logmonoid/covers.hpp"
#include "logmonoid/gammacoh.hpp"
#include "logmonoid/kummer.hpp"

#include "json.hpp"

#include <string>

namespace logmonoid::io {

using Json = nlohmann::ordered_json;

Json read_file(const std::string& path);

// Integers are numbers when they fit in 64 bits and decimal strings otherwise.
// Input accepts either form.
Json to_json(const Integer& a);
Integer integer_from_json(const Json& j);
long long small_from_json(const Json& j);
Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j, Index dim = -1);
Json to_json(const std::vector<IntVector>& vs);
std::vector<IntVector> vectors_from_json(const Json& j, Index dim);
// Rows of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

// {"ambient": group, "generators": [...]} or {"presentation": {"num_gens": s, "relations": [[u, v], ...]}}.
// The monoid is returned in its own group together with the inclusion into the stated ambient.
EmbeddedMonoid monoid_from_json(const Json& j);
Json to_json(const IntegralMonoid& p);
// Generators pushed forward along the inclusion.
Json to_json(const EmbeddedMonoid& p);

// {"source": monoid, "target": monoid} with "matrix" (target x source) or "images" of the source generators.
// Both monoids must generate their ambient groups.
MonoidHom hom_from_json(const Json& j);

RationalCone cone_from_json(const Json& j);

// {"q": q, "dim": d, "gammas": [matrix of codes, ...]}.
GammaModule module_from_json(const Json& j);
Json to_json(const GammaModule& m);

}  // namespace logmonoid::io

#endif
