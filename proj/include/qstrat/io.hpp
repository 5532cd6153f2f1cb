#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "qstrat/gcalg.hpp"
#include "qstrat/gcomplex.hpp"
#include "qstrat/permgroup.hpp"
#include "qstrat/toric.hpp"

namespace qstrat {

using Json = nlohmann::json;

/// Reads a JSON file; Validation on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"degree": n, "generators": [[images...], ...]}
FiniteGroup parse_group(const Json& j);
/// {"vertices": m, "facets": [[...]], "action": [[images...] per generator]}
GComplex parse_complex(const Json& j, std::size_t generator_count);
/// {"rank": n, "rays": [[ints]], "max_cones": [[ray indices]]}
Fan parse_fan(const Json& j);

/// Element as a monomial -> coefficient map, e.g. {"x1*x2^2": 1}.
Json element_json(const GradedAlgebra& alg, const AlgElement& a);

}  // namespace qstrat
