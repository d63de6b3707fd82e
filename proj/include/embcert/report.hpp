#pragma once

#include <string>

#include <json.hpp>

#include "embcert/complex.hpp"
#include "embcert/cycles.hpp"
#include "embcert/homology.hpp"
#include "embcert/obstruction.hpp"

namespace embcert::report {

using nlohmann::json;

/// Common envelope: schema version, tool version, input digest and source.
json envelope(const SimplicialComplex& sigma, const std::string& source);

json f_vector_json(const SimplicialComplex& sigma);
json profile_json(const HomologyProfile& prof);
json check_json(const InequalityReport& rep);
json verdict_json(const ObstructionVerdict& verdict);
json girth_json(const GirthBound& bound,
                const std::optional<GirthWitness>& witness);
json torsion_json(const TorsionCertificate& cert);
json mcomplete_json(const McResult& res);

std::string render_check_line(const InequalityReport& rep);

} // namespace embcert::report
