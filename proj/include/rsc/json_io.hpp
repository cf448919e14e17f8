#pragma once

#include <string>

#include <json.hpp>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/harness.hpp"

namespace rsc {

using Json = nlohmann::ordered_json;

/// {"name": string, "maximal_simplices": [[int,...],...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& K);

SimplicialComplex load_complex_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"k_minus_1": int, "bits_hex": string, "complex": name}
Json cochain_to_json(const Cochain& eps, const std::string& complex_name);
Cochain cochain_from_json(const Json& j, const SimplicialComplex& K);

/// Stable, reproducible report serialization: exact rationals as "p/q"
/// strings, Monte Carlo values as decimal floats marked "approx": true.
/// Wall-clock time is deliberately not part of the document.
Json report_to_json(const ExperimentReport& r, const Json& config_echo);

/// Columns: statistic, d, value, ci_radius, normalization
std::string report_to_csv(const ExperimentReport& r);
std::string convergence_to_csv(const ConvergenceTable& t);

Json convergence_to_json(const ConvergenceTable& t, const Json& config_echo);

Json artifact_stamp();

} // namespace rsc
