#pragma once

#include "lorentzlab/harmonic.hpp"
#include "lorentzlab/picard_manin.hpp"
#include "lorentzlab/principal_series.hpp"
#include "lorentzlab/run_config.hpp"

#include <json.hpp>

#include <string>

namespace lorentzlab {

using Json = nlohmann::ordered_json;

// Coefficient vectors travel as [[re, im], ...] with entry 0 holding n = -K.
Json coeffs_to_json(const CoeffVector& v);
CoeffVector coeffs_from_json(const Json& j);

Json config_to_json(const RunConfig& cfg);

// Mesh + state format:
//   {"vertices": [[x, y], ...], "edges": [[i, j, w], ...],
//    "boundary": [i, ...], "values": [[coords...], ...]}
// `values` may be omitted (mesh only) or carry one ambient row per vertex.
Json mesh_to_json(const DiscMesh& mesh, const MapState* state = nullptr);
DiscMesh mesh_from_json(const Json& j);
MapState state_from_json(const Json& j);

Json degree_report_to_json(const DegreeReport& r);

// Serializes with a fixed float format (shortest round-trip) so identical
// runs produce byte-identical files.
std::string dump_json(const Json& j);

// Writes through a temp file in the target directory plus rename, so readers
// never observe a partial report.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace lorentzlab
