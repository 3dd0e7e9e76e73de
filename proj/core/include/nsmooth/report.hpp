#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "nsmooth/conditions.hpp"
#include "nsmooth/knapp.hpp"
#include "nsmooth/lattice.hpp"
#include "nsmooth/newton_data.hpp"
#include "nsmooth/oscillatory.hpp"
#include "nsmooth/profile.hpp"

namespace nsmooth {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);                    // "p" or "p/q" string
Json point_json(ExpPoint p);                    // [m, n]
Json candidate_json(const Candidate& c);        // [m, n] or [M, "inf"]
Json chain_point_json(const ChainPoint& c);

Json polynomial_json(const Polynomial& P);
Json polyhedron_json(const NewtonPolyhedron& N);
Json newton_data_json(const NewtonData& d);
Json conditions_json(const ConditionReport& r);
Json profile_json(const Profile& p);
Json line_json(const NecessaryLine& l);
Json box_json(const BoxSpec& b);
Json region_json(const NecessaryRegion& r);
Json cover_json(const LatticeCover& c);
Json decay_json(const DecayFitReport& r);
Json phase_json(const PhaseBoundReport& r);
Json scaling_json(const ScalingFitReport& r);

// Envelope: tool version, input echo, config echo.
Json report_envelope(const std::string& input_text, const Json& config);

std::string dump_json(const Json& j);  // 2-space indent, trailing newline

}  // namespace nsmooth
