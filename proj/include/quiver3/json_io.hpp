#pragma once

#include <json.hpp>

#include "quiver3/classify.hpp"
#include "quiver3/hochschild.hpp"
#include "quiver3/orbits.hpp"
#include "quiver3/spectral.hpp"

namespace quiver3 {

using Json = nlohmann::json;

/// Triples cross the JSON boundary as arrays of decimal strings,
/// e.g. ["3","3","3"], so arbitrary-precision entries survive bit-exactly.
Json triple_json(const Triple& t);
Triple triple_from_json(const Json& j);  // throws std::invalid_argument

Json word_json(const GroupWord& w);
Json classification_json(const Classification& c);
Json orbit_summary_json(const OrbitSummary& s);
Json spectrum_json(const CoxeterSpectrum& s, const std::array<Int, 4>& poly);
Json cyclic_reps_json(const CyclicReps& r);
Json acyclic_classes_json(const std::vector<AcyclicOrbitClass>& classes);
Json quiver_json(const AcyclicQuiver3& q);

}  // namespace quiver3
