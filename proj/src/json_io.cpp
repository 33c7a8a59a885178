#include "quiver3/json_io.hpp"

#include <stdexcept>

namespace quiver3 {

Json triple_json(const Triple& t) {
    return Json::array({to_string(t.x), to_string(t.y), to_string(t.z)});
}

Triple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("triple must be a JSON array of three decimal strings");
    Int v[3];
    for (int i = 0; i < 3; ++i) {
        const Json& e = j[i];
        if (e.is_string())
            v[i] = parse_int(e.get<std::string>());
        else if (e.is_number_integer())
            v[i] = parse_int(std::to_string(e.get<long long>()));
        else
            throw std::invalid_argument("triple entries must be decimal strings");
    }
    return Triple(v[0], v[1], v[2]);
}

Json word_json(const GroupWord& w) {
    Json arr = Json::array();
    for (Generator g : w) arr.push_back(generator_name(g));
    return arr;
}

Json classification_json(const Classification& c) {
    return Json{{"verdict", verdict_name(c.verdict)},
                {"representative", triple_json(c.representative)},
                {"witness", word_json(c.witness)},
                {"constant", to_string(c.constant)}};
}

Json orbit_summary_json(const OrbitSummary& s) {
    return Json{{"seed", triple_json(s.seed)},
                {"representative", triple_json(s.representative)},
                {"elements_found", s.elements_found},
                {"is_finite", finiteness_name(s.is_finite)},
                {"bound", s.bound},
                {"constant", to_string(s.constant)},
                {"verdict", verdict_name(s.verdict)},
                {"truncated", s.truncated}};
}

Json spectrum_json(const CoxeterSpectrum& s, const std::array<Int, 4>& poly) {
    Json coeffs = Json::array();
    for (const Int& c : poly) coeffs.push_back(to_string(c));
    return Json{{"constant", to_string(s.constant)},
                {"trace", to_string(s.constant - 3)},
                {"char_poly", coeffs},
                {"lambda_plus_inverse", to_string(s.lambda_plus_inverse)},
                {"lambda", Json{{"re", s.lambda.real()}, {"im", s.lambda.imag()}}},
                {"lambda_abs", std::abs(s.lambda)},
                {"lambda_real", s.lambda_real},
                {"regime", regime_name(s.regime)}};
}

Json cyclic_reps_json(const CyclicReps& r) {
    Json reps = Json::array();
    for (const Triple& t : r.reps) reps.push_back(triple_json(t));
    Json j{{"infinite_family", r.infinite_family}, {"representatives", reps}};
    if (r.infinite_family) j["family"] = "(x,x,2) for integer x >= 2";
    return j;
}

Json acyclic_classes_json(const std::vector<AcyclicOrbitClass>& classes) {
    Json arr = Json::array();
    for (const AcyclicOrbitClass& c : classes) {
        Json members = Json::array();
        for (const Triple& m : c.members) members.push_back(triple_json(m));
        arr.push_back(Json{{"canonical", triple_json(c.canonical)},
                           {"members", members},
                           {"complete", c.complete}});
    }
    return arr;
}

Json quiver_json(const AcyclicQuiver3& q) {
    return Json{{"r", to_string(q.r)}, {"s", to_string(q.s)}, {"t", to_string(q.t)}};
}

}  // namespace quiver3
