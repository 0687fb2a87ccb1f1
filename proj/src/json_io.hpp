#pragma once

#include <json.hpp>

#include "codes.hpp"
#include "construct.hpp"
#include "linset.hpp"
#include "suites.hpp"

namespace msidon {

using json = nlohmann::json;

json tower_json(const Tower& tw);
Tower tower_from_json(const json& j);

json subspace_json(const Subspace& s);
// `ambient` overrides the embedded field/q (and must agree when both given)
Subspace subspace_from_json(const json& j, const Tower* ambient = nullptr);

json family_json(const Family& f, const json* params = nullptr);
Family family_from_json(const json& j);
// construction metadata carried inside a family file, when present
std::optional<json> family_params_json(const json& family_file);

json witness_json(const Witness& w);
json verdict_json(const Verdict& v);
json eq_witness_json(const EqWitness& w);
json span_class_json(const SpanClassReport& r);
json canonical_form_json(const CanonicalForm& c);

json spectrum_json(const WeightSpectrum& s);
json heavy_json(const HeavyReport& r);
json hyperplane_json(const HyperplaneWeights& h);

json code_json(const CyclicCode& c, bool with_min_distance);
CyclicCode code_from_json(const json& j, unsigned threads = 1);

json sim_json(const SimReport& r);

json monomial_params_json(const MonomialParams& p);
MonomialParams monomial_params_from_json(const json& j);
json orbit_code_params_json(const OrbitCodeParams& r);

json kernel_bound_json(const KernelBoundReport& r);
json three_way_json(const ThreeWayReport& r);
json projection_suite_json(const ProjectionReportSuite& r);
json roundtrip_json(const RoundTripReport& r);
json weak_search_json(const WeakSearchReport& r);
json monomial_grid_json(const MonomialGridReport& r);

}  // namespace msidon
