#include "json_io.hpp"

namespace msidon {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(status_code::parse, what); }

std::uint64_t require_u64(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() ||
      (j[key].is_number_integer() && !j[key].is_number_unsigned() && j[key].get<std::int64_t>() < 0))
    parse_fail(std::string("missing or invalid field '") + key + "'");
  return j[key].get<std::uint64_t>();
}

std::string require_str(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    parse_fail(std::string("missing or invalid field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

json tower_json(const Tower& tw) {
  return json{{"field", tw.field().spec()}, {"q", tw.q()}};
}

Tower tower_from_json(const json& j) {
  auto F = Field::parse(require_str(j, "field"));
  const std::uint64_t q = require_u64(j, "q");
  auto [p, e] = factor_prime_power(q);
  if (p != F->characteristic()) parse_fail("q does not share the field characteristic");
  return Tower(F, e);
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& r : s.rows()) rows.push_back(r);
  json j = tower_json(s.tower());
  j["basis"] = std::move(rows);
  return j;
}

Subspace subspace_from_json(const json& j, const Tower* ambient) {
  Tower tw;
  if (j.contains("field")) {
    tw = tower_from_json(j);
    if (ambient && !ambient->same_structure(tw)) parse_fail("subspace field mismatch");
  } else if (ambient) {
    tw = *ambient;
  } else {
    parse_fail("subspace without a field");
  }
  if (!j.contains("basis") || !j["basis"].is_array()) parse_fail("subspace without a basis");
  Mat rows;
  for (const auto& r : j["basis"]) {
    if (!r.is_array()) parse_fail("basis row is not an array");
    rows.push_back(r.get<Row>());
  }
  return Subspace::from_rows(tw, std::move(rows));
}

json family_json(const Family& f, const json* params) {
  json j = tower_json(f.tw);
  json subs = json::array();
  for (const auto& s : f.subs) {
    json sj = json::object();
    json rows = json::array();
    for (const auto& r : s.rows()) rows.push_back(r);
    sj["basis"] = std::move(rows);
    subs.push_back(std::move(sj));
  }
  j["subspaces"] = std::move(subs);
  if (params) j["params"] = *params;
  return j;
}

Family family_from_json(const json& j) {
  Tower tw = tower_from_json(j);
  if (!j.contains("subspaces") || !j["subspaces"].is_array())
    parse_fail("family without subspaces");
  std::vector<Subspace> subs;
  for (const auto& sj : j["subspaces"]) subs.push_back(subspace_from_json(sj, &tw));
  return make_family(tw, std::move(subs));
}

std::optional<json> family_params_json(const json& family_file) {
  if (family_file.contains("params")) return family_file["params"];
  return std::nullopt;
}

json witness_json(const Witness& w) {
  json j{{"kind", w.kind}};
  if (!w.indices.empty()) j["indices"] = w.indices;
  if (!w.elements.empty()) j["elements"] = w.elements;
  if (w.value) j["value"] = w.value;
  return j;
}

json verdict_json(const Verdict& v) {
  json j{{"result", v.result}, {"route", v.route}};
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

json eq_witness_json(const EqWitness& w) {
  return json{{"sigma", w.sigma}, {"lambdas", w.lambdas}, {"rho_exp", w.rho_exp}};
}

json span_class_json(const SpanClassReport& r) {
  std::string cls = "neither";
  if (r.minimum && r.maximum)
    cls = "minimum-and-maximum";
  else if (r.minimum)
    cls = "minimum-span";
  else if (r.maximum)
    cls = "maximum-span";
  return json{{"class", cls},          {"square_dims", r.square_dims}, {"total", r.total},
              {"lower", r.lower},      {"upper", r.upper},             {"bounds_apply", r.bounds_apply},
              {"bounds_ok", r.bounds_ok}};
}

json canonical_form_json(const CanonicalForm& c) {
  json entries = json::array();
  for (std::size_t i = 0; i < c.fs.size(); ++i) {
    entries.push_back(json{{"lambda", c.lambdas[i]},
                           {"eta", c.etas[i]},
                           {"a", c.eta_a[i]},
                           {"b", c.eta_b[i]},
                           {"f", c.fs[i].q_coeffs()}});
  }
  return json{{"t", c.t}, {"entries", std::move(entries)}, {"A", c.A}, {"B", c.B}};
}

json spectrum_json(const WeightSpectrum& s) {
  json counts = json::object();
  for (const auto& [w, n] : s.counts) counts[std::to_string(w)] = n;
  return json{{"counts", std::move(counts)},
              {"size", s.size},
              {"rank", s.rank},
              {"identities_ok", s.identities_ok}};
}

json heavy_json(const HeavyReport& r) {
  json pts = json::array();
  for (const auto& h : r.heavy) pts.push_back(json{{"point", h.point}, {"weight", h.weight}});
  return json{{"spectrum", spectrum_json(r.spectrum)},
              {"heavy", std::move(pts)},
              {"exactly_coordinate_points", r.exactly_coordinate_points},
              {"weight_bound_ok", r.weight_bound_ok},
              {"rank_bound_ok", r.rank_bound_ok}};
}

json hyperplane_json(const HyperplaneWeights& h) {
  return json{{"weights", {h.w_low, h.w_mid, h.w_high}},
              {"counts", {h.n_low, h.n_mid, h.n_high}},
              {"total", h.total}};
}

json code_json(const CyclicCode& c, bool with_min_distance) {
  json j = tower_json(c.tw);
  j["t"] = c.t;
  json gens = json::array();
  for (const auto& g : c.generators) {
    json rows = json::array();
    for (const auto& r : g.rows()) rows.push_back(r);
    gens.push_back(json{{"basis", std::move(rows)}});
  }
  j["generators"] = std::move(gens);
  j["orbit_sizes"] = c.orbit_sizes;
  j["size"] = c.size;
  if (with_min_distance && c.min_dist) j["min_distance"] = *c.min_dist;
  return j;
}

CyclicCode code_from_json(const json& j, unsigned threads) {
  Tower tw = tower_from_json(j);
  if (!j.contains("generators") || !j["generators"].is_array())
    parse_fail("code manifest without generators");
  std::vector<Subspace> gens;
  for (const auto& g : j["generators"]) gens.push_back(subspace_from_json(g, &tw));
  CyclicCode c = build_code(make_family(tw, std::move(gens)), threads);
  if (j.contains("size") && j["size"].get<std::uint64_t>() != c.size)
    parse_fail("declared code size disagrees with the materialized orbits");
  if (j.contains("t") && j["t"].get<unsigned>() != c.t)
    parse_fail("declared codeword dimension disagrees with the generators");
  return c;
}

json sim_json(const SimReport& r) {
  return json{{"trials", r.trials},
              {"successes", r.successes},
              {"ambiguous", r.ambiguous},
              {"failures", r.failures},
              {"wrong_unique_claims", r.wrong_unique_claims},
              {"params", json{{"rho", r.params.rho_dims}, {"e", r.params.err_dims}, {"seed", r.params.seed}}}};
}

json monomial_params_json(const MonomialParams& p) {
  return json{{"kind", "monomial"},
              {"field", p.tw.field().spec()},
              {"q", p.tw.q()},
              {"t", p.t},
              {"s", p.s},
              {"r", p.r()},
              {"xi", p.xi},
              {"mus", p.mus},
              {"append_subfield", p.append_subfield}};
}

MonomialParams monomial_params_from_json(const json& j) {
  const std::uint64_t q = require_u64(j, "q");
  const unsigned t = static_cast<unsigned>(require_u64(j, "t"));
  const unsigned s = j.contains("s") ? static_cast<unsigned>(j["s"].get<std::uint64_t>()) : 1;
  const bool append = j.value("append_subfield", false);
  std::optional<std::vector<elt>> mus;
  if (j.contains("mus")) mus = j["mus"].get<std::vector<elt>>();
  std::optional<elt> xi;
  if (j.contains("xi")) xi = j["xi"].get<elt>();
  unsigned r = 0;
  if (j.contains("r"))
    r = static_cast<unsigned>(j["r"].get<std::uint64_t>());
  else if (mus)
    r = static_cast<unsigned>(mus->size()) + (append ? 1 : 0);
  else
    parse_fail("monomial params need either r or mus");
  if (j.contains("field")) {
    auto F = Field::parse(j["field"].get<std::string>());
    auto [p, e] = factor_prime_power(q);
    Tower tw(F, e);
    if (tw.degree() != 2 * t) parse_fail("field degree is not 2t over F_q");
    return monomial_params(tw, s, r, append, std::move(mus), xi);
  }
  return monomial_params(q, t, s, r, append, std::move(mus), xi);
}

json orbit_code_params_json(const OrbitCodeParams& r) {
  return json{{"kind", "orbit-code"},
              {"field", r.tw.field().spec()},
              {"q", r.tw.q()},
              {"t", r.t},
              {"s", r.s},
              {"w", r.w},
              {"b", r.b},
              {"gamma0", r.gamma0},
              {"tau", r.tau},
              {"gammas", r.gammas}};
}

json kernel_bound_json(const KernelBoundReport& r) {
  return json{{"samples", r.samples},
              {"bound_ok", r.bound_ok},
              {"oracle_agree", r.oracle_agree},
              {"equality_cases", r.equality_cases},
              {"norm_identity_ok", r.norm_identity_ok}};
}

json three_way_json(const ThreeWayReport& r) {
  return json{{"families", r.families},        {"agree", r.agree},
              {"holds", r.holds},              {"quotient_only", r.quotient_only},
              {"intersection_only", r.intersection_only}, {"heavy_mismatch", r.heavy_mismatch}};
}

json projection_suite_json(const ProjectionReportSuite& r) {
  return json{{"decompositions", r.decompositions}, {"all_ok", r.all_ok}};
}

json roundtrip_json(const RoundTripReport& r) {
  return json{{"trials", r.trials}, {"recovered", r.recovered}};
}

json weak_search_json(const WeakSearchReport& r) {
  json cands = json::array();
  for (const auto& f : r.candidates) cands.push_back(family_json(f));
  return json{{"trials", r.trials},
              {"weak", r.weak},
              {"multi", r.multi},
              {"weak_not_multi", r.weak_not_multi},
              {"candidates", std::move(cands)}};
}

json monomial_grid_json(const MonomialGridReport& r) {
  return json{{"pairs", r.pairs}, {"agree", r.agree}, {"disagreements", r.disagreements}};
}

}  // namespace msidon
