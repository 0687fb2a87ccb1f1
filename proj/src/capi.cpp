#include "msidon.h"

#include <cstring>

#include "json_io.hpp"

using namespace msidon;

struct msd_field {
  Tower tower;
};
struct msd_family {
  Family family;
  std::optional<json> params;
};
struct msd_code {
  CyclicCode code;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

msd_status to_status(status_code c) {
  switch (c) {
    case status_code::ok: return MSD_OK;
    case status_code::invalid: return MSD_ERR_INVALID;
    case status_code::parse: return MSD_ERR_PARSE;
    case status_code::cap_exceeded: return MSD_ERR_CAP;
    case status_code::internal: return MSD_ERR_INTERNAL;
  }
  return MSD_ERR_INTERNAL;
}

template <class Fn>
msd_status guarded(Fn&& fn) {
  try {
    fn();
    return MSD_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return MSD_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MSD_ERR_INTERNAL;
  }
}

json parse_json(const char* s) {
  if (s == nullptr || *s == '\0') return json::object();
  return json::parse(s);
}

Tower tower_with_base(FieldPtr F, std::uint64_t base_q) {
  if (base_q == 0) return Tower(F, 1);
  auto [p, e] = factor_prime_power(base_q);
  if (p != F->characteristic()) fail_invalid("base_q does not share the field characteristic");
  return Tower(F, e);
}

}  // namespace

extern "C" {

const char* msd_version(void) { return MSD_VERSION; }

const char* msd_last_error(void) { return g_last_error.c_str(); }

void msd_string_free(char* s) { std::free(s); }

msd_status msd_field_create(const char* spec, uint64_t base_q, msd_field** out) {
  return guarded([&] {
    if (!spec || !out) fail_invalid("null argument");
    *out = new msd_field{tower_with_base(Field::parse(spec), base_q)};
  });
}

msd_status msd_field_make(uint64_t p, uint32_t m, const char* modulus_csv, uint64_t base_q,
                          msd_field** out) {
  return guarded([&] {
    if (!out) fail_invalid("null argument");
    FieldPtr F;
    if (modulus_csv && *modulus_csv) {
      std::vector<unsigned> mod;
      std::string tok;
      for (const char* c = modulus_csv;; ++c) {
        if (*c == ',' || *c == '\0') {
          if (!tok.empty()) mod.push_back(static_cast<unsigned>(std::stoul(tok)));
          tok.clear();
          if (*c == '\0') break;
        } else {
          tok.push_back(*c);
        }
      }
      F = Field::make(static_cast<unsigned>(p), m, std::move(mod));
    } else {
      F = Field::make(static_cast<unsigned>(p), m);
    }
    *out = new msd_field{tower_with_base(F, base_q)};
  });
}

msd_status msd_field_describe(const msd_field* f, char** json_out) {
  return guarded([&] {
    if (!f || !json_out) fail_invalid("null argument");
    const Tower& tw = f->tower;
    json j = tower_json(tw);
    j["order"] = tw.field().order();
    j["characteristic"] = tw.field().characteristic();
    j["degree_over_prime"] = tw.field().degree();
    j["degree_over_base"] = tw.degree();
    j["primitive"] = tw.field().primitive();
    json subs = json::array();
    for (unsigned d = 1; d <= tw.degree(); ++d)
      if (tw.degree() % d == 0) subs.push_back(d);
    j["subfield_degrees"] = std::move(subs);
    *json_out = dup_string(j.dump());
  });
}

void msd_field_free(msd_field* f) { delete f; }

msd_status msd_family_from_json(const char* text, msd_family** out) {
  return guarded([&] {
    if (!text || !out) fail_invalid("null argument");
    const json j = json::parse(text);
    auto fam = family_from_json(j);
    *out = new msd_family{std::move(fam), family_params_json(j)};
  });
}

msd_status msd_family_to_json(const msd_family* f, char** json_out) {
  return guarded([&] {
    if (!f || !json_out) fail_invalid("null argument");
    const json* params = f->params ? &*f->params : nullptr;
    *json_out = dup_string(family_json(f->family, params).dump());
  });
}

void msd_family_free(msd_family* f) { delete f; }

msd_status msd_construct_monomial(const char* params_json, msd_family** out) {
  return guarded([&] {
    if (!params_json || !out) fail_invalid("null argument");
    const auto P = monomial_params_from_json(json::parse(params_json));
    *out = new msd_family{monomial_family(P), monomial_params_json(P)};
  });
}

msd_status msd_construct_orbit_code(const char* params_json, msd_family** out) {
  return guarded([&] {
    if (!params_json || !out) fail_invalid("null argument");
    const json j = json::parse(params_json);
    const std::uint64_t q = j.at("q").get<std::uint64_t>();
    const unsigned t = j.at("t").get<unsigned>();
    const unsigned s = j.value("s", 1u);
    std::optional<elt> w, b;
    if (j.contains("w")) w = j["w"].get<elt>();
    if (j.contains("b")) b = j["b"].get<elt>();
    const bool append = j.value("append_subfield", false);
    const OrbitCodeParams R = orbit_code_params(q, t, s, w, b);
    json params = orbit_code_params_json(R);
    params["append_subfield"] = append;
    params["monomial"] = monomial_params_json(orbit_code_monomial_params(R, append));
    *out = new msd_family{orbit_code_family(R, append), std::move(params)};
  });
}

msd_status msd_verify(const msd_family* f, const char* options_json, char** report_out) {
  return guarded([&] {
    if (!f || !report_out) fail_invalid("null argument");
    const json opt = parse_json(options_json);
    const std::string check = opt.value("check", "multi-sidon");
    const bool emit_witness = opt.value("emit_witness", false);
    const unsigned threads = opt.value("threads", 1u);
    json rep;
    if (check == "multi-sidon") {
      Verdict v = is_multi_sidon(f->family, threads);
      if (!emit_witness) v.witness.reset();
      rep = verdict_json(v);
    } else if (check == "sidon") {
      const unsigned idx = opt.value("index", 0u);
      if (idx >= f->family.r()) fail_invalid("subspace index out of range");
      const std::string route = opt.value("route", "orbit-intersection");
      Verdict v = is_sidon(f->family.subs[idx],
                           route == "definitional" ? SidonRoute::definitional
                                                   : SidonRoute::orbit_intersection);
      if (!emit_witness) v.witness.reset();
      rep = verdict_json(v);
    } else if (check == "weak") {
      Verdict v = is_weak_multi_sidon(f->family);
      if (!emit_witness) v.witness.reset();
      rep = verdict_json(v);
    } else if (check == "span-class") {
      rep = span_class_json(span_class(f->family));
    } else if (check == "poly-criterion") {
      std::optional<std::vector<elt>> etas;
      if (f->params && f->params->contains("xi"))
        etas = std::vector<elt>(f->family.r(), (*f->params)["xi"].get<elt>());
      const CanonicalForm C = canonical_form(f->family, etas ? &*etas : nullptr);
      Verdict v = poly_criterion(C);
      if (!emit_witness) v.witness.reset();
      rep = verdict_json(v);
    } else if (check == "canonical-form") {
      rep = canonical_form_json(canonical_form(f->family));
    } else {
      fail_invalid("unknown check: " + check);
    }
    *report_out = dup_string(rep.dump());
  });
}

msd_status msd_spectrum(const msd_family* f, const char* options_json, char** report_out) {
  return guarded([&] {
    if (!f || !report_out) fail_invalid("null argument");
    const json opt = parse_json(options_json);
    const std::uint64_t cap = opt.value("cap", std::uint64_t{43046721});  // 3^16
    json rep;
    if (opt.value("sidon_size", false)) {
      if (f->family.r() != 1) fail_invalid("sidon_size expects a single-subspace family");
      const std::uint64_t size = sidon_linearset_size(f->family.subs[0], cap);
      const std::uint64_t q = f->family.tw.q();
      const std::uint64_t qk = pow_u64(q, f->family.subs[0].dim());
      rep["sidon_linearset_size"] = size;
      rep["closed_form"] = (qk - 1) / (q - 1) * (qk - q) + q + 1;
    }
    const VecSubspace V = VecSubspace::product(f->family.subs);
    if (opt.value("heavy", false)) {
      rep["heavy"] = heavy_json(heavy_points_analysis(V, cap));
    } else if (!opt.value("sidon_size", false)) {
      rep["spectrum"] = spectrum_json(weight_spectrum(V, cap));
    }
    if (opt.value("hyperplane", false)) rep["hyperplane"] = hyperplane_json(hyperplane_weights(V, cap));
    *report_out = dup_string(rep.dump());
  });
}

msd_status msd_equivalence(const msd_family* a, const msd_family* b, const char* options_json,
                           char** report_out) {
  return guarded([&] {
    if (!a || !b || !report_out) fail_invalid("null argument");
    const json opt = parse_json(options_json);
    const std::string mode = opt.value("mode", "family");
    const bool emit_witness = opt.value("emit_witness", true);
    json rep;
    if (mode == "family" || mode == "code-linear" || mode == "code-semilinear") {
      if (mode == "family") {
        const auto res = family_equivalence(a->family, b->family, AutSet::all);
        switch (res.kind) {
          case EqResult::Kind::equivalent: rep["result"] = "equivalent"; break;
          case EqResult::Kind::inequivalent: rep["result"] = "inequivalent"; break;
          case EqResult::Kind::hypothesis_violation: rep["result"] = "hypothesis-violation"; break;
        }
        if (emit_witness && res.witness) rep["witness"] = eq_witness_json(*res.witness);
        if (emit_witness && res.hypothesis_witness)
          rep["hypothesis_witness"] = witness_json(*res.hypothesis_witness);
      } else {
        const auto w = orbit_match_search(a->family, b->family,
                                          mode == "code-linear" ? AutSet::q_powers : AutSet::all);
        rep["result"] = w ? "equivalent" : "inequivalent";
        if (emit_witness && w) rep["witness"] = eq_witness_json(*w);
      }
    } else if (mode == "monomial") {
      if (!a->params || !b->params) fail_invalid("monomial mode needs embedded construction params");
      const json pa = a->params->contains("monomial") ? (*a->params)["monomial"] : *a->params;
      const json pb = b->params->contains("monomial") ? (*b->params)["monomial"] : *b->params;
      const auto res = monomial_equivalence(monomial_params_from_json(pa),
                                            monomial_params_from_json(pb));
      rep["result"] = res.equivalent ? "equivalent" : "inequivalent";
      if (res.equivalent) {
        rep["clause"] = res.clause;
        rep["rho_exp"] = res.rho_exp;
        rep["sigma"] = res.sigma;
      }
    } else {
      fail_invalid("unknown equivalence mode: " + mode);
    }
    *report_out = dup_string(rep.dump());
  });
}

msd_status msd_projection_check(const char* family_json_text, char** report_out) {
  return guarded([&] {
    if (!family_json_text || !report_out) fail_invalid("null argument");
    const Family fam = family_from_json(json::parse(family_json_text));
    const auto rep = projection_form(fam.subs);
    json j{{"sum_is_identity", rep.sum_is_identity},
           {"idempotent", rep.idempotent},
           {"mutually_annihilating", rep.mutually_annihilating},
           {"images_match", rep.images_match},
           {"set_equality", rep.set_equality}};
    json polys = json::array();
    for (const auto& p : rep.polys) polys.push_back(p.q_coeffs());
    j["projection_polys"] = std::move(polys);
    *report_out = dup_string(j.dump());
  });
}

msd_status msd_code_build(const msd_family* f, uint32_t threads, msd_code** out) {
  return guarded([&] {
    if (!f || !out) fail_invalid("null argument");
    *out = new msd_code{build_code(f->family, threads ? threads : 1)};
  });
}

msd_status msd_code_from_json(const char* text, msd_code** out) {
  return guarded([&] {
    if (!text || !out) fail_invalid("null argument");
    *out = new msd_code{code_from_json(json::parse(text))};
  });
}

msd_status msd_code_to_json(const msd_code* c, int with_min_distance, uint32_t threads,
                            char** json_out) {
  return guarded([&] {
    if (!c || !json_out) fail_invalid("null argument");
    CyclicCode code = c->code;
    if (with_min_distance) min_distance(code, threads ? threads : 1);
    *json_out = dup_string(code_json(code, with_min_distance != 0).dump());
  });
}

msd_status msd_code_analyze(const msd_code* c, uint32_t threads, char** report_out) {
  return guarded([&] {
    if (!c || !report_out) fail_invalid("null argument");
    CyclicCode code = c->code;
    const unsigned d = min_distance(code, threads ? threads : 1);
    json j{{"size", code.size},
           {"t", code.t},
           {"orbit_sizes", code.orbit_sizes},
           {"min_distance", d}};
    *report_out = dup_string(j.dump());
  });
}

msd_status msd_code_simulate(const msd_code* c, const char* params_json, char** report_out) {
  return guarded([&] {
    if (!c || !params_json || !report_out) fail_invalid("null argument");
    const json j = json::parse(params_json);
    ChannelParams ch;
    ch.rho_dims = j.value("rho", 0u);
    ch.err_dims = j.value("e", 0u);
    if (!j.contains("seed")) fail_invalid("simulation needs an explicit seed");
    ch.seed = j["seed"].get<std::uint64_t>();
    const std::uint64_t trials = j.value("trials", std::uint64_t{100});
    const unsigned threads = j.value("threads", 1u);
    CyclicCode code = c->code;
    *report_out = dup_string(sim_json(simulate(code, ch, trials, threads)).dump());
  });
}

void msd_code_free(msd_code* c) { delete c; }

msd_status msd_run_suite(const char* options_json, char** report_out) {
  return guarded([&] {
    if (!options_json || !report_out) fail_invalid("null argument");
    const json opt = json::parse(options_json);
    const std::string suite = opt.at("suite").get<std::string>();
    const std::uint64_t seed = opt.value("seed", std::uint64_t{1});
    json rep;
    if (suite == "kernel-bound") {
      rep = kernel_bound_json(kernel_bound_suite(opt.value("samples", std::uint64_t{1000}), seed));
    } else if (suite == "three-way") {
      rep = three_way_json(three_way_suite(opt.value("samples", std::uint64_t{200}), seed));
    } else if (suite == "projection") {
      rep = projection_suite_json(projection_suite(opt.value("samples", std::uint64_t{50}), seed));
    } else if (suite == "equivalence-roundtrip") {
      rep = roundtrip_json(equivalence_roundtrip_suite(opt.value("samples", std::uint64_t{100}), seed));
    } else if (suite == "weak-search") {
      rep = weak_search_json(weak_search(opt.value("q", std::uint64_t{3}), opt.value("n", 4u),
                                         opt.value("samples", std::uint64_t{200}), seed,
                                         opt.value("r", 2u)));
    } else if (suite == "monomial-grid") {
      rep = monomial_grid_json(monomial_grid_suite(opt.value("q_max", 5u), opt.value("t_max", 5u)));
    } else {
      fail_invalid("unknown suite: " + suite);
    }
    rep["suite"] = suite;
    rep["seed"] = seed;
    *report_out = dup_string(rep.dump());
  });
}

}  // extern "C"
