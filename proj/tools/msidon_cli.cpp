// Command-line front end over the C API. Reports are JSON by default and
// carry the fully resolved run configuration for provenance; byte-identical
// inputs and seeds give byte-identical reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "msidon.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
  std::string subcommand;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  json extra = json::object();

  json to_json() const {
    json j{{"subcommand", subcommand}, {"version", MSD_VERSION}, {"format", format},
           {"threads", threads}};
    if (!out.empty()) j["out"] = out;
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

int status_exit(msd_status s) {
  switch (s) {
    case MSD_OK: return kExitOk;
    case MSD_ERR_CAP: return kExitCap;
    case MSD_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

int fail_status(msd_status s) {
  std::cerr << "error: " << msd_last_error() << "\n";
  return status_exit(s);
}

std::string take_string(char* owned) {
  std::string s(owned ? owned : "");
  msd_string_free(owned);
  return s;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

int emit(const RunConfig& cfg, const json& report) {
  json full{{"config", cfg.to_json()}, {"report", report}};
  std::string text;
  if (cfg.format == "json") {
    text = full.dump(2) + "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(full, "", rows);
    std::size_t width = 0;
    for (auto& [k, v] : rows) width = std::max(width, k.size());
    std::string sep = cfg.format == "csv" ? "," : ": ";
    for (auto& [k, v] : rows) {
      if (cfg.format == "csv") {
        text += k + sep + v + "\n";
      } else {
        text += k + std::string(width - k.size(), ' ') + sep + v + "\n";
      }
    }
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return kExitOk;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

// family files and code manifests share the loader; a manifest's generators
// become the family members
int load_family(const std::string& path, msd_family** out) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitUsage;
  }
  json j;
  try {
    j = json::parse(*text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (j.contains("generators") && !j.contains("subspaces")) {
    j["subspaces"] = j["generators"];
    j.erase("generators");
    j.erase("size");
    j.erase("orbit_sizes");
    j.erase("min_distance");
    j.erase("t");
  }
  const msd_status s = msd_family_from_json(j.dump().c_str(), out);
  if (s != MSD_OK) return fail_status(s);
  return kExitOk;
}

// key=value positionals of the construct subcommand
json parse_kv(const std::vector<std::string>& kvs) {
  json j = json::object();
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "mus") {
      json arr = json::array();
      std::string tok;
      for (char c : val + ",") {
        if (c == ',') {
          if (!tok.empty()) arr.push_back(std::stoull(tok));
          tok.clear();
        } else {
          tok.push_back(c);
        }
      }
      j[key] = arr;
    } else {
      j[key] = std::stoull(val);
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-orbit Sidon-space toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options are accepted after the subcommand too

  RunConfig cfg;
  app.add_option("--out", cfg.out, "write the report to a file instead of stdout");
  app.add_option("--format", cfg.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--threads", cfg.threads, "worker threads for the heavy scans");

  // field
  auto* field_cmd = app.add_subcommand("field", "construct and describe a finite field");
  std::string field_spec, field_modulus;
  std::uint64_t field_p = 0, field_q = 0;
  unsigned field_m = 0;
  field_cmd->add_option("--spec", field_spec, "field spec gf(p^m;c0,...,1)");
  field_cmd->add_option("--p", field_p, "characteristic");
  field_cmd->add_option("--m", field_m, "extension degree over the prime field");
  field_cmd->add_option("--modulus", field_modulus, "ascending modulus coefficients, comma-separated");
  field_cmd->add_option("--q", field_q, "base subfield order (default: the prime field)");

  // construct
  auto* con_cmd = app.add_subcommand("construct", "build subspace families");
  bool con_monomial = false, con_orbit = false, con_append = false;
  std::string con_params;
  std::vector<std::string> con_kv;
  con_cmd->add_flag("--monomial", con_monomial, "monomial family");
  con_cmd->add_flag("--orbit-code", con_orbit, "tau-orbit code family from a primitive element");
  con_cmd->add_flag("--append-subfield", con_append, "append F_(q^t) as a last factor");
  con_cmd->add_option("--params", con_params, "params JSON file");
  con_cmd->add_option("args", con_kv, "construction parameters as key=value");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "verification and property suites");
  std::string ver_family, ver_route = "orbit-intersection", ver_suite;
  bool ver_multi = false, ver_sidon = false, ver_weak = false, ver_span = false;
  bool ver_poly = false, ver_canon = false, ver_witness = false;
  unsigned ver_index = 0, ver_n = 4, ver_r = 2;
  std::uint64_t ver_samples = 0, ver_seed = 1, ver_q = 3;
  ver_cmd->add_option("family", ver_family, "family JSON file");
  ver_cmd->add_flag("--multi-sidon", ver_multi, "multi-Sidon check (default)");
  ver_cmd->add_flag("--sidon", ver_sidon, "single-subspace Sidon check");
  ver_cmd->add_option("--route", ver_route, "orbit-intersection | definitional")
      ->check(CLI::IsMember({"orbit-intersection", "definitional"}));
  ver_cmd->add_option("--index", ver_index, "subspace index for --sidon");
  ver_cmd->add_flag("--weak", ver_weak, "weak multi-Sidon check");
  ver_cmd->add_flag("--span-class", ver_span, "minimum/maximum span classification");
  ver_cmd->add_flag("--poly-criterion", ver_poly, "canonical-form polynomial criterion");
  ver_cmd->add_flag("--canonical-form", ver_canon, "emit the canonical form");
  ver_cmd->add_flag("--emit-witness", ver_witness, "include certificates in the report");
  ver_cmd->add_option("--suite", ver_suite,
                      "kernel-bound | three-way | projection | equivalence-roundtrip | "
                      "weak-search | monomial-grid");
  ver_cmd->add_option("--samples", ver_samples, "suite sample count");
  ver_cmd->add_option("--seed", ver_seed, "suite seed");
  ver_cmd->add_option("--q", ver_q, "suite field parameter q");
  ver_cmd->add_option("--n", ver_n, "suite extension degree");
  ver_cmd->add_option("--r", ver_r, "suite family size");

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "linear-set weight analysis");
  std::string spec_family;
  bool spec_heavy = false, spec_hyper = false, spec_sidon_size = false;
  std::uint64_t spec_cap = 43046721;  // 3^16
  spec_cmd->add_option("family", spec_family, "family JSON file")->required();
  spec_cmd->add_flag("--heavy", spec_heavy, "list points of weight at least two");
  spec_cmd->add_flag("--hyperplane", spec_hyper, "dual three-weight hyperplane counts");
  spec_cmd->add_flag("--sidon-size", spec_sidon_size, "|L_(U x U)| against the closed form");
  spec_cmd->add_option("--cap", spec_cap, "vector enumeration cap");

  // distance
  auto* dist_cmd = app.add_subcommand("distance", "code size and minimum distance");
  std::string dist_family, dist_code, dist_emit;
  dist_cmd->add_option("--family", dist_family, "family JSON file (generators)");
  dist_cmd->add_option("--code", dist_code, "code manifest JSON file");
  dist_cmd->add_option("--emit-code", dist_emit, "write the code manifest here");

  // equiv
  auto* eq_cmd = app.add_subcommand("equiv", "equivalence of families and codes");
  std::string eq_a, eq_b, eq_mode = "family";
  bool eq_witness = false;
  eq_cmd->add_option("a", eq_a, "first family/code JSON file")->required();
  eq_cmd->add_option("b", eq_b, "second family/code JSON file")->required();
  eq_cmd->add_option("--mode", eq_mode, "family | monomial | linear | semilinear")
      ->check(CLI::IsMember({"family", "monomial", "linear", "semilinear"}));
  eq_cmd->add_flag("--emit-witness", eq_witness, "include the witness in the report");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "operator-channel decoding run");
  std::string sim_code, sim_family;
  unsigned sim_rho = 0, sim_e = 0;
  std::uint64_t sim_trials = 100, sim_seed = 0;
  bool sim_seed_set = false;
  sim_cmd->add_option("--code", sim_code, "code manifest JSON file");
  sim_cmd->add_option("--family", sim_family, "family JSON file (generators)");
  sim_cmd->add_option("--rho", sim_rho, "erased dimensions per transmission");
  sim_cmd->add_option("--e", sim_e, "inserted error dimensions per transmission");
  sim_cmd->add_option("--trials", sim_trials, "number of seeded trials");
  sim_cmd->add_option("--seed", sim_seed, "base seed (required)")
      ->each([&](const std::string&) { sim_seed_set = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (*field_cmd) {
      cfg.subcommand = "field";
      msd_field* f = nullptr;
      msd_status s;
      if (!field_spec.empty()) {
        cfg.extra["spec"] = field_spec;
        s = msd_field_create(field_spec.c_str(), field_q, &f);
      } else if (field_p != 0 && field_m != 0) {
        cfg.extra["p"] = field_p;
        cfg.extra["m"] = field_m;
        if (!field_modulus.empty()) cfg.extra["modulus"] = field_modulus;
        s = msd_field_make(field_p, field_m, field_modulus.empty() ? nullptr : field_modulus.c_str(),
                           field_q, &f);
      } else {
        std::cerr << "error: field needs --spec or --p/--m\n";
        return kExitUsage;
      }
      if (field_q) cfg.extra["q"] = field_q;
      if (s != MSD_OK) return fail_status(s);
      char* out = nullptr;
      s = msd_field_describe(f, &out);
      msd_field_free(f);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, json::parse(take_string(out)));
    }

    if (*con_cmd) {
      cfg.subcommand = "construct";
      json params;
      if (!con_params.empty()) {
        auto text = read_file(con_params);
        if (!text) {
          std::cerr << "error: cannot read " << con_params << "\n";
          return kExitUsage;
        }
        params = json::parse(*text);
      } else {
        params = parse_kv(con_kv);
      }
      if (con_append) params["append_subfield"] = true;
      if (!con_monomial && !con_orbit) {
        const std::string kind = params.value("kind", "monomial");
        con_orbit = kind == "orbit-code";
      }
      cfg.extra["params"] = params;
      cfg.extra["kind"] = con_orbit ? "orbit-code" : "monomial";
      msd_family* fam = nullptr;
      const msd_status s = con_orbit ? msd_construct_orbit_code(params.dump().c_str(), &fam)
                                     : msd_construct_monomial(params.dump().c_str(), &fam);
      if (s != MSD_OK) return fail_status(s);
      char* out = nullptr;
      const msd_status s2 = msd_family_to_json(fam, &out);
      msd_family_free(fam);
      if (s2 != MSD_OK) return fail_status(s2);
      const json family = json::parse(take_string(out));
      // --out receives the bare family artifact, consumable by the other
      // subcommands; the wrapped report goes to stdout
      if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
          std::cerr << "error: cannot write " << cfg.out << "\n";
          return kExitUsage;
        }
        f << family.dump(2) << "\n";
        cfg.out.clear();
      }
      return emit(cfg, family);
    }

    if (*ver_cmd) {
      cfg.subcommand = "verify";
      if (!ver_suite.empty()) {
        json opt{{"suite", ver_suite}, {"seed", ver_seed}, {"q", ver_q}, {"n", ver_n}, {"r", ver_r}};
        if (ver_samples) opt["samples"] = ver_samples;
        cfg.extra = opt;
        char* out = nullptr;
        const msd_status s = msd_run_suite(opt.dump().c_str(), &out);
        if (s != MSD_OK) return fail_status(s);
        return emit(cfg, json::parse(take_string(out)));
      }
      if (ver_family.empty()) {
        std::cerr << "error: verify needs a family file or --suite\n";
        return kExitUsage;
      }
      std::string check = "multi-sidon";
      if (ver_sidon) check = "sidon";
      if (ver_weak) check = "weak";
      if (ver_span) check = "span-class";
      if (ver_poly) check = "poly-criterion";
      if (ver_canon) check = "canonical-form";
      (void)ver_multi;
      json opt{{"check", check}, {"emit_witness", ver_witness}, {"threads", cfg.threads}};
      if (check == "sidon") {
        opt["route"] = ver_route;
        opt["index"] = ver_index;
      }
      cfg.extra = opt;
      cfg.extra["family"] = ver_family;
      msd_family* fam = nullptr;
      if (int rc = load_family(ver_family, &fam); rc != kExitOk) return rc;
      char* out = nullptr;
      const msd_status s = msd_verify(fam, opt.dump().c_str(), &out);
      msd_family_free(fam);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, json::parse(take_string(out)));
    }

    if (*spec_cmd) {
      cfg.subcommand = "spectrum";
      json opt{{"heavy", spec_heavy},
               {"hyperplane", spec_hyper},
               {"sidon_size", spec_sidon_size},
               {"cap", spec_cap}};
      cfg.extra = opt;
      cfg.extra["family"] = spec_family;
      msd_family* fam = nullptr;
      if (int rc = load_family(spec_family, &fam); rc != kExitOk) return rc;
      char* out = nullptr;
      const msd_status s = msd_spectrum(fam, opt.dump().c_str(), &out);
      msd_family_free(fam);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, json::parse(take_string(out)));
    }

    if (*dist_cmd) {
      cfg.subcommand = "distance";
      msd_code* code = nullptr;
      if (!dist_code.empty()) {
        auto text = read_file(dist_code);
        if (!text) {
          std::cerr << "error: cannot read " << dist_code << "\n";
          return kExitUsage;
        }
        cfg.extra["code"] = dist_code;
        const msd_status s = msd_code_from_json(text->c_str(), &code);
        if (s != MSD_OK) return fail_status(s);
      } else if (!dist_family.empty()) {
        cfg.extra["family"] = dist_family;
        msd_family* fam = nullptr;
        if (int rc = load_family(dist_family, &fam); rc != kExitOk) return rc;
        const msd_status s = msd_code_build(fam, cfg.threads, &code);
        msd_family_free(fam);
        if (s != MSD_OK) return fail_status(s);
      } else {
        std::cerr << "error: distance needs --family or --code\n";
        return kExitUsage;
      }
      char* out = nullptr;
      msd_status s = msd_code_analyze(code, cfg.threads, &out);
      if (s != MSD_OK) {
        msd_code_free(code);
        return fail_status(s);
      }
      json rep = json::parse(take_string(out));
      if (!dist_emit.empty()) {
        char* manifest = nullptr;
        s = msd_code_to_json(code, 1, cfg.threads, &manifest);
        if (s == MSD_OK) {
          std::ofstream f(dist_emit, std::ios::binary);
          f << json::parse(take_string(manifest)).dump(2) << "\n";
          cfg.extra["emit_code"] = dist_emit;
        }
      }
      msd_code_free(code);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, rep);
    }

    if (*eq_cmd) {
      cfg.subcommand = "equiv";
      std::string mode = eq_mode;
      if (mode == "linear") mode = "code-linear";
      if (mode == "semilinear") mode = "code-semilinear";
      json opt{{"mode", mode}, {"emit_witness", eq_witness}};
      cfg.extra = opt;
      cfg.extra["a"] = eq_a;
      cfg.extra["b"] = eq_b;
      msd_family *fa = nullptr, *fb = nullptr;
      if (int rc = load_family(eq_a, &fa); rc != kExitOk) return rc;
      if (int rc = load_family(eq_b, &fb); rc != kExitOk) {
        msd_family_free(fa);
        return rc;
      }
      char* out = nullptr;
      const msd_status s = msd_equivalence(fa, fb, opt.dump().c_str(), &out);
      msd_family_free(fa);
      msd_family_free(fb);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, json::parse(take_string(out)));
    }

    if (*sim_cmd) {
      cfg.subcommand = "simulate";
      if (!sim_seed_set) {
        std::cerr << "error: simulate needs an explicit --seed\n";
        return kExitUsage;
      }
      msd_code* code = nullptr;
      if (!sim_code.empty()) {
        auto text = read_file(sim_code);
        if (!text) {
          std::cerr << "error: cannot read " << sim_code << "\n";
          return kExitUsage;
        }
        cfg.extra["code"] = sim_code;
        const msd_status s = msd_code_from_json(text->c_str(), &code);
        if (s != MSD_OK) return fail_status(s);
      } else if (!sim_family.empty()) {
        cfg.extra["family"] = sim_family;
        msd_family* fam = nullptr;
        if (int rc = load_family(sim_family, &fam); rc != kExitOk) return rc;
        const msd_status s = msd_code_build(fam, cfg.threads, &code);
        msd_family_free(fam);
        if (s != MSD_OK) return fail_status(s);
      } else {
        std::cerr << "error: simulate needs --family or --code\n";
        return kExitUsage;
      }
      json params{{"rho", sim_rho}, {"e", sim_e},      {"trials", sim_trials},
                  {"seed", sim_seed}, {"threads", cfg.threads}};
      for (auto& [k, v] : params.items()) cfg.extra[k] = v;
      char* out = nullptr;
      const msd_status s = msd_code_simulate(code, params.dump().c_str(), &out);
      msd_code_free(code);
      if (s != MSD_OK) return fail_status(s);
      return emit(cfg, json::parse(take_string(out)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
