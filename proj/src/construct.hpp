#pragma once

#include <optional>

#include "sidon.hpp"

namespace msidon {

// Parameters of the monomial family {W_{mu_i x^(q^s), xi}}, optionally
// extended by the subfield F_{q^t} as a last factor.
struct MonomialParams {
  Tower tw;  // ambient F_{q^n}, n = 2t
  unsigned t = 0;
  unsigned s = 1;
  elt xi = 0;
  std::vector<elt> mus;
  bool append_subfield = false;
  unsigned r() const { return static_cast<unsigned>(mus.size()) + (append_subfield ? 1 : 0); }
};

// Builds the ambient field deterministically from (q, t) and fills mus/xi by
// deterministic ascending search when not supplied. q may be any prime power.
MonomialParams monomial_params(std::uint64_t q, unsigned t, unsigned s, unsigned r,
                               bool append_subfield = false,
                               std::optional<std::vector<elt>> mus = std::nullopt,
                               std::optional<elt> xi = std::nullopt);
// Same, but over an already constructed ambient tower.
MonomialParams monomial_params(const Tower& tw, unsigned s, unsigned r, bool append_subfield,
                               std::optional<std::vector<elt>> mus, std::optional<elt> xi);

// Validates all parameter invariants; violations name the failing condition
// and the offending pair.
void validate_monomial_params(const MonomialParams& P);

// the subspace {u + xi mu u^(q^s) : u in F_{q^t}}
Subspace monomial_subspace(const Tower& tw, unsigned t, unsigned s, elt mu, elt xi);

Family monomial_family(const MonomialParams& P);

// Data of the tau-orbit code family: primitive w, the irreducible
// x^2 + b x + w, its root gamma_0, and gamma_i = w^i gamma_0.
struct OrbitCodeParams {
  Tower tw;
  unsigned t = 0;
  unsigned s = 1;
  elt w = 0;
  elt b = 0;
  elt gamma0 = 0;
  unsigned tau = 0;
  std::vector<elt> gammas;
};

OrbitCodeParams orbit_code_params(std::uint64_t q, unsigned t, unsigned s,
                            std::optional<elt> w = std::nullopt,
                            std::optional<elt> b = std::nullopt);

// the derived monomial parameters mu_i = w^i, xi = gamma_0
MonomialParams orbit_code_monomial_params(const OrbitCodeParams& R, bool append_subfield = false);
Family orbit_code_family(const OrbitCodeParams& R, bool append_subfield = false);

struct MonomialEqResult {
  bool equivalent = false;
  unsigned clause = 0;  // 1: s = s' mod t, 2: s = -s' mod t
  unsigned rho_exp = 0;
  std::vector<unsigned> sigma;  // matching of the mu lists
};

// Direct-condition equivalence decision for two monomial families over the
// same ambient field (subfield-extended families compare their monomial
// parts). Must agree with family_equivalence on the built families.
MonomialEqResult monomial_equivalence(const MonomialParams& P, const MonomialParams& Q);

struct MixedCheckReport {
  bool inequivalent = true;
  unsigned subfield_stabilizer_degree = 0;  // t: the obstruction
  std::vector<unsigned> monomial_stabilizers;
  bool cross_checked = false;  // generic family_equivalence agreed
};

// A pure monomial family is never equivalent to a subfield-extended one; the
// subfield factor has a large scalar stabilizer while every monomial factor
// has a trivial one.
MixedCheckReport mixed_inequivalence_check(const MonomialParams& pure,
                                           const MonomialParams& with_subfield);

}  // namespace msidon
