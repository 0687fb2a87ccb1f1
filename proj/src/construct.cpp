#include "construct.hpp"

#include <algorithm>
#include <functional>

namespace msidon {

namespace {

std::string pair_str(unsigned i, unsigned j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// N_{q^t/q}(mu_i mu_j xi^(q^t + 1)) != 1, the product-norm condition
bool product_norm_ok(const Tower& sub, const Field& F, elt mi, elt mj, elt xi_norm) {
  return sub.norm_to(F.mul(F.mul(mi, mj), xi_norm), 1) != 1;
}

void validate_monomial_shape(const Tower& tw, unsigned t, unsigned s, unsigned mu_count,
                             bool append_subfield) {
  const std::uint64_t q = tw.q();
  if (t < 2) fail_invalid("monomial construction needs t >= 2");
  if (tw.degree() != 2 * t) fail_invalid("ambient degree must be 2t");
  if (gcd_u(s, t) != 1) fail_invalid("gcd(s,t) != 1");
  if (mu_count == 0) fail_invalid("at least one mu is required");
  if (q == 2 && mu_count >= 2) fail_invalid("q = 2 admits no family with r >= 2");
  if (mu_count > q - 1)
    fail_invalid("r exceeds the bound: " +
                 std::to_string(mu_count + (append_subfield ? 1 : 0)) + " > " +
                 std::to_string(q - 1 + (append_subfield ? 1 : 0)));
}

}  // namespace

Subspace monomial_subspace(const Tower& tw, unsigned t, unsigned s, elt mu, elt xi) {
  const Field& F = tw.field();
  std::vector<elt> gens;
  const Tower sub = tw.subtower(t);
  for (elt b : Subspace::subfield(tw, t).basis_elements())
    gens.push_back(F.add(b, F.mul(F.mul(xi, mu), sub.frob_q(b, s))));
  return Subspace::span_elements(tw, gens);
}

MonomialParams monomial_params(const Tower& tw, unsigned s, unsigned r, bool append_subfield,
                               std::optional<std::vector<elt>> mus, std::optional<elt> xi) {
  const unsigned n = tw.degree();
  if (n % 2 != 0) fail_invalid("monomial construction needs even extension degree");
  MonomialParams P;
  P.tw = tw;
  P.t = n / 2;
  P.s = s;
  P.append_subfield = append_subfield;

  const Field& F = tw.field();
  const Tower sub = tw.subtower(P.t);
  const unsigned mu_count = append_subfield ? (r > 0 ? r - 1 : 0) : r;
  validate_monomial_shape(tw, P.t, P.s, mus ? static_cast<unsigned>(mus->size()) : mu_count,
                          append_subfield);

  if (mus) {
    if (!xi) {
      for (elt x = 0; x < F.order(); ++x) {
        if (!tw.in_subfield(x, P.t)) {
          P.xi = x;
          break;
        }
      }
    } else {
      P.xi = *xi;
    }
    P.mus = std::move(*mus);
    validate_monomial_params(P);
    return P;
  }

  // The pair conditions constrain the mus only through their norms, living in
  // the cyclic group of order q - 1. Checking satisfiability there first makes
  // impossible parameter sets fail immediately instead of after an exhaustive
  // field scan.
  {
    const std::uint64_t g = tw.q() - 1;
    bool feasible = false;
    std::vector<std::uint64_t> n(mu_count);
    for (std::uint64_t z = 0; z < g && !feasible; ++z) {
      std::function<bool(unsigned)> fill = [&](unsigned at) -> bool {
        if (at == mu_count) {
          for (unsigned i = 0; i < mu_count; ++i) {
            if (P.t >= 3 && (z + 2 * n[i]) % g == 0) return false;
            for (unsigned j = i + 1; j < mu_count; ++j) {
              if (n[i] == n[j]) return false;
              if ((z + n[i] + n[j]) % g == 0) return false;
            }
          }
          return true;
        }
        for (std::uint64_t v = 0; v < g; ++v) {
          n[at] = v;
          if (fill(at + 1)) return true;
        }
        return false;
      };
      if (fill(0)) feasible = true;
    }
    if (!feasible)
      fail_invalid("the norm conditions are unsatisfiable for q=" + std::to_string(tw.q()) +
                   " t=" + std::to_string(P.t) + " r=" + std::to_string(r) +
                   "; no such family exists");
  }

  std::vector<elt> pool;
  for (elt x : Subspace::subfield(tw, P.t).elements())
    if (x != 0) pool.push_back(x);
  std::sort(pool.begin(), pool.end());

  std::vector<elt> xi_candidates;
  if (xi) {
    xi_candidates.push_back(*xi);
  } else {
    for (elt x = 0; x < F.order(); ++x)
      if (!tw.in_subfield(x, P.t)) xi_candidates.push_back(x);
  }

  // Deterministic search for the lexicographically smallest admissible tuple.
  // The stated pair conditions do not always make the family multi-Sidon, so
  // each complete candidate is verified before it is accepted.
  for (elt xi_cand : xi_candidates) {
    P.xi = xi_cand;
    const elt xi_norm = F.pow(P.xi, pow_u64(tw.q(), P.t) + 1);  // xi^(q^t + 1)
    std::vector<elt> chosen;
    std::vector<std::size_t> idx;
    std::size_t start = 0;
    auto admissible = [&](elt cand) {
      // for t >= 3 the product-norm condition is needed for the diagonal pair
      // as well, else the factor W_{mu, xi} itself is not a Sidon space
      if (P.t >= 3 && !product_norm_ok(sub, F, cand, cand, xi_norm)) return false;
      for (elt m : chosen) {
        if (sub.norm_to(m, 1) == sub.norm_to(cand, 1)) return false;
        if (!product_norm_ok(sub, F, m, cand, xi_norm)) return false;
      }
      return true;
    };
    auto backtrack = [&]() {
      if (idx.empty()) return false;
      start = idx.back() + 1;
      idx.pop_back();
      chosen.pop_back();
      return true;
    };
    while (true) {
      if (chosen.size() == mu_count) {
        P.mus = chosen;
        Family fam;
        fam.tw = tw;
        for (elt mu : P.mus) fam.subs.push_back(monomial_subspace(tw, P.t, P.s, mu, P.xi));
        if (is_multi_sidon(fam).result) {
          validate_monomial_params(P);
          return P;
        }
        if (!backtrack()) break;
        continue;
      }
      std::size_t pick = pool.size();
      for (std::size_t c = start; c < pool.size(); ++c) {
        if (admissible(pool[c])) {
          pick = c;
          break;
        }
      }
      if (pick == pool.size()) {
        if (!backtrack()) break;
        continue;
      }
      chosen.push_back(pool[pick]);
      idx.push_back(pick);
      start = pick + 1;
    }
  }
  fail_invalid("no admissible mu tuple yields a verified family for q=" + std::to_string(tw.q()) +
               " t=" + std::to_string(P.t) + " s=" + std::to_string(P.s) + " r=" + std::to_string(r));
}

MonomialParams monomial_params(std::uint64_t q, unsigned t, unsigned s, unsigned r,
                               bool append_subfield, std::optional<std::vector<elt>> mus,
                               std::optional<elt> xi) {
  auto [p, e] = factor_prime_power(q);
  auto F = Field::make(p, e * 2 * t);
  Tower tw(F, e);
  return monomial_params(tw, s, r, append_subfield, std::move(mus), std::move(xi));
}

void validate_monomial_params(const MonomialParams& P) {
  const Tower& tw = P.tw;
  const Field& F = tw.field();
  const std::uint64_t q = tw.q();
  const unsigned t = P.t;
  const unsigned mu_count = static_cast<unsigned>(P.mus.size());
  validate_monomial_shape(tw, t, P.s, mu_count, P.append_subfield);
  if (tw.in_subfield(P.xi, t)) fail_invalid("xi lies in F_(q^t)");
  const Tower sub = tw.subtower(t);
  const elt xi_norm = F.pow(P.xi, pow_u64(q, t) + 1);
  for (unsigned i = 0; i < mu_count; ++i) {
    if (P.mus[i] == 0 || !tw.in_subfield(P.mus[i], t))
      fail_invalid("mu_" + std::to_string(i) + " must be a nonzero element of F_(q^t)");
    for (unsigned j = i + 1; j < mu_count; ++j) {
      if (sub.norm_to(P.mus[i], 1) == sub.norm_to(P.mus[j], 1))
        fail_invalid("norm-distinctness violated for pair " + pair_str(i, j));
      if (!product_norm_ok(sub, F, P.mus[i], P.mus[j], xi_norm))
        fail_invalid("product-norm condition violated for pair " + pair_str(i, j));
    }
  }
}

Family monomial_family(const MonomialParams& P) {
  validate_monomial_params(P);
  std::vector<Subspace> subs;
  for (elt mu : P.mus) subs.push_back(monomial_subspace(P.tw, P.t, P.s, mu, P.xi));
  if (P.append_subfield) subs.push_back(Subspace::subfield(P.tw, P.t));
  return make_family(P.tw, std::move(subs));
}

OrbitCodeParams orbit_code_params(std::uint64_t q, unsigned t, unsigned s, std::optional<elt> w_opt,
                            std::optional<elt> b_opt) {
  if (q < 3) fail_invalid("the orbit-code construction needs q >= 3");
  if (gcd_u(s, t) != 1) fail_invalid("gcd(s,t) != 1");
  auto [p, e] = factor_prime_power(q);
  auto F = Field::make(p, e * 2 * t);
  Tower tw(F, e);
  const Tower sub = tw.subtower(t);

  OrbitCodeParams R;
  R.tw = tw;
  R.t = t;
  R.s = s;
  R.tau = static_cast<unsigned>((q - 1) / 2);

  const std::uint64_t qt = pow_u64(q, t);
  auto subfield_els = Subspace::subfield(tw, t).elements();
  std::sort(subfield_els.begin(), subfield_els.end());

  // w: smallest primitive element of F_{q^t}; a primitive element never is a
  // (q^s - 1)-th power when q > 2, which is asserted rather than assumed
  if (w_opt) {
    R.w = *w_opt;
    if (!tw.in_subfield(R.w, t) || R.w == 0 || F->mul_order(R.w) != qt - 1)
      fail_invalid("supplied w is not a primitive element of F_(q^t)");
  } else {
    for (elt cand : subfield_els) {
      if (cand == 0) continue;
      if (F->mul_order(cand) == qt - 1) {
        R.w = cand;
        break;
      }
    }
    if (R.w == 0) fail_internal("no primitive element found in F_(q^t)");
  }
  // the (q^s - 1)-power image has index gcd(q^s - 1, q^t - 1) = q - 1 in
  // F_{q^t}^*, so membership is a single power condition
  if (F->pow(R.w, (qt - 1) / (q - 1)) == 1)
    fail_invalid("w is a (q^s - 1)-th power in F_(q^t)");

  // b: smallest making x^2 + b x + w irreducible over F_{q^t}
  auto irreducible_with = [&](elt b) {
    for (elt y : subfield_els) {
      const elt val = F->add(F->add(F->mul(y, y), F->mul(b, y)), R.w);
      if (val == 0) return false;
    }
    return true;
  };
  if (b_opt) {
    R.b = *b_opt;
    if (!tw.in_subfield(R.b, t)) fail_invalid("supplied b lies outside F_(q^t)");
    if (!irreducible_with(R.b)) fail_invalid("x^2 + b x + w is reducible for the supplied b");
  } else {
    bool found = false;
    for (elt cand : subfield_els) {
      if (irreducible_with(cand)) {
        R.b = cand;
        found = true;
        break;
      }
    }
    if (!found) fail_invalid("no b gives an irreducible quadratic");
  }

  // gamma_0: smallest root of x^2 + b x + w in F_{q^n}
  bool root_found = false;
  for (elt g = 0; g < F->order(); ++g) {
    if (F->add(F->add(F->mul(g, g), F->mul(R.b, g)), R.w) == 0) {
      R.gamma0 = g;
      root_found = true;
      break;
    }
  }
  if (!root_found) fail_internal("irreducible quadratic has no root in the quadratic extension");
  if (F->pow(R.gamma0, qt + 1) != R.w) fail_internal("gamma0^(q^t+1) != w");

  R.gammas.resize(R.tau);
  for (unsigned i = 0; i < R.tau; ++i) R.gammas[i] = F->mul(F->pow(R.w, i), R.gamma0);
  return R;
}

MonomialParams orbit_code_monomial_params(const OrbitCodeParams& R, bool append_subfield) {
  MonomialParams P;
  P.tw = R.tw;
  P.t = R.t;
  P.s = R.s;
  P.xi = R.gamma0;
  P.append_subfield = append_subfield;
  const Field& F = R.tw.field();
  for (unsigned i = 0; i < R.tau; ++i) P.mus.push_back(F.pow(R.w, i));
  validate_monomial_params(P);
  return P;
}

Family orbit_code_family(const OrbitCodeParams& R, bool append_subfield) {
  return monomial_family(orbit_code_monomial_params(R, append_subfield));
}

MonomialEqResult monomial_equivalence(const MonomialParams& P, const MonomialParams& Q) {
  validate_monomial_params(P);
  validate_monomial_params(Q);
  if (!P.tw.same_structure(Q.tw)) fail_invalid("monomial equivalence needs a common ambient field");
  MonomialEqResult res;
  if (P.append_subfield != Q.append_subfield) return res;  // mixed case: always inequivalent
  if (P.mus.size() != Q.mus.size()) return res;

  const Tower& tw = P.tw;
  const Field& F = tw.field();
  const unsigned m = F.degree();
  const unsigned t = P.t;
  const Tower sub = tw.subtower(t);
  const unsigned r = static_cast<unsigned>(P.mus.size());
  const elt xi = P.xi, eta = Q.xi;

  // xi^2 = a xi + b
  elt a, b;
  {
    // split over the basis (1, xi) of F_{q^n} / F_{q^t}
    Mat A(tw.degree(), Row(2 * t, 0));
    const auto sf = Subspace::subfield(tw, t).basis_elements();
    for (unsigned c = 0; c < t; ++c) {
      auto col0 = tw.coords(sf[c]);
      auto col1 = tw.coords(F.mul(xi, sf[c]));
      for (unsigned rr = 0; rr < tw.degree(); ++rr) {
        A[rr][c] = col0[rr];
        A[rr][t + c] = col1[rr];
      }
    }
    auto sol = solve_linear(F, A, tw.coords(F.mul(xi, xi)));
    if (!sol) fail_internal("xi^2 split failed");
    elt c0 = 0, c1 = 0;
    for (unsigned c = 0; c < t; ++c) {
      c0 = F.add(c0, F.mul((*sol)[c], sf[c]));
      c1 = F.add(c1, F.mul((*sol)[t + c], sf[c]));
    }
    b = c0;
    a = c1;

    for (unsigned rho = 0; rho < m; ++rho) {
      const elt eta_rho = F.frob(eta, rho);
      auto sol2 = solve_linear(F, A, tw.coords(eta_rho));
      if (!sol2) fail_internal("eta^rho split failed");
      elt B = 0, Acoef = 0;
      for (unsigned c = 0; c < t; ++c) {
        B = F.add(B, F.mul((*sol2)[c], sf[c]));
        Acoef = F.add(Acoef, F.mul((*sol2)[t + c], sf[c]));
      }
      if (Acoef == 0) continue;  // eta^rho in F_{q^t} cannot happen
      const unsigned inv_rho = (m - rho) % m;

      const bool s_same = (P.s % t) == (Q.s % t);
      const bool s_opp = (P.s + Q.s) % t == 0;

      // clause 1: s = s' (mod t), B = 0, norm-one ratio per matched pair
      if (s_same && B == 0) {
        std::vector<std::vector<bool>> ok(r, std::vector<bool>(r, false));
        for (unsigned i = 0; i < r; ++i) {
          const elt mi_inv_rho = F.frob(P.mus[i], inv_rho);
          const elt A_inv_rho = F.frob(Acoef, inv_rho);
          for (unsigned k = 0; k < r; ++k) {
            const elt c = F.div(F.mul(Q.mus[k], A_inv_rho), mi_inv_rho);
            ok[i][k] = sub.norm_to(c, 1) == 1;
          }
        }
        std::vector<unsigned> perm(r);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
          bool all = true;
          for (unsigned i = 0; i < r && all; ++i) all = ok[i][perm[i]];
          if (all) {
            res.equivalent = true;
            res.clause = 1;
            res.rho_exp = rho;
            res.sigma = perm;
            return res;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }

      // clause 2: s = -s' (mod t), B = -A a, norm-one product per pair
      if (s_opp && B == F.neg(F.mul(Acoef, a))) {
        std::vector<std::vector<bool>> ok(r, std::vector<bool>(r, false));
        const elt A_inv_rho = F.frob(Acoef, inv_rho);
        const elt b_inv_rho = F.frob(b, inv_rho);
        for (unsigned i = 0; i < r; ++i) {
          // mu_i^(q^{-s} rho^{-1})
          const elt mi_qs = sub.frob_q(P.mus[i], -static_cast<long>(P.s));
          const elt mi = F.frob(mi_qs, inv_rho);
          for (unsigned k = 0; k < r; ++k) {
            const elt c = F.mul(F.mul(Q.mus[k], mi), F.mul(A_inv_rho, b_inv_rho));
            ok[i][k] = sub.norm_to(c, 1) == 1;
          }
        }
        std::vector<unsigned> perm(r);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
          bool all = true;
          for (unsigned i = 0; i < r && all; ++i) all = ok[i][perm[i]];
          if (all) {
            res.equivalent = true;
            res.clause = 2;
            res.rho_exp = rho;
            res.sigma = perm;
            return res;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return res;
}

MixedCheckReport mixed_inequivalence_check(const MonomialParams& pure,
                                           const MonomialParams& with_subfield) {
  if (pure.t < 2) fail_invalid("the subfield obstruction needs t >= 2");
  if (pure.append_subfield || !with_subfield.append_subfield)
    fail_invalid("expected a pure family and a subfield-extended family");
  validate_monomial_params(pure);
  validate_monomial_params(with_subfield);

  MixedCheckReport rep;
  const Family A = monomial_family(pure);
  const Family B = monomial_family(with_subfield);
  // F_{q^t} is stabilized by all of F_{q^t}^*; monomial factors only by F_q^*
  rep.subfield_stabilizer_degree = B.subs.back().orbit_info().stabilizer_degree;
  for (const auto& u : A.subs) rep.monomial_stabilizers.push_back(u.orbit_info().stabilizer_degree);
  rep.inequivalent = true;
  if (A.r() == B.r()) {
    const auto eq = family_equivalence(A, B, AutSet::all);
    rep.cross_checked = eq.kind == EqResult::Kind::inequivalent;
    if (eq.kind == EqResult::Kind::equivalent) rep.inequivalent = false;
  } else {
    rep.cross_checked = true;  // different r: trivially inequivalent
  }
  return rep;
}

}  // namespace msidon
