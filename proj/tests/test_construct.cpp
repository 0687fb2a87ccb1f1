#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "construct.hpp"
#include "suites.hpp"

using namespace msidon;

TEST_CASE("monomial family construction") {
  auto P = monomial_params(3, 2, 1, 2);
  Family fam = monomial_family(P);
  CHECK(fam.r() == 2);
  CHECK(fam.subs[0].dim() == 2);
  CHECK(is_multi_sidon(fam).result);

  // r = 1 specializes to a single Sidon space
  auto P1 = monomial_params(3, 2, 1, 1);
  Family f1 = monomial_family(P1);
  CHECK(is_sidon(f1.subs[0], SidonRoute::orbit_intersection).result);

  // subfield-extended family: 3 subspaces, and the subfield meets every
  // scalar multiple of the monomial factors in dimension at most 1
  auto PA = monomial_params(3, 2, 1, 3, true);
  Family fa = monomial_family(PA);
  CHECK(fa.r() == 3);
  const Subspace& sf = fa.subs.back();
  CHECK(sf == Subspace::subfield(fa.tw, 2));
  for (unsigned i = 0; i + 1 < fa.r(); ++i)
    for (elt a : fa.tw.coset_reps())
      CHECK(intersect_dim(sf, fa.subs[i].scaled(a)) <= 1);
}

TEST_CASE("parameter validation names the failing condition") {
  // gcd(s, t) != 1
  CHECK_THROWS_WITH_AS(monomial_params(3, 2, 2, 1), doctest::Contains("gcd"), error);
  // r too large
  CHECK_THROWS_WITH_AS(monomial_params(3, 2, 1, 3), doctest::Contains("bound"), error);
  // q = 2 with r >= 2
  CHECK_THROWS_WITH_AS(monomial_params(2, 2, 1, 2), doctest::Contains("q = 2"), error);
  // explicit mus violating norm distinctness: N(1) = N(g^8) over F_9 in F_81
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  Tower sub = tw.subtower(2);
  auto sfels = Subspace::subfield(tw, 2).elements();
  std::sort(sfels.begin(), sfels.end());
  elt m2 = 0;
  for (elt m : sfels)
    if (m != 0 && m != 1 && sub.norm_to(m, 1) == sub.norm_to(1, 1)) {
      m2 = m;
      break;
    }
  REQUIRE(m2 != 0);
  CHECK_THROWS_WITH_AS(
      monomial_params(tw, 1, 2, false, std::vector<elt>{1, m2}, std::nullopt),
      doctest::Contains("norm-distinctness"), error);
  // explicit mus violating the product-norm condition
  elt xi_bad = 0, mu_bad = 0;
  for (elt xi = 0; xi < F->order() && xi_bad == 0; ++xi) {
    if (tw.in_subfield(xi, 2)) continue;
    const elt z = F->pow(xi, 10);
    for (elt m : sfels) {
      if (m == 0 || m == 1) continue;
      if (sub.norm_to(m, 1) == sub.norm_to(1, 1)) continue;
      if (sub.norm_to(F->mul(m, z), 1) == 1) {
        xi_bad = xi;
        mu_bad = m;
        break;
      }
    }
  }
  REQUIRE(mu_bad != 0);
  CHECK_THROWS_WITH_AS(
      monomial_params(tw, 1, 2, false, std::vector<elt>{1, mu_bad}, xi_bad),
      doctest::Contains("product-norm"), error);
}

TEST_CASE("orbit-code parameters") {
  // q=5, t=2, s=1: two orbit generators
  auto R = orbit_code_params(5, 2, 1);
  CHECK(R.tau == 2);
  CHECK(R.gammas.size() == 2);
  const Field& F = R.tw.field();
  // gamma_0 is a root of x^2 + b x + w and gamma_0^(q^t+1) = w
  CHECK(F.add(F.add(F.mul(R.gamma0, R.gamma0), F.mul(R.b, R.gamma0)), R.w) == 0);
  CHECK(F.pow(R.gamma0, 26) == R.w);
  // w primitive and outside the (q^s - 1)-power image
  CHECK(F.mul_order(R.w) == 24);
  CHECK(F.pow(R.w, 24 / 4) != 1);
  // the derived monomial parameters satisfy the construction conditions
  auto P = orbit_code_monomial_params(R);
  CHECK(P.mus.size() == 2);
  CHECK(P.xi == R.gamma0);

  // q=3: tau = 1
  CHECK(orbit_code_params(3, 2, 1).tau == 1);
  // q=4, t=3, s=2: tau = 1 and the family is multi-Sidon
  auto R43 = orbit_code_params(4, 3, 2);
  CHECK(R43.tau == 1);
  CHECK(is_multi_sidon(orbit_code_family(R43)).result);
  // q = 2 is rejected
  CHECK_THROWS_AS(orbit_code_params(2, 2, 1), error);
  // supplied parameters are validated
  CHECK_THROWS_AS(orbit_code_params(5, 2, 1, elt{1}), error);  // 1 is not primitive
}

TEST_CASE("monomial equivalence: identity and first clause") {
  auto P = monomial_params(3, 2, 1, 2);
  auto res = monomial_equivalence(P, P);
  CHECK(res.equivalent);
  CHECK(res.clause == 1);
  CHECK(res.rho_exp == 0);
}

TEST_CASE("monomial equivalence: second clause instance") {
  // build Q from P by the s -> t - s transformation with rho = id, A free
  const unsigned t = 4;  // gcd(1,4) = gcd(3,4) = 1
  auto P = monomial_params(3, t, 1, 1);
  const Tower& tw = P.tw;
  const Field& F = tw.field();
  Tower sub = tw.subtower(t);
  // xi^2 = a xi + b
  const elt xi = P.xi;
  const elt a = [&] {
    // decompose xi^2 over (1, xi)
    for (elt cand : Subspace::subfield(tw, t).elements()) {
      const elt b = F.sub(F.mul(xi, xi), F.mul(cand, xi));
      if (tw.in_subfield(b, t)) return cand;
    }
    return elt{0};
  }();
  const elt b = F.sub(F.mul(xi, xi), F.mul(a, xi));
  REQUIRE(tw.in_subfield(b, t));
  const elt A = 2;  // any nonzero element of F_{q^t}
  const elt eta = F.mul(A, F.sub(xi, a));  // so that B = -A a
  REQUIRE(!tw.in_subfield(eta, t));
  // mu-bar = 1 / (mu^(q^{-s}) A b) with c = 1
  const elt mu_qs = sub.frob_q(P.mus[0], -1);
  const elt mubar = F.inv(F.mul(F.mul(mu_qs, A), b));
  auto Q = monomial_params(tw, t - 1, 1, false, std::vector<elt>{mubar}, eta);
  auto res = monomial_equivalence(P, Q);
  CHECK(res.equivalent);
  CHECK(res.clause == 2);
  // the generic search agrees
  auto gen = family_equivalence(monomial_family(P), monomial_family(Q));
  CHECK(gen.kind == EqResult::Kind::equivalent);
}

TEST_CASE("inequivalent twists support the totient lower bound") {
  // q=3, t=5: s = 1 and s' = 2 are in different classes (2 != +-1 mod 5)
  auto P1 = monomial_params(3, 5, 1, 1);
  auto P2 = monomial_params(3, 5, 2, 1);
  CHECK_FALSE(monomial_equivalence(P1, P2).equivalent);
  auto gen = family_equivalence(monomial_family(P1), monomial_family(P2));
  CHECK(gen.kind == EqResult::Kind::inequivalent);
  // s = 1 vs s' = 4 = -1 mod 5 may or may not merge, but 1 vs 2 and 1 vs 3
  // give at least phi(5)/2 = 2 distinct classes
  auto P3 = monomial_params(3, 5, 3, 1);
  CHECK_FALSE(monomial_equivalence(P1, P3).equivalent);
}

TEST_CASE("mixed families are inequivalent") {
  auto pure = monomial_params(3, 2, 1, 2);
  auto with_sf = monomial_params(3, 2, 1, 2, true);
  auto rep = mixed_inequivalence_check(pure, with_sf);
  CHECK(rep.inequivalent);
  CHECK(rep.subfield_stabilizer_degree == 2);
  for (unsigned d : rep.monomial_stabilizers) CHECK(d == 1);
  CHECK(rep.cross_checked);
}

TEST_CASE("subfield-extended pairs follow the same clauses") {
  auto A = monomial_params(3, 2, 1, 3, true);
  auto res = monomial_equivalence(A, A);
  CHECK(res.equivalent);
  // cross-check against the generic search
  auto gen = family_equivalence(monomial_family(A), monomial_family(A));
  CHECK(gen.kind == EqResult::Kind::equivalent);
}

TEST_CASE("direct and generic equivalence agree across the grid") {
  auto rep = monomial_grid_suite(5, 5);
  CHECK(rep.pairs > 0);
  for (const auto& d : rep.disagreements) MESSAGE(d);
  CHECK(rep.agree == rep.pairs);
}
