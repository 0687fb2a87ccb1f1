#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "construct.hpp"
#include "subspace.hpp"

using namespace msidon;

namespace {

std::vector<elt> set_of(const Subspace& U) {
  auto v = U.elements();
  std::sort(v.begin(), v.end());
  return v;
}

// direct set-membership intersection oracle
unsigned intersect_oracle(const Subspace& a, const Subspace& b) {
  unsigned count = 0;
  for (elt x : a.elements())
    if (b.contains(x)) ++count;
  unsigned dim = 0;
  while (pow_u64(a.tower().q(), dim) < count) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("span canonicality") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<elt> gens(2);
    for (auto& g : gens) g = rng_below(rng, F->order());
    Subspace U = Subspace::span_elements(tw, gens);
    // re-span from a different generating set of the same space
    auto els = U.elements();
    std::vector<elt> regen;
    while (true) {
      regen.clear();
      for (int i = 0; i < 4; ++i) regen.push_back(els[rng_below(rng, els.size())]);
      if (Subspace::span_elements(tw, regen).dim() == U.dim()) break;
    }
    CHECK(Subspace::span_elements(tw, regen) == U);
  }
  // {v, lambda v} spans one dimension
  const elt v = F->primitive();
  CHECK(Subspace::span_elements(tw, std::vector<elt>{v, F->mul(2, v)}).dim() == 1);
  // empty span
  CHECK(Subspace::span_elements(tw, std::vector<elt>{}).dim() == 0);
  CHECK(Subspace::zero(tw).is_zero());
}

TEST_CASE("monomial subspace has full dimension") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  elt xi = 3;
  Subspace W = monomial_subspace(tw, 2, 1, 1, xi);
  CHECK(W.dim() == 2);
  // rows round-trip through canonicalization
  CHECK(Subspace::from_rows(tw, W.rows()) == W);
}

TEST_CASE("scalar multiplication") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  Subspace U = Subspace::subfield(tw, 2);
  for (elt lam : tw.base_elements())
    if (lam != 0) CHECK(U.scaled(lam) == U);
  const elt a = F->primitive();
  CHECK(U.scaled(a).scaled(F->inv(a)) == U);
  CHECK_THROWS_AS(U.scaled(0), error);
  // alpha outside F_{q^t}: alpha F_{q^t} meets F_{q^t} trivially
  for (elt alpha = 0; alpha < F->order(); ++alpha) {
    if (alpha == 0 || tw.in_subfield(alpha, 2)) continue;
    CHECK(intersect_dim(U, U.scaled(alpha)) == 0);
  }
}

TEST_CASE("intersection dimension") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  Subspace U = Subspace::subfield(tw, 2);
  CHECK(intersect_dim(U, U) == 2);
  // complementary pair
  Subspace V = Subspace::span_elements(
      tw, std::vector<elt>{F->mul(F->root(), F->root()), F->pow(F->root(), 3)});
  if (intersect_dim(U, V) == 0) CHECK(U.sum(V).dim() == 4);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<elt> ga(2), gb(2);
    for (auto& g : ga) g = rng_below(rng, F->order());
    for (auto& g : gb) g = rng_below(rng, F->order());
    Subspace A = Subspace::span_elements(tw, ga);
    Subspace B = Subspace::span_elements(tw, gb);
    CHECK(intersect_dim(A, B) == intersect_dim(B, A));
    CHECK(intersect_dim(A, B) == static_cast<int>(intersect_oracle(A, B)));
    elt alpha = 0;
    while (alpha == 0) alpha = rng_below(rng, F->order());
    CHECK(intersect_dim(A.scaled(alpha), B.scaled(alpha)) == intersect_dim(A, B));
  }
}

TEST_CASE("frobenius image") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  std::mt19937_64 rng(3);
  std::vector<elt> gens{rng_below(rng, F->order()), rng_below(rng, F->order())};
  Subspace U = Subspace::span_elements(tw, gens);
  CHECK(U.frob_image_p(0) == U);
  CHECK(Subspace::subfield(tw, 2).frob_image_p(1) == Subspace::subfield(tw, 2));
  // W_{mu x^q, xi} maps to W with conjugated coefficients
  const elt xi = 3, mu = 7;
  Subspace W = monomial_subspace(tw, 2, 1, mu, xi);
  Subspace Wf = monomial_subspace(tw, 2, 1, F->frob(mu, 1), F->frob(xi, 1));
  CHECK(W.frob_image_p(1) == Wf);
  CHECK(W.frob_image_p(1).dim() == W.dim());
}

TEST_CASE("orbit stabilizer") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  // the subfield F_{q^t} inside F_{q^2t} is an F_{q^t}-line
  auto info = Subspace::subfield(tw, 2).orbit_info();
  CHECK(info.stabilizer_degree == 2);
  CHECK(info.orbit_size == (81 - 1) / (9 - 1));
  // a monomial space has a full orbit
  auto winfo = monomial_subspace(tw, 2, 1, 1, 3).orbit_info();
  CHECK(winfo.stabilizer_degree == 1);
  CHECK(winfo.orbit_size == 40);
  // the whole field is a single orbit
  auto finfo = Subspace::subfield(tw, 4).orbit_info();
  CHECK(finfo.stabilizer_degree == 4);
  CHECK(finfo.orbit_size == 1);
  CHECK_THROWS_AS(Subspace::zero(tw).orbit_info(), error);
  // orbit size times stabilizer scalars partitions F_{q^n}^*
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<elt> gens(1 + rng_below(rng, 3));
    for (auto& g : gens) g = rng_below(rng, F->order());
    Subspace U = Subspace::span_elements(tw, gens);
    if (U.is_zero()) continue;
    auto oi = U.orbit_info();
    CHECK(oi.orbit_size * (pow_u64(3, oi.stabilizer_degree) - 1) == 80);
  }
}

TEST_CASE("product span") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  Subspace sf = Subspace::subfield(tw, 2);
  CHECK(sf.product_span(sf) == sf);  // subfields are closed under products
  Subspace one = Subspace::span_elements(tw, std::vector<elt>{1});
  std::mt19937_64 rng(5);
  std::vector<elt> gens{rng_below(rng, F->order()), rng_below(rng, F->order())};
  Subspace V = Subspace::span_elements(tw, gens);
  CHECK(one.product_span(V) == V);
  // t = 2 squares span 3 = C(3,2) dimensions; from t = 3 on they span 2t
  Subspace W = monomial_subspace(tw, 2, 1, 1, 3);
  CHECK(W.product_span(W).dim() == 3);
  Tower t6(Field::make(3, 6), 1);
  Subspace W3 = monomial_subspace(t6, 3, 1, 1, 4);
  CHECK(W3.product_span(W3).dim() == 6);
}

TEST_CASE("quotient set") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  // the subfield is closed under division
  Subspace sf = Subspace::subfield(tw, 2);
  CHECK(sf.quotient_set() == set_of(sf));
  // one-dimensional spaces give exactly F_q
  Subspace line = Subspace::span_elements(tw, std::vector<elt>{F->primitive()});
  CHECK(line.quotient_set() == tw.base_elements());
  // nonzero part is closed under F_q^* scaling
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<elt> gens{rng_below(rng, F->order()), rng_below(rng, F->order())};
    Subspace U = Subspace::span_elements(tw, gens);
    if (U.is_zero()) continue;
    auto qs = U.quotient_set();
    CHECK((qs.size() - 1) % (3 - 1) == 0);
    CHECK_THROWS_AS(Subspace::zero(tw).quotient_set(), error);
  }
}

TEST_CASE("quotient and intersection conditions agree pairwise") {
  // the two pair conditions of the product characterization
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 40) {
    std::vector<elt> ga(2), gb(2);
    for (auto& g : ga) g = rng_below(rng, F->order());
    for (auto& g : gb) g = rng_below(rng, F->order());
    Subspace A = Subspace::span_elements(tw, ga);
    Subspace B = Subspace::span_elements(tw, gb);
    if (A.dim() < 2 || B.dim() < 2) continue;
    ++checked;
    Family fam = make_family(tw, {A, B});
    CHECK(cond_quotient(fam) == cond_intersection(fam));
  }
}
