#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tower.hpp"

using namespace msidon;

namespace {

// independent irreducibility oracle: trial division by every monic polynomial
// of degree up to deg/2
bool irreducible_oracle(const std::vector<unsigned>& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::vector<unsigned> g(d + 1, 0);
    g[d] = 1;
    const std::uint64_t total = pow_u64(p, d);
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t v = k;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      // long division f by g, checking the remainder
      std::vector<unsigned> r(f);
      while (r.size() >= g.size()) {
        unsigned c = r.back();
        if (c != 0) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            unsigned t = (c * g[i]) % p;
            std::size_t at = r.size() - g.size() + i;
            r[at] = (r[at] + p - t) % p;
          }
        }
        r.pop_back();
      }
      if (std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("deterministic modulus choices") {
  CHECK(Field::make(2, 2)->spec() == "gf(2^2;1,1,1)");  // x^2+x+1, the only one
  CHECK(Field::make(3, 2)->spec() == "gf(3^2;1,0,1)");  // x^2+1

  // degree-4 modulus over F_3 against the trial-division oracle: the library
  // must pick the lexicographically smallest irreducible (low-degree-first)
  auto F81 = Field::make(3, 4);
  const auto& mod = F81->modulus();
  CHECK(irreducible_oracle(mod, 3));
  std::vector<unsigned> probe(5, 0);
  probe[4] = 1;
  bool smaller_exists = false;
  for (std::uint64_t k = 0; k < 81; ++k) {
    std::uint64_t v = k;
    for (unsigned i = 0; i < 4; ++i) {
      probe[3 - i] = static_cast<unsigned>(v % 3);
      v /= 3;
    }
    if (probe == mod) break;  // reached the chosen one: nothing smaller was irreducible
    if (irreducible_oracle(probe, 3)) {
      smaller_exists = true;
      break;
    }
  }
  CHECK_FALSE(smaller_exists);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4, 2), error);                                // composite p
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{0, 0, 1}), error);  // x^2 reducible
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{2, 0, 1}), error);  // x^2+2=(x+1)(x+2)
}

TEST_CASE("spec string round trip") {
  for (auto F : {Field::make(2, 6), Field::make(3, 4), Field::make(5, 2)}) {
    auto G = Field::parse(F->spec());
    CHECK(G->spec() == F->spec());
    CHECK(G->order() == F->order());
  }
  CHECK_THROWS_AS(Field::parse("gf(3^2)"), error);
  CHECK_THROWS_AS(Field::parse("gf(3^2;1,0)"), error);
}

TEST_CASE("primitive element is the smallest of full order") {
  for (auto F : {Field::make(3, 2), Field::make(2, 4), Field::make(5, 2)}) {
    const elt g = F->primitive();
    CHECK(F->mul_order(g) == F->order() - 1);
    for (elt a = 2; a < g; ++a) CHECK(F->mul_order(a) < F->order() - 1);
  }
}

TEST_CASE("field arithmetic basics") {
  auto F = Field::make(3, 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const elt a = rng_below(rng, F->order());
    const elt b = rng_below(rng, F->order());
    const elt c = rng_below(rng, F->order());
    CHECK(F->add(a, b) == F->add(b, a));
    CHECK(F->mul(a, b) == F->mul(b, a));
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    CHECK(F->sub(F->add(a, b), b) == a);
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("frobenius is a field automorphism fixing F_q") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const elt a = rng_below(rng, F->order());
    const elt b = rng_below(rng, F->order());
    CHECK(F->frob(F->add(a, b), 1) == F->add(F->frob(a, 1), F->frob(b, 1)));
    CHECK(F->frob(F->mul(a, b), 1) == F->mul(F->frob(a, 1), F->frob(b, 1)));
    CHECK(F->frob(a, 4) == a);  // identity at j = n
    CHECK(F->frob(a, 0) == a);
  }
  for (elt lam : tw.base_elements()) CHECK(F->frob(lam, 1) == lam);
  // elements of the degree-2 subfield are fixed by the second power
  for (elt a = 0; a < F->order(); ++a)
    if (F->in_prime_subfield(a, 2)) CHECK(F->frob(a, 2) == a);
  // g^(q^1) computed by repeated multiplication
  const elt g = F->primitive();
  elt g3 = 1;
  for (int i = 0; i < 3; ++i) g3 = F->mul(g3, g);
  CHECK(F->frob(g, 1) == g3);
}

TEST_CASE("norm and trace land in the target subfield") {
  // exhaustive on towers up to 3^8 elements
  struct Cfg {
    unsigned p, m, e;
  };
  for (Cfg c : {Cfg{3, 4, 1}, Cfg{2, 6, 1}, Cfg{3, 4, 2}, Cfg{2, 8, 2}}) {
    Tower tw(Field::make(c.p, c.m), c.e);
    const Field& F = tw.field();
    for (unsigned d = 1; d <= tw.degree(); ++d) {
      if (tw.degree() % d != 0) continue;
      for (elt a = 0; a < F.order(); ++a) {
        CHECK(tw.in_subfield(tw.norm_to(a, d), d));
        CHECK(tw.in_subfield(tw.trace_to(a, d), d));
      }
    }
  }
}

TEST_CASE("norm and trace frozen examples") {
  auto F9 = Field::make(3, 2);
  Tower tw(F9, 1);
  CHECK(tw.norm_to(1, 1) == 1);
  CHECK(tw.norm_to(F9->primitive(), 1) == 2);  // g^4 = -1
  CHECK(tw.trace_to(1, 1) == 2);               // 1 + 1 in characteristic 3
  CHECK(tw.trace_to(F9->root(), 1) == 0);      // i + i^3 = i - i with i^2 = -1
  CHECK(tw.trace_to(0, 1) == 0);
  CHECK(tw.norm_to(0, 1) == 0);

  // lambda in F_q: N_{q^n/q}(lambda) = lambda^n
  auto F = Field::make(3, 4);
  Tower t4(F, 1);
  for (elt lam : t4.base_elements()) CHECK(t4.norm_to(lam, 1) == F->pow(lam, 4));
  // trace is F_q-linear
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const elt a = rng_below(rng, F->order());
    const elt b = rng_below(rng, F->order());
    CHECK(t4.trace_to(F->add(a, b), 1) == F->add(t4.trace_to(a, 1), t4.trace_to(b, 1)));
  }
}

TEST_CASE("dual basis") {
  auto F4 = Field::make(2, 2);
  Tower tw(F4, 1);
  const elt w = F4->root();
  // (1, w) has dual (w^2, 1): solved by the 2x2 trace system
  auto D = tw.dual_basis(std::vector<elt>{1, w});
  CHECK(D == std::vector<elt>{F4->mul(w, w), 1});
  // (w, w^2) is self-dual
  auto D2 = tw.dual_basis(std::vector<elt>{w, F4->mul(w, w)});
  CHECK(D2 == std::vector<elt>{w, F4->mul(w, w)});
  // full delta-matrix condition and the involution, on a bigger tower
  auto F = Field::make(3, 4);
  Tower t4(F, 1);
  std::mt19937_64 rng(4);
  std::vector<elt> B;
  while (B.size() < 4) {
    B.push_back(rng_below(rng, F->order()));
    Mat rows;
    for (elt x : B) rows.push_back(t4.coords(x));
    if (rref(*F, rows) < B.size()) B.pop_back();
  }
  auto Bd = t4.dual_basis(B);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j)
      CHECK(t4.trace_to(F->mul(B[i], Bd[j]), 1) == (i == j ? 1u : 0u));
  CHECK(t4.dual_basis(Bd) == B);
  // dependent input is rejected
  CHECK_THROWS_AS(t4.dual_basis(std::vector<elt>{1, 2, 1, 5}), error);
}

TEST_CASE("element serialization is the base-p digit evaluation") {
  auto F = Field::make(3, 4);
  for (elt a : {elt{0}, elt{1}, elt{47}, elt{80}}) {
    auto d = F->digits(a);
    elt v = 0, p = 1;
    for (unsigned i = 0; i < 4; ++i) {
      v += d[i] * p;
      p *= 3;
    }
    CHECK(v == a);
    CHECK(F->from_digits(d) == a);
  }
}
