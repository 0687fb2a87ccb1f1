#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linpoly.hpp"
#include "subspace.hpp"

using namespace msidon;

namespace {

std::uint64_t root_count(const LinPoly& f) {
  const Field& F = f.domain().field();
  std::uint64_t n = 0;
  for (elt x = 0; x < F.order(); ++x)
    if (f.domain().contains(x) && f.eval(x) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("evaluation basics") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  // x^q fixes F_q pointwise
  LinPoly xq = LinPoly::monomial(tw, 1, 1, 1);
  for (elt lam : tw.base_elements()) CHECK(xq.eval(lam) == lam);
  // the zero polynomial
  LinPoly z = LinPoly::zero(tw);
  CHECK(z.is_zero());
  CHECK(z.eval(F->primitive()) == 0);
  // mu x^(q^s) over F_9
  auto F9 = Field::make(3, 2);
  Tower t9(F9, 1);
  const elt g = F9->primitive();
  LinPoly m = LinPoly::monomial(t9, 5, 1, 1);
  CHECK(m.eval(g) == F9->mul(5, F9->pow(g, 3)));
  // evaluation is F_q-linear
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const elt a = rng_below(rng, F->order());
    const elt b = rng_below(rng, F->order());
    CHECK(xq.eval(F->add(a, b)) == F->add(xq.eval(a), xq.eval(b)));
  }
}

TEST_CASE("composition") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  LinPoly f = LinPoly::from_twist_coeffs(tw, 1, std::vector<elt>{5, 17, 0, 2});
  CHECK(f.compose(LinPoly::identity(tw)) == f);
  CHECK(LinPoly::identity(tw).compose(f) == f);
  // x^(q^a) o x^(q^b) = x^(q^(a+b mod n))
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      LinPoly c = LinPoly::monomial(tw, 1, a, 1).compose(LinPoly::monomial(tw, 1, b, 1));
      CHECK(c == LinPoly::monomial(tw, 1, (a + b) % 4, 1));
    }
  // pointwise agreement on all 81 elements for random pairs
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<elt> ca(4), cb(4);
    for (auto& x : ca) x = rng_below(rng, F->order());
    for (auto& x : cb) x = rng_below(rng, F->order());
    LinPoly a = LinPoly::from_q_coeffs(tw, ca);
    LinPoly b = LinPoly::from_q_coeffs(tw, cb);
    LinPoly ab = a.compose(b);
    for (elt x = 0; x < F->order(); ++x) CHECK(ab.eval(x) == a.eval(b.eval(x)));
  }
}

TEST_CASE("kernel dimension") {
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  // x^q - x has kernel F_q
  LinPoly f = LinPoly::monomial(tw, 1, 1, 1).sub(LinPoly::identity(tw));
  CHECK(f.kernel_dim() == 1);
  // the trace polynomial has kernel of dimension n - 1
  LinPoly tr = LinPoly::zero(tw);
  for (unsigned i = 0; i < 4; ++i) tr = tr.add(LinPoly::monomial(tw, 1, i, 1));
  CHECK(tr.kernel_dim() == 3);
  // zero polynomial is signalled distinctly
  CHECK_THROWS_AS(LinPoly::zero(tw).kernel_dim(), error);
  // random q-degree-2 polynomials: kernel in {0,1,2} and the exhaustive-root
  // oracle agrees with the matrix nullity
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<elt> c(3, 0);
    for (auto& x : c) x = rng_below(rng, F->order());
    while (c[2] == 0) c[2] = rng_below(rng, F->order());
    LinPoly g = LinPoly::from_twist_coeffs(tw, 1, c);
    const unsigned k = g.kernel_dim();
    CHECK(k <= 2);
    CHECK(root_count(g) == pow_u64(3, k));
  }
}

TEST_CASE("kernel dimension respects the subfield domain") {
  // q-polynomials over F_{q^t} inside F_{q^{2t}}
  auto F = Field::make(3, 4);
  Tower tw(F, 1);
  Tower sub = tw.subtower(2);
  LinPoly f = LinPoly::monomial(sub, 1, 1, 1).sub(LinPoly::identity(sub));  // x^q - x on F_9
  CHECK(f.kernel_dim() == 1);
  CHECK(root_count(f) == 3);
  const auto tc = f.twist_coeffs();
  CHECK(tc.size() == 2);
}

TEST_CASE("twist form bookkeeping") {
  auto F = Field::make(2, 6);
  Tower tw(F, 1);
  // a q^5-monomial of twist degree 2 lands on exponent (2*5) mod 6 = 4
  LinPoly f = LinPoly::monomial(tw, 1, 2, 5);
  CHECK(f.q_degree() == 4);
  CHECK(f.twist_degree() == 2);
  auto tc = f.twist_coeffs();
  CHECK(tc.size() == 3);
  CHECK(tc[2] == 1);
}

TEST_CASE("projection maps") {
  // F_9 = <1> + <i> over F_3 gives p_1(x) = 2x + 2x^3
  auto F9 = Field::make(3, 2);
  Tower tw(F9, 1);
  std::vector<Subspace> parts{Subspace::span_elements(tw, std::vector<elt>{1}),
                              Subspace::span_elements(tw, std::vector<elt>{F9->root()})};
  auto ps = projection_polys(parts);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].q_coeffs() == std::vector<elt>{2, 2});
  CHECK(ps[0].eval(1) == 1);
  CHECK(ps[0].eval(F9->root()) == 0);

  // a single part gives the identity map
  auto F = Field::make(3, 4);
  Tower t4(F, 1);
  std::vector<Subspace> whole{Subspace::subfield(t4, 4)};
  auto id = projection_polys(whole);
  REQUIRE(id.size() == 1);
  CHECK(id[0] == LinPoly::identity(t4));

  // idempotence, mutual annihilation, summation to the identity: exhaustive
  std::vector<Subspace> split{
      Subspace::span_elements(t4, std::vector<elt>{1, F->root()}),
      Subspace::span_elements(t4, std::vector<elt>{F->mul(F->root(), F->root()),
                                                   F->pow(F->root(), 3)})};
  auto pr = projection_polys(split);
  LinPoly sum = pr[0].add(pr[1]);
  for (elt x = 0; x < F->order(); ++x) {
    CHECK(sum.eval(x) == x);
    CHECK(pr[0].eval(pr[1].eval(x)) == 0);
    CHECK(pr[1].eval(pr[0].eval(x)) == 0);
    CHECK(pr[0].eval(pr[0].eval(x)) == pr[0].eval(x));
  }
  // images are the parts
  std::vector<elt> img;
  for (elt b : t4.power_basis()) img.push_back(pr[0].eval(b));
  CHECK(Subspace::span_elements(t4, img) == split[0]);

  // non-decompositions are rejected
  std::vector<Subspace> bad{split[0], split[0]};
  CHECK_THROWS_AS(projection_polys(bad), error);
}
