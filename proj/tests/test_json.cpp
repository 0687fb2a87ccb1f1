#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json_io.hpp"

using namespace msidon;

TEST_CASE("subspace and family round trips") {
  auto fam = monomial_family(monomial_params(3, 2, 1, 2));
  const json fj = family_json(fam);
  CHECK(fj["field"] == "gf(3^4;1,0,1,1,1)");
  CHECK(fj["q"] == 3);
  Family back = family_from_json(fj);
  CHECK(back.r() == fam.r());
  for (unsigned i = 0; i < fam.r(); ++i) CHECK(back.subs[i] == fam.subs[i]);
  // canonical files re-serialize byte-identically
  CHECK(family_json(back).dump() == fj.dump());

  const json sj = subspace_json(fam.subs[0]);
  Subspace s = subspace_from_json(sj);
  CHECK(s == fam.subs[0]);
}

TEST_CASE("non-canonical rows are canonicalized on load") {
  auto fam = monomial_family(monomial_params(3, 2, 1, 1));
  json sj = subspace_json(fam.subs[0]);
  // scale a row by 2: same subspace, different matrix
  json rows = sj["basis"];
  for (auto& v : rows[0]) v = (v.get<elt>() * 2) % 3;
  sj["basis"] = rows;
  CHECK(subspace_from_json(sj) == fam.subs[0]);
}

TEST_CASE("parse failures carry the parse status") {
  auto expect_parse_error = [](const json& j) {
    try {
      family_from_json(j);
      FAIL("expected a parse error");
    } catch (const error& e) {
      CHECK(e.code() == status_code::parse);
    }
  };
  expect_parse_error(json{{"q", 3}});
  expect_parse_error(json{{"field", "gf(3^4;1,0,1,1,1)"}, {"q", 3}});
  expect_parse_error(json{{"field", "gf(3^4;1,0,1,1,1)"}, {"q", 2}, {"subspaces", json::array()}});
}

TEST_CASE("code manifest round trip verifies the declared size") {
  auto fam = monomial_family(monomial_params(3, 2, 1, 2));
  auto code = build_code(fam);
  min_distance(code);
  json cj = code_json(code, true);
  CHECK(cj["size"] == 80);
  CHECK(cj["min_distance"] == 2);
  CyclicCode back = code_from_json(cj);
  CHECK(back.size == code.size);
  // a lying manifest is rejected
  cj["size"] = 81;
  try {
    code_from_json(cj);
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.code() == status_code::parse);
  }
}

TEST_CASE("construction params round trip") {
  auto P = monomial_params(3, 2, 1, 2, true);
  json pj = monomial_params_json(P);
  auto Q = monomial_params_from_json(pj);
  CHECK(Q.mus == P.mus);
  CHECK(Q.xi == P.xi);
  CHECK(Q.s == P.s);
  CHECK(Q.append_subfield == P.append_subfield);
  CHECK(Q.tw.same_structure(P.tw));

  // r-only form triggers the deterministic search
  auto R = monomial_params_from_json(json{{"q", 3}, {"t", 2}, {"s", 1}, {"r", 2}});
  CHECK(R.mus == monomial_params(3, 2, 1, 2).mus);
}

TEST_CASE("verdict and witness serialization") {
  auto fam = monomial_family(monomial_params(3, 2, 1, 2));
  const elt alpha = fam.tw.field().primitive();
  Family shared = make_family(fam.tw, {fam.subs[0], fam.subs[0].scaled(alpha)});
  auto v = is_multi_sidon(shared);
  json vj = verdict_json(v);
  CHECK(vj["result"] == false);
  CHECK(vj["witness"]["kind"] == "orbit-overlap");
}
