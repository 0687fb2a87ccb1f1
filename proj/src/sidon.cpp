#include "sidon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace msidon {

std::vector<unsigned> Family::dims() const {
  std::vector<unsigned> d;
  d.reserve(subs.size());
  for (const auto& u : subs) d.push_back(u.dim());
  return d;
}

Family make_family(Tower tw, std::vector<Subspace> subs) {
  if (subs.empty()) fail_invalid("family must contain at least one subspace");
  for (const auto& u : subs)
    if (!u.tower().same_structure(tw)) fail_invalid("family members live in different fields");
  return Family{std::move(tw), std::move(subs)};
}

namespace {

Verdict fail_with(std::string route, Witness w) {
  Verdict v;
  v.result = false;
  v.route = std::move(route);
  v.witness = std::move(w);
  return v;
}

// Unique-factorization scan between class representatives of U (pair source i)
// and V (pair source j). Keys are product classes; a collision between
// distinct unordered class pairs yields an exact quadruple a*b = c*d.
std::optional<Witness> factorization_violation(const Tower& tw, const Subspace& U,
                                               const Subspace& V, int i, int j) {
  const Field& F = tw.field();
  const auto ra = U.class_reps();
  const auto rb = (i == j) ? ra : V.class_reps();
  std::map<elt, std::pair<elt, elt>> seen;  // product class -> first (a, b)
  for (elt a : ra) {
    for (elt b : rb) {
      const elt prod = F.mul(a, b);
      const elt cls = tw.class_rep(prod);
      auto [it, inserted] = seen.emplace(cls, std::make_pair(a, b));
      if (inserted) continue;
      const auto [c, d] = it->second;
      const bool same_pair = (a == c && b == d) || (a == d && b == c);
      if (same_pair) continue;
      // scale the first-seen pair so the products agree exactly
      const elt lam = F.div(prod, F.mul(c, d));
      Witness w;
      w.kind = "quadruple";
      w.indices = {i, j};
      w.elements = {a, b, F.mul(lam, c), d};
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict is_sidon(const Subspace& U, SidonRoute route) {
  if (U.dim() < 2) fail_invalid("is_sidon needs dim >= 2");
  const Tower& tw = U.tower();

  if (route == SidonRoute::definitional) {
    Verdict v;
    v.route = "definitional";
    if (auto w = factorization_violation(tw, U, U, 0, 0)) {
      v.result = false;
      v.witness = std::move(w);
    } else {
      v.result = true;
    }
    return v;
  }

  Verdict v;
  v.route = "orbit-intersection";
  const auto orbit = U.orbit_info();
  if (orbit.stabilizer_degree != 1) {
    Witness w;
    w.kind = "stabilizer";
    w.indices = {0};
    w.elements = {tw.subfield_gen(orbit.stabilizer_degree)};
    w.value = orbit.stabilizer_degree;
    return fail_with(v.route, std::move(w));
  }
  const auto& reps = tw.coset_reps();
  for (std::size_t idx = 1; idx < reps.size(); ++idx) {  // idx 0 is the F_q class
    const int d = intersect_dim(U, U.scaled(reps[idx]));
    if (d > 1) {
      Witness w;
      w.kind = "intersection";
      w.indices = {0, 0};
      w.elements = {reps[idx]};
      w.value = static_cast<unsigned>(d);
      return fail_with(v.route, std::move(w));
    }
  }
  v.result = true;
  return v;
}

Verdict is_multi_sidon(const Family& F, unsigned threads) {
  const Tower& tw = F.tw;
  for (const auto& u : F.subs)
    if (u.dim() < 2) fail_invalid("is_multi_sidon needs all dimensions >= 2");

  Verdict v;
  v.route = "orbit-intersection";

  // (a) every orbit has full length (q^n - 1)/(q - 1)
  for (unsigned i = 0; i < F.r(); ++i) {
    const auto orbit = F.subs[i].orbit_info();
    if (orbit.stabilizer_degree != 1) {
      Witness w;
      w.kind = "stabilizer";
      w.indices = {static_cast<int>(i)};
      w.elements = {tw.subfield_gen(orbit.stabilizer_degree)};
      w.value = orbit.stabilizer_degree;
      return fail_with(v.route, std::move(w));
    }
  }

  const auto& reps = tw.coset_reps();
  const std::uint64_t nreps = reps.size();

  // (b) pairwise disjoint orbits, (c) bounded intersections
  for (unsigned i = 0; i < F.r(); ++i) {
    for (unsigned j = i; j < F.r(); ++j) {
      struct Hit {
        std::uint64_t idx = ~std::uint64_t{0};
        bool overlap = false;
        int dim = 0;
      };
      auto chunked = parallel_chunks<Hit>(nreps, threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        Hit h;
        for (std::uint64_t a = b; a < e; ++a) {
          if (i == j && a == 0) continue;  // alpha in F_q^*, same codeword
          const Subspace scaled = F.subs[j].scaled(reps[a]);
          if (i != j && scaled == F.subs[i]) {
            h = Hit{a, true, static_cast<int>(F.subs[i].dim())};
            return h;
          }
          const int d = intersect_dim(F.subs[i], scaled);
          if (d > 1) {
            h = Hit{a, false, d};
            return h;
          }
        }
        return h;
      });
      for (const auto& h : chunked) {
        if (h.idx == ~std::uint64_t{0}) continue;
        Witness w;
        w.kind = h.overlap ? "orbit-overlap" : "intersection";
        w.indices = {static_cast<int>(i), static_cast<int>(j)};
        w.elements = {reps[h.idx]};
        w.value = static_cast<unsigned>(h.dim);
        return fail_with(v.route, std::move(w));
      }
    }
  }
  v.result = true;
  return v;
}

Verdict is_weak_multi_sidon(const Family& F) {
  Verdict v;
  v.route = "definitional";
  for (unsigned i = 0; i < F.r(); ++i) {
    for (unsigned j = i; j < F.r(); ++j) {
      if (auto w = factorization_violation(F.tw, F.subs[i], F.subs[j], static_cast<int>(i),
                                           static_cast<int>(j))) {
        v.result = false;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  v.result = true;
  return v;
}

bool cond_quotient(const Family& F) {
  // U_i U_i^{-1} meets U_j U_j^{-1} exactly in F_q (as sets, 0 included)
  const auto& base = F.tw.base_elements();
  std::vector<std::vector<elt>> quots;
  quots.reserve(F.r());
  for (const auto& u : F.subs) quots.push_back(u.quotient_set());
  for (unsigned i = 0; i < F.r(); ++i) {
    for (unsigned j = i + 1; j < F.r(); ++j) {
      std::vector<elt> inter;
      std::set_intersection(quots[i].begin(), quots[i].end(), quots[j].begin(), quots[j].end(),
                            std::back_inserter(inter));
      if (inter != base) return false;
    }
  }
  return true;
}

bool cond_intersection(const Family& F) {
  const auto& reps = F.tw.coset_reps();
  for (unsigned i = 0; i < F.r(); ++i)
    for (unsigned j = i + 1; j < F.r(); ++j)
      for (elt a : reps)
        if (intersect_dim(F.subs[i], F.subs[j].scaled(a)) > 1) return false;
  return true;
}

SpanClassReport span_class(const Family& F) {
  SpanClassReport rep;
  rep.bounds_apply = true;
  for (const auto& u : F.subs) {
    const unsigned k = u.dim();
    rep.square_dims.push_back(u.product_span(u).dim());
    rep.total += rep.square_dims.back();
    rep.lower += 2ull * k;
    rep.upper += static_cast<std::uint64_t>(k) * (k + 1) / 2;
    if (k < 3) rep.bounds_apply = false;
  }
  rep.minimum = rep.total == rep.lower;
  rep.maximum = rep.total == rep.upper;
  if (rep.bounds_apply) rep.bounds_ok = rep.lower <= rep.total && rep.total <= rep.upper;
  return rep;
}

Subspace w_space(const Tower& tw, const LinPoly& f, elt eta) {
  const Field& F = tw.field();
  const Tower& sub = f.domain();
  std::vector<elt> gens;
  gens.reserve(sub.degree());
  for (elt b : Subspace::subfield(tw, sub.degree()).basis_elements())
    gens.push_back(F.add(b, F.mul(eta, f.eval(b))));
  return Subspace::span_elements(tw, gens);
}

namespace {

// splits w = a + eta * b with a, b in F_{q^t}; basis_rows is the RREF-free
// stacked coordinate matrix of (subfield basis, eta * subfield basis)
std::pair<elt, elt> split_eta(const Tower& tw, const Tower& sub, elt eta, elt w) {
  const Field& F = tw.field();
  const unsigned t = sub.degree();
  const auto sf = Subspace::subfield(tw, t).basis_elements();
  Mat A(tw.degree(), Row(2 * t, 0));
  for (unsigned c = 0; c < t; ++c) {
    auto col0 = tw.coords(sf[c]);
    auto col1 = tw.coords(F.mul(eta, sf[c]));
    for (unsigned r = 0; r < tw.degree(); ++r) {
      A[r][c] = col0[r];
      A[r][t + c] = col1[r];
    }
  }
  auto sol = solve_linear(F, std::move(A), tw.coords(w));
  if (!sol) fail_internal("split_eta: element outside F_(q^t) + eta F_(q^t)");
  elt a = 0, b = 0;
  for (unsigned c = 0; c < t; ++c) {
    a = F.add(a, F.mul((*sol)[c], sf[c]));
    b = F.add(b, F.mul((*sol)[t + c], sf[c]));
  }
  return {a, b};
}

}  // namespace

CanonicalForm canonical_form(const Family& F, const std::vector<elt>* etas) {
  const Tower& tw = F.tw;
  const unsigned n = tw.degree();
  if (n % 2 != 0) fail_invalid("canonical form needs even extension degree");
  const unsigned t = n / 2;
  for (const auto& u : F.subs)
    if (u.dim() != t) fail_invalid("canonical form needs all dimensions equal to n/2");
  if (etas && etas->size() != F.r()) fail_invalid("one eta per subspace expected");

  const Field& Fq = tw.field();
  const Tower sub = tw.subtower(t);
  const Subspace sf = Subspace::subfield(tw, t);
  const auto sf_basis = sf.basis_elements();

  CanonicalForm C;
  C.tw = tw;
  C.sub = sub;
  C.t = t;

  // default eta: smallest element outside F_{q^t}
  elt eta_default = 0;
  for (elt x = 0; x < Fq.order(); ++x) {
    if (!tw.in_subfield(x, t)) {
      eta_default = x;
      break;
    }
  }

  for (unsigned i = 0; i < F.r(); ++i) {
    elt eta = etas ? (*etas)[i] : eta_default;
    if (tw.in_subfield(eta, t)) fail_invalid("eta must lie outside F_(q^t)");
    const Subspace eta_line = sf.scaled(eta);

    elt lambda = 0;
    for (elt rep : tw.coset_reps()) {
      if (intersect_dim(F.subs[i].scaled(rep), eta_line) == 0) {
        lambda = rep;
        break;
      }
    }
    if (lambda == 0) fail_internal("canonical form: no lambda with trivial eta-line intersection");

    const Subspace W = F.subs[i].scaled(lambda);
    // each basis element of lambda U splits as u + eta f(u); the u's form a
    // basis of F_{q^t}, so f is determined by a Moore system over F_{q^t}
    std::vector<elt> us, vs;
    for (elt w : W.basis_elements()) {
      auto [a, b] = split_eta(tw, sub, eta, w);
      us.push_back(a);
      vs.push_back(b);
    }
    Mat moore(t, Row(t, 0));
    for (unsigned r = 0; r < t; ++r)
      for (unsigned d = 0; d < t; ++d) moore[r][d] = sub.frob_q(us[r], d);
    auto coeffs = solve_linear(Fq, std::move(moore), Row(vs.begin(), vs.end()));
    if (!coeffs) fail_internal("canonical form: Moore system is singular");
    LinPoly f = LinPoly::from_q_coeffs(sub, *coeffs);

    if (w_space(tw, f, eta) != W) fail_internal("canonical form: reconstruction mismatch");

    C.lambdas.push_back(lambda);
    C.etas.push_back(eta);
    C.fs.push_back(std::move(f));
    auto [b_i, a_i] = split_eta(tw, sub, eta, Fq.mul(eta, eta));  // eta^2 = a eta + b
    C.eta_a.push_back(a_i);
    C.eta_b.push_back(b_i);
  }

  const unsigned r = F.r();
  C.A.assign(r, Row(r, 0));
  C.B.assign(r, Row(r, 0));
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = 0; j < r; ++j) {
      auto [Bij, Aij] = split_eta(tw, sub, C.etas[j], C.etas[i]);  // eta_i = A eta_j + B
      C.A[i][j] = Aij;
      C.B[i][j] = Bij;
    }
  }
  return C;
}

Verdict poly_criterion(const CanonicalForm& C) {
  Verdict v;
  v.route = "poly-criterion";
  const Tower& sub = C.sub;
  const Field& F = sub.field();
  const unsigned r = static_cast<unsigned>(C.fs.size());

  std::vector<elt> subfield_els;
  {
    Subspace sf = Subspace::subfield(C.tw, C.t);
    subfield_els = sf.elements();
    std::sort(subfield_els.begin(), subfield_els.end());
  }

  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = i; j < r; ++j) {
      const LinPoly& fi = C.fs[i];
      const LinPoly& fj = C.fs[j];
      const elt Aji = C.A[j][i], Bji = C.B[j][i];
      const elt ai = C.eta_a[i], bi = C.eta_b[i];
      for (elt a0 : subfield_els) {
        for (elt a1 : subfield_els) {
          if (a0 == 0 && a1 == 0) continue;
          // u = a0 v + a1 Aji bi fj(v) + a0 Bji fj(v)
          // F(v) = fi(u(v)) - (a1 v + a0 Aji fj(v) + a1 Aji ai fj(v) + a1 Bji fj(v))
          LinPoly inner = LinPoly::scalar(sub, a0)
                              .add(fj.scaled(F.add(F.mul(F.mul(a1, Aji), bi), F.mul(a0, Bji))));
          LinPoly rhs = LinPoly::scalar(sub, a1).add(fj.scaled(
              F.add(F.add(F.mul(a0, Aji), F.mul(F.mul(a1, Aji), ai)), F.mul(a1, Bji))));
          LinPoly Fij = fi.compose(inner).sub(rhs);
          bool ok;
          if (Fij.is_zero()) {
            // the zero polynomial corresponds to W_i = alpha W_j exactly
            ok = (i == j) && a1 == 0 && sub.in_base(a0);
          } else {
            ok = Fij.kernel_dim() <= 1;
          }
          if (!ok) {
            Witness w;
            w.kind = "poly-root-bound";
            w.indices = {static_cast<int>(i), static_cast<int>(j)};
            w.elements = {a0, a1};
            w.value = Fij.is_zero() ? C.t : Fij.kernel_dim();
            return fail_with(v.route, std::move(w));
          }
        }
      }
    }
  }
  v.result = true;
  return v;
}

std::optional<EqWitness> orbit_match_search(const Family& A, const Family& B, AutSet auts) {
  if (!A.tw.same_structure(B.tw)) fail_invalid("equivalence search over different fields");
  if (A.r() != B.r()) return std::nullopt;
  const Tower& tw = A.tw;
  const Field& F = tw.field();
  const unsigned r = A.r();
  const unsigned m = F.degree();
  const unsigned e = tw.base_degree();

  std::vector<unsigned> exps;
  if (auts == AutSet::all) {
    for (unsigned j = 0; j < m; ++j) exps.push_back(j);
  } else {
    for (unsigned j = 0; j * e < m; ++j) exps.push_back(j * e);
  }

  for (unsigned rho : exps) {
    // lambda with B_i = lambda A_k^rho, when one exists
    std::vector<std::vector<std::optional<elt>>> match(r, std::vector<std::optional<elt>>(r));
    for (unsigned k = 0; k < r; ++k) {
      const Subspace Ak = A.subs[k].frob_image_p(rho);
      const auto vreps = Ak.class_reps();
      for (unsigned i = 0; i < r; ++i) {
        if (B.subs[i].dim() != Ak.dim()) continue;
        const elt w0 = B.subs[i].basis_elements().front();
        for (elt vr : vreps) {
          const elt lam = F.div(w0, vr);
          if (Ak.scaled(lam) == B.subs[i]) {
            match[i][k] = lam;
            break;
          }
        }
      }
    }
    std::vector<unsigned> perm(r);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      bool all = true;
      for (unsigned i = 0; i < r; ++i)
        if (!match[i][perm[i]]) {
          all = false;
          break;
        }
      if (all) {
        EqWitness w;
        w.sigma = perm;
        w.rho_exp = rho;
        for (unsigned i = 0; i < r; ++i) w.lambdas.push_back(*match[i][perm[i]]);
        return w;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

EqResult family_equivalence(const Family& A, const Family& B, AutSet auts) {
  EqResult res;
  auto hypothesis = [](const Family& fam, int which) -> std::optional<Witness> {
    for (unsigned i = 0; i < fam.r(); ++i) {
      if (fam.subs[i].dim() < 2) {
        Witness w;
        w.kind = "dimension-too-small";
        w.indices = {which, static_cast<int>(i)};
        return w;
      }
      for (unsigned j = i + 1; j < fam.r(); ++j) {
        if (fam.subs[i] == fam.subs[j]) {
          Witness w;
          w.kind = "duplicate-subspace";
          w.indices = {which, static_cast<int>(i), static_cast<int>(j)};
          return w;
        }
        for (elt a : fam.tw.coset_reps()) {
          const int d = intersect_dim(fam.subs[i], fam.subs[j].scaled(a));
          if (d > 1) {
            Witness w;
            w.kind = "hypothesis-intersection";
            w.indices = {which, static_cast<int>(i), static_cast<int>(j)};
            w.elements = {a};
            w.value = static_cast<unsigned>(d);
            return w;
          }
        }
      }
    }
    return std::nullopt;
  };
  if (auto w = hypothesis(A, 0)) {
    res.kind = EqResult::Kind::hypothesis_violation;
    res.hypothesis_witness = std::move(w);
    return res;
  }
  if (auto w = hypothesis(B, 1)) {
    res.kind = EqResult::Kind::hypothesis_violation;
    res.hypothesis_witness = std::move(w);
    return res;
  }

  // dimension multisets must match (necessary)
  auto da = A.dims(), db = B.dims();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) {
    res.kind = EqResult::Kind::inequivalent;
    return res;
  }

  if (auto w = orbit_match_search(A, B, auts)) {
    res.kind = EqResult::Kind::equivalent;
    res.witness = std::move(w);
    return res;
  }
  res.kind = EqResult::Kind::inequivalent;
  return res;
}

bool validate_equivalence_witness(const Family& A, const Family& B, const EqWitness& w) {
  if (w.sigma.size() != A.r() || A.r() != B.r()) return false;
  for (unsigned i = 0; i < B.r(); ++i) {
    const Subspace img = A.subs[w.sigma[i]].frob_image_p(w.rho_exp).scaled(w.lambdas[i]);
    if (img != B.subs[i]) return false;
  }
  return true;
}

}  // namespace msidon
