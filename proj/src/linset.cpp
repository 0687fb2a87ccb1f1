#include "linset.hpp"

#include <algorithm>
#include <unordered_map>

namespace msidon {

namespace {

std::uint64_t checked_pow(std::uint64_t b, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

std::uint64_t geom_sum(std::uint64_t q, unsigned w) {
  // 1 + q + ... + q^(w-1)
  std::uint64_t s = 0, p = 1;
  for (unsigned i = 0; i < w; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

std::uint64_t projective_point_count(std::uint64_t qn, unsigned r) {
  unsigned __int128 num = 1;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0) / qn;
  for (unsigned i = 0; i < r; ++i) {
    if (num > limit) fail(status_code::cap_exceeded, "projective space too large to count");
    num *= qn;
  }
  num = (num - 1) / (qn - 1);
  if (num > std::numeric_limits<std::uint64_t>::max())
    fail(status_code::cap_exceeded, "projective space too large to count");
  return static_cast<std::uint64_t>(num);
}

std::vector<elt> canonical_point(const Field& F, std::vector<elt> v) {
  for (elt x : v) {
    if (x != 0) {
      if (x != 1) {
        const elt s = F.inv(x);
        for (auto& y : v) y = F.mul(s, y);
      }
      return v;
    }
  }
  fail_internal("canonical_point: zero vector");
}

}  // namespace

VecSubspace VecSubspace::span_vectors(const Tower& tw, unsigned r,
                                      const std::vector<std::vector<elt>>& vecs) {
  const unsigned n = tw.degree();
  Mat rows;
  rows.reserve(vecs.size());
  for (const auto& v : vecs) {
    if (v.size() != r) fail_invalid("vector has wrong arity");
    Row row;
    row.reserve(static_cast<std::size_t>(r) * n);
    for (elt x : v) {
      if (!tw.contains(x)) fail_invalid("vector entry outside F_(q^n)");
      auto c = tw.coords(x);
      row.insert(row.end(), c.begin(), c.end());
    }
    rows.push_back(std::move(row));
  }
  rref(tw.field(), rows);
  VecSubspace V;
  V.tw_ = tw;
  V.r_ = r;
  V.rows_ = std::move(rows);
  return V;
}

VecSubspace VecSubspace::product(const std::vector<Subspace>& factors) {
  if (factors.empty()) fail_invalid("product of no factors");
  const Tower& tw = factors[0].tower();
  const unsigned r = static_cast<unsigned>(factors.size());
  const unsigned n = tw.degree();
  Mat rows;
  for (unsigned i = 0; i < r; ++i) {
    if (!factors[i].tower().same_structure(tw)) fail_invalid("product factors over different fields");
    for (const auto& frow : factors[i].rows()) {
      Row row(static_cast<std::size_t>(r) * n, 0);
      std::copy(frow.begin(), frow.end(), row.begin() + static_cast<std::size_t>(i) * n);
      rows.push_back(std::move(row));
    }
  }
  rref(tw.field(), rows);  // already echelon up to row order; canonicalize anyway
  VecSubspace V;
  V.tw_ = tw;
  V.r_ = r;
  V.rows_ = std::move(rows);
  return V;
}

std::vector<std::vector<elt>> VecSubspace::vector_basis() const {
  const unsigned n = tw_.degree();
  std::vector<std::vector<elt>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<elt> v(r_);
    for (unsigned i = 0; i < r_; ++i) {
      std::span<const elt> block(row.data() + static_cast<std::size_t>(i) * n, n);
      v[i] = tw_.from_coords(block);
    }
    out.push_back(std::move(v));
  }
  return out;
}

VecSubspace VecSubspace::apply(const Mat& map) const {
  const Field& F = tw_.field();
  if (map.size() != r_) fail_invalid("map has wrong shape");
  std::vector<std::vector<elt>> imgs;
  for (const auto& v : vector_basis()) {
    std::vector<elt> y(r_, 0);
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned j = 0; j < r_; ++j) y[i] = F.add(y[i], F.mul(map[i][j], v[j]));
    imgs.push_back(std::move(y));
  }
  VecSubspace out = span_vectors(tw_, r_, imgs);
  if (out.dim() != dim()) fail_invalid("apply: map is singular on the subspace");
  return out;
}

int intersect_dim(const VecSubspace& a, const VecSubspace& b) {
  if (!a.tower().same_structure(b.tower()) || a.arity() != b.arity())
    fail_invalid("intersection of incompatible vector subspaces");
  Mat stack = a.rows();
  stack.insert(stack.end(), b.rows().begin(), b.rows().end());
  const unsigned r = rank_of(a.tower().field(), std::move(stack));
  return static_cast<int>(a.dim() + b.dim()) - static_cast<int>(r);
}

ProductSpace product_space(const Family& F) {
  ProductSpace P;
  P.factors = F.subs;
  P.space = VecSubspace::product(F.subs);
  return P;
}

WeightSpectrum weight_spectrum(const VecSubspace& V, std::uint64_t cap) {
  const Tower& tw = V.tower();
  const Field& F = tw.field();
  const std::uint64_t q = tw.q();
  const unsigned k = V.dim();
  if (k == 0) fail_invalid("weight spectrum of the zero subspace");
  if (checked_pow(q, k, cap) > cap)
    fail(status_code::cap_exceeded,
         "enumeration of q^k = " + std::to_string(q) + "^" + std::to_string(k) +
             " vectors exceeds the cap " + std::to_string(cap));

  // multiplicity per projective point; points of weight w contribute q^w - 1
  const unsigned bits = std::bit_width(F.order() - 1);
  const bool packable = static_cast<std::uint64_t>(bits) * V.arity() <= 64;
  std::unordered_map<std::uint64_t, std::uint64_t> packed;
  std::map<std::vector<elt>, std::uint64_t> generic;
  V.for_each_nonzero([&](const std::vector<elt>& vec) {
    auto pt = canonical_point(F, vec);
    if (packable) {
      std::uint64_t key = 0;
      for (elt x : pt) key = (key << bits) | x;
      ++packed[key];
    } else {
      ++generic[pt];
    }
  });

  WeightSpectrum S;
  S.rank = k;
  auto account = [&](std::uint64_t mult) {
    // mult = q^w - 1
    unsigned w = 0;
    std::uint64_t p = 1;
    while (p - 1 < mult) {
      p *= q;
      ++w;
    }
    if (p - 1 != mult) fail_internal("point multiplicity is not of the form q^w - 1");
    ++S.counts[w];
    ++S.size;
  };
  if (packable)
    for (const auto& [key, mult] : packed) account(mult);
  else
    for (const auto& [key, mult] : generic) account(mult);

  // the exact point-count identities and the size bound
  std::uint64_t lhs = 0;
  for (const auto& [w, nw] : S.counts) lhs += nw * geom_sum(q, w);
  const bool eq4 = lhs == geom_sum(q, k);
  std::uint64_t total = 0;
  for (const auto& [w, nw] : S.counts) total += nw;
  const bool eq3 = total == S.size;
  const bool eq2 = S.size <= geom_sum(q, k);
  S.identities_ok = eq3 && eq4 && eq2;
  S.n0 = projective_point_count(tw.top_order(), V.arity()) - S.size;
  return S;
}

HeavyReport heavy_points_analysis(const VecSubspace& V, std::uint64_t cap) {
  const Tower& tw = V.tower();
  const Field& F = tw.field();
  const unsigned n = tw.degree();
  const unsigned r = V.arity();

  HeavyReport rep;
  rep.spectrum = weight_spectrum(V, cap);

  // re-enumerate to recover the heavy points themselves
  const unsigned bits = std::bit_width(F.order() - 1);
  const bool packable = static_cast<std::uint64_t>(bits) * r <= 64;
  std::unordered_map<std::uint64_t, std::uint64_t> packed;
  std::map<std::vector<elt>, std::uint64_t> generic;
  V.for_each_nonzero([&](const std::vector<elt>& vec) {
    auto pt = canonical_point(F, vec);
    if (packable) {
      std::uint64_t key = 0;
      for (elt x : pt) key = (key << bits) | x;
      ++packed[key];
    } else {
      ++generic[pt];
    }
  });
  const std::uint64_t q = tw.q();
  auto weight_of = [&](std::uint64_t mult) {
    unsigned w = 0;
    std::uint64_t p = 1;
    while (p - 1 < mult) {
      p *= q;
      ++w;
    }
    return w;
  };
  auto push_heavy = [&](std::vector<elt> pt, std::uint64_t mult) {
    const unsigned w = weight_of(mult);
    if (w >= 2) rep.heavy.push_back(HeavyPoint{std::move(pt), w});
  };
  if (packable) {
    for (const auto& [key, mult] : packed) {
      std::vector<elt> pt(r);
      std::uint64_t k = key;
      for (unsigned i = 0; i < r; ++i) {
        pt[r - 1 - i] = k & ((std::uint64_t{1} << bits) - 1);
        k >>= bits;
      }
      push_heavy(std::move(pt), mult);
    }
  } else {
    for (const auto& [pt, mult] : generic) push_heavy(pt, mult);
  }
  std::sort(rep.heavy.begin(), rep.heavy.end(),
            [](const HeavyPoint& a, const HeavyPoint& b) { return a.point < b.point; });

  // are the heavy points exactly the coordinate points?
  std::vector<std::vector<elt>> coord_points;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<elt> e(r, 0);
    e[i] = 1;
    coord_points.push_back(std::move(e));
  }
  std::vector<std::vector<elt>> heavy_pts;
  for (const auto& h : rep.heavy) heavy_pts.push_back(h.point);
  std::sort(coord_points.begin(), coord_points.end());
  rep.exactly_coordinate_points = heavy_pts == coord_points;

  rep.weight_bound_ok = std::all_of(rep.heavy.begin(), rep.heavy.end(), [&](const HeavyPoint& h) {
    return 2 * h.weight <= n;
  });
  rep.rank_bound_ok = 2 * V.dim() <= static_cast<std::uint64_t>(r) * n;
  return rep;
}

std::uint64_t sidon_linearset_size(const Subspace& U, std::uint64_t cap) {
  const auto verdict = is_sidon(U, SidonRoute::orbit_intersection);
  if (!verdict.result) fail_invalid("sidon_linearset_size: input is not a Sidon space");
  const auto spec = weight_spectrum(VecSubspace::product({U, U}), cap);
  const std::uint64_t q = U.tower().q();
  const std::uint64_t qk = pow_u64(q, U.dim());
  const std::uint64_t expected = (qk - 1) / (q - 1) * (qk - q) + q + 1;
  if (spec.size != expected) fail_internal("Sidon linear-set size differs from the closed form");
  return spec.size;
}

HyperplaneWeights hyperplane_weights(const VecSubspace& V, std::uint64_t cap) {
  const Tower& tw = V.tower();
  const unsigned n = tw.degree();
  const unsigned r = V.arity();
  if (r < 2) fail_invalid("hyperplane weights need r >= 2");
  if (n % 2 != 0 || 2 * V.dim() != static_cast<std::uint64_t>(r) * n)
    fail_invalid("hyperplane weights need rank exactly r*n/2");
  const auto rep = heavy_points_analysis(V, cap);
  if (!rep.exactly_coordinate_points)
    fail_invalid("hyperplane weights need exactly the coordinate points heavy");
  for (const auto& h : rep.heavy)
    if (h.weight != n / 2) fail_invalid("hyperplane weights need coordinate weights n/2");

  // every hyperplane is the polar of a unique point; weight transfer adds
  // rank - n to the point weight
  HyperplaneWeights H;
  const unsigned shift = V.dim() - n;  // r*n/2 - n
  H.w_low = shift;
  H.w_mid = shift + 1;
  H.w_high = shift + n / 2;
  H.total = projective_point_count(tw.top_order(), r);
  H.n_high = r;
  auto it = rep.spectrum.counts.find(1);
  H.n_mid = it == rep.spectrum.counts.end() ? 0 : it->second;
  H.n_low = H.total - H.n_high - H.n_mid;
  return H;
}

NormalizeResult structure_normalize(const VecSubspace& W,
                                    const std::vector<std::vector<elt>>& points) {
  const Tower& tw = W.tower();
  const Field& F = tw.field();
  const unsigned r = W.arity();
  const unsigned n = tw.degree();
  const unsigned k = W.dim();
  if (points.size() != r) fail_invalid("structure_normalize expects r points");
  if (k > static_cast<std::uint64_t>(r - 1) * n) fail_invalid("rank exceeds (r-1) n");

  Mat V(r, Row(r, 0));
  for (unsigned j = 0; j < r; ++j) {
    if (points[j].size() != r) fail_invalid("point has wrong arity");
    for (unsigned i = 0; i < r; ++i) V[i][j] = points[j][i];
  }
  auto M = invert(F, V);
  if (!M) fail_invalid("structure_normalize: points are dependent");

  const VecSubspace U = W.apply(*M);

  // factor i: the vectors of U supported on coordinate block i alone
  std::vector<Subspace> factors;
  unsigned dim_sum = 0;
  const auto basis = U.vector_basis();
  for (unsigned i = 0; i < r; ++i) {
    Mat outside(U.dim());
    for (unsigned row = 0; row < U.dim(); ++row) {
      for (unsigned b = 0; b < r; ++b) {
        if (b == i) continue;
        const auto& full = U.rows()[row];
        outside[row].insert(outside[row].end(), full.begin() + static_cast<std::size_t>(b) * n,
                            full.begin() + static_cast<std::size_t>(b + 1) * n);
      }
    }
    const Mat combos = left_nullspace(F, outside);
    std::vector<elt> gens;
    for (const auto& c : combos) {
      elt x = 0;
      for (unsigned j = 0; j < U.dim(); ++j) x = F.add(x, F.mul(c[j], basis[j][i]));
      gens.push_back(x);
    }
    factors.push_back(Subspace::span_elements(tw, gens));
    dim_sum += factors.back().dim();
  }
  if (dim_sum != k)
    fail_invalid("structure_normalize: point weights do not sum to the rank");
  if (VecSubspace::product(factors) != U) fail_internal("factor product mismatch");

  NormalizeResult out;
  out.collineation = *M;
  out.product = ProductSpace{VecSubspace::product(factors), factors};

  if (k <= n) {
    // scalars making the factor sum direct inside F_{q^n}, greedy over cosets
    std::vector<elt> lambdas(r, 1);
    Subspace S = factors[0];
    for (unsigned i = 1; i < r; ++i) {
      bool found = false;
      for (elt rep : tw.coset_reps()) {
        if (intersect_dim(S, factors[i].scaled(rep)) == 0) {
          lambdas[i] = rep;
          S = S.sum(factors[i].scaled(rep));
          found = true;
          break;
        }
      }
      if (!found) fail_internal("no scalar makes the factor sum direct");
    }
    out.direct_sum_scalars = std::move(lambdas);
  }
  return out;
}

ProjectionReport projection_form(const std::vector<Subspace>& parts) {
  ProjectionReport rep;
  rep.polys = projection_polys(parts);
  const Tower& tw = parts[0].tower();
  const Field& F = tw.field();
  const unsigned r = static_cast<unsigned>(parts.size());

  LinPoly sum = LinPoly::zero(tw);
  for (const auto& p : rep.polys) sum = sum.add(p);
  rep.sum_is_identity = sum == LinPoly::identity(tw);

  rep.idempotent = true;
  rep.mutually_annihilating = true;
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = 0; j < r; ++j) {
      const LinPoly comp = rep.polys[i].compose(rep.polys[j]);
      if (i == j) {
        if (!(comp == rep.polys[i])) rep.idempotent = false;
      } else if (!comp.is_zero()) {
        rep.mutually_annihilating = false;
      }
    }
  }

  rep.images_match = true;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<elt> img;
    for (elt b : tw.power_basis()) img.push_back(rep.polys[i].eval(b));
    if (Subspace::span_elements(tw, img) != parts[i]) rep.images_match = false;
  }

  // the projection form is the product image under the map stacking the
  // all-ones row on top of the identity rows 2..r
  if (r >= 1) {
    Mat map(r, Row(r, 0));
    for (unsigned j = 0; j < r; ++j) map[0][j] = 1;
    for (unsigned i = 1; i < r; ++i) map[i][i] = 1;
    const VecSubspace image = VecSubspace::product(parts).apply(map);
    std::vector<std::vector<elt>> got;
    image.for_each_nonzero([&](const std::vector<elt>& v) { got.push_back(v); });
    std::vector<std::vector<elt>> want;
    for (elt x = 1; x < F.order(); ++x) {
      std::vector<elt> v(r);
      v[0] = x;
      for (unsigned i = 1; i < r; ++i) v[i] = rep.polys[i].eval(x);
      want.push_back(std::move(v));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    rep.set_equality = got == want;
  }
  return rep;
}

}  // namespace msidon
