#include "linpoly.hpp"

#include <algorithm>

#include "subspace.hpp"

namespace msidon {

LinPoly LinPoly::zero(const Tower& dom, unsigned twist) {
  LinPoly f;
  f.dom_ = dom;
  f.twist_ = twist == 0 ? 1 : twist;
  f.c_.assign(dom.degree(), 0);
  return f;
}

LinPoly LinPoly::identity(const Tower& dom) { return scalar(dom, 1); }

LinPoly LinPoly::scalar(const Tower& dom, elt a) {
  LinPoly f = zero(dom);
  if (!dom.contains(a)) fail_invalid("coefficient outside the domain field");
  f.c_[0] = a;
  return f;
}

LinPoly LinPoly::monomial(const Tower& dom, elt a, unsigned i, unsigned twist) {
  LinPoly f = zero(dom, twist);
  if (!dom.contains(a)) fail_invalid("coefficient outside the domain field");
  f.c_[(static_cast<std::uint64_t>(i) * f.twist_) % dom.degree()] = a;
  return f;
}

LinPoly LinPoly::from_twist_coeffs(const Tower& dom, unsigned twist, std::span<const elt> coeffs) {
  LinPoly f = zero(dom, twist);
  const Field& F = dom.field();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!dom.contains(coeffs[i])) fail_invalid("coefficient outside the domain field");
    const unsigned u = (static_cast<std::uint64_t>(i) * f.twist_) % dom.degree();
    f.c_[u] = F.add(f.c_[u], coeffs[i]);
  }
  return f;
}

LinPoly LinPoly::from_q_coeffs(const Tower& dom, std::vector<elt> coeffs) {
  LinPoly f = zero(dom, 1);
  const Field& F = dom.field();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!dom.contains(coeffs[i])) fail_invalid("coefficient outside the domain field");
    const unsigned u = i % dom.degree();
    f.c_[u] = F.add(f.c_[u], coeffs[i]);
  }
  return f;
}

std::vector<elt> LinPoly::twist_coeffs() const {
  const unsigned T = dom_.degree();
  if (gcd_u(twist_, T) != 1) fail_invalid("twist coefficients need gcd(s, T) = 1");
  std::vector<elt> a(T, 0);
  for (unsigned i = 0; i < T; ++i) a[i] = c_[(static_cast<std::uint64_t>(i) * twist_) % T];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

bool LinPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](elt x) { return x == 0; });
}

int LinPoly::q_degree() const {
  for (int u = static_cast<int>(c_.size()) - 1; u >= 0; --u)
    if (c_[u] != 0) return u;
  return -1;
}

int LinPoly::twist_degree() const {
  const unsigned T = dom_.degree();
  if (gcd_u(twist_, T) != 1) fail_invalid("twist degree needs gcd(s, T) = 1");
  int deg = -1;
  for (unsigned i = 0; i < T; ++i)
    if (c_[(static_cast<std::uint64_t>(i) * twist_) % T] != 0) deg = static_cast<int>(i);
  return deg;
}

elt LinPoly::eval(elt x) const {
  if (!dom_.contains(x)) fail_invalid("evaluation point outside the domain field");
  const Field& F = dom_.field();
  elt s = 0;
  for (unsigned u = 0; u < c_.size(); ++u) {
    if (c_[u] == 0) continue;
    s = F.add(s, F.mul(c_[u], dom_.frob_q(x, u)));
  }
  return s;
}

LinPoly LinPoly::add(const LinPoly& o) const {
  if (!dom_.same_structure(o.dom_)) fail_invalid("linearized polynomials over different fields");
  LinPoly r = *this;
  const Field& F = dom_.field();
  for (unsigned u = 0; u < c_.size(); ++u) r.c_[u] = F.add(c_[u], o.c_[u]);
  if (twist_ != o.twist_) r.twist_ = 1;
  return r;
}

LinPoly LinPoly::sub(const LinPoly& o) const { return add(o.negated()); }

LinPoly LinPoly::negated() const {
  LinPoly r = *this;
  const Field& F = dom_.field();
  for (auto& x : r.c_) x = F.neg(x);
  return r;
}

LinPoly LinPoly::scaled(elt a) const {
  if (!dom_.contains(a)) fail_invalid("scalar outside the domain field");
  LinPoly r = *this;
  const Field& F = dom_.field();
  for (auto& x : r.c_) x = F.mul(a, x);
  return r;
}

LinPoly LinPoly::compose(const LinPoly& g) const {
  if (!dom_.same_structure(g.dom_)) fail_invalid("linearized polynomials over different fields");
  const Field& F = dom_.field();
  const unsigned T = dom_.degree();
  LinPoly r = zero(dom_, twist_ == g.twist_ ? twist_ : 1);
  for (unsigned u = 0; u < T; ++u) {
    if (c_[u] == 0) continue;
    for (unsigned v = 0; v < T; ++v) {
      if (g.c_[v] == 0) continue;
      const unsigned w = (u + v) % T;
      r.c_[w] = F.add(r.c_[w], F.mul(c_[u], dom_.frob_q(g.c_[v], u)));
    }
  }
  return r;
}

Mat LinPoly::matrix() const {
  const unsigned T = dom_.degree();
  Mat M(T, Row(T, 0));
  for (unsigned u = 0; u < T; ++u) {
    auto col = dom_.coords(eval(dom_.power_basis()[u]));
    for (unsigned row = 0; row < T; ++row) M[row][u] = col[row];
  }
  return M;
}

unsigned LinPoly::kernel_dim() const {
  if (is_zero()) fail_invalid("kernel of the zero polynomial is the whole field");
  const unsigned T = dom_.degree();
  const unsigned nullity = T - rank_of(dom_.field(), matrix());
  if (gcd_u(twist_, T) == 1) {
    const int k = twist_degree();
    if (static_cast<int>(nullity) > k)
      fail_internal("kernel dimension exceeds the twist degree bound");
    if (static_cast<int>(nullity) == k && k > 0) {
      const Field& F = dom_.field();
      const elt a0 = c_[0];
      const elt ak = c_[(static_cast<std::uint64_t>(k) * twist_) % T];
      elt lhs = dom_.norm_to(a0, 1);
      elt rhs = dom_.norm_to(ak, 1);
      if ((static_cast<std::uint64_t>(T) * k) % 2 == 1) rhs = F.neg(rhs);
      if (lhs != rhs) fail_internal("norm identity fails in the full-kernel case");
    }
  }
  return nullity;
}

bool LinPoly::operator==(const LinPoly& o) const {
  return dom_.same_structure(o.dom_) && c_ == o.c_;
}

std::vector<LinPoly> projection_polys(const std::vector<Subspace>& parts) {
  if (parts.empty()) fail_invalid("projection_polys: empty decomposition");
  const Tower& tw = parts[0].tower();
  const Field& F = tw.field();
  const unsigned T = tw.degree();
  std::vector<elt> concat;
  std::vector<std::pair<unsigned, unsigned>> range;  // [begin, end) per part
  for (const auto& U : parts) {
    if (!U.tower().same_structure(tw)) fail_invalid("projection_polys: mixed fields");
    unsigned b = static_cast<unsigned>(concat.size());
    for (elt x : U.basis_elements()) concat.push_back(x);
    range.emplace_back(b, static_cast<unsigned>(concat.size()));
  }
  if (concat.size() != T) fail_invalid("projection_polys: parts do not decompose the field");
  const auto dual = tw.dual_basis(concat);  // fails when the parts are dependent

  std::vector<LinPoly> ps;
  ps.reserve(parts.size());
  for (auto [b, e] : range) {
    std::vector<elt> qc(T, 0);
    for (unsigned l = 0; l < T; ++l) {
      elt s = 0;
      for (unsigned j = b; j < e; ++j)
        s = F.add(s, F.mul(concat[j], tw.frob_q(dual[j], l)));
      qc[l] = s;
    }
    ps.push_back(LinPoly::from_q_coeffs(tw, std::move(qc)));
  }
  return ps;
}

}  // namespace msidon
