#include "tower.hpp"

#include <algorithm>
#include <mutex>

namespace msidon {

Tower::Tower(FieldPtr field, unsigned base_degree_e, unsigned top_degree) {
  if (!field) fail_invalid("tower over null field");
  const unsigned m = field->degree();
  const unsigned e = base_degree_e;
  if (e < 1 || m % e != 0) fail_invalid("base degree must divide the field degree");
  unsigned T = top_degree == 0 ? m / e : top_degree;
  if (T < 1 || m % (e * T) != 0) fail_invalid("subfield F_(q^T) does not exist in this field");

  auto impl = std::make_shared<Impl>();
  impl->F = std::move(field);
  impl->e = e;
  impl->T = T;
  const Field& F = *impl->F;
  impl->q = pow_u64(F.characteristic(), e);
  impl->top_order = pow_u64(impl->q, T);

  impl->zeta = F.pow(F.primitive(), (F.order() - 1) / (impl->q - 1));
  impl->base_els.reserve(impl->q);
  impl->base_els.push_back(0);
  {
    elt cur = 1;
    for (std::uint64_t i = 0; i + 1 < impl->q; ++i) {
      impl->base_els.push_back(cur);
      cur = F.mul(cur, impl->zeta);
    }
    std::sort(impl->base_els.begin(), impl->base_els.end());
  }

  elt w;
  if (T == 1)
    w = 1;
  else if (e * T == m)
    w = F.root();  // the power basis the serialization format refers to
  else
    w = F.pow(F.primitive(), (F.order() - 1) / (impl->top_order - 1));
  impl->basis.resize(T);
  impl->basis[0] = 1;
  for (unsigned i = 1; i < T; ++i) impl->basis[i] = F.mul(impl->basis[i - 1], w);
  impl->gen = T == 1 ? impl->zeta : F.pow(F.primitive(), (F.order() - 1) / (impl->top_order - 1));

  // Left inverse of the F_p-linear map (c_{i,j}) -> sum c_{i,j} zeta^j basis_i,
  // computed once so per-element coordinate extraction is a matrix product.
  const unsigned cols = e * T;
  Mat aug(m, Row(cols + m, 0));
  for (unsigned i = 0; i < T; ++i) {
    elt zp = 1;
    for (unsigned j = 0; j < e; ++j) {
      const elt col_el = F.mul(zp, impl->basis[i]);
      auto d = F.digits(col_el);
      for (unsigned row = 0; row < m; ++row) aug[row][i * e + j] = d[row];
      zp = F.mul(zp, impl->zeta);
    }
  }
  for (unsigned row = 0; row < m; ++row) aug[row][cols + row] = 1;
  auto Fp = Field::make(F.characteristic(), 1);
  rref(*Fp, aug);
  // pivots must be exactly the first `cols` columns; then rows 0..cols-1
  // carry the left inverse in the augmented block
  for (unsigned i = 0; i < cols; ++i)
    for (unsigned j = 0; j < cols; ++j)
      if (aug[i][j] != (i == j ? 1u : 0u)) fail_internal("tower basis is not independent");
  impl->coord_rref.resize(cols);
  for (unsigned i = 0; i < cols; ++i)
    impl->coord_rref[i] = Row(aug[i].begin() + cols, aug[i].end());

  impl_ = std::move(impl);
}

bool Tower::in_subfield(elt a, unsigned d) const {
  if (d < 1 || impl_->T % d != 0) fail_invalid("subfield degree must divide extension degree");
  return field().frob(a, impl_->e * d) == a;
}

elt Tower::subfield_gen(unsigned d) const {
  if (d < 1 || impl_->T % d != 0) fail_invalid("subfield degree must divide extension degree");
  const Field& F = field();
  return F.pow(F.primitive(), (F.order() - 1) / (pow_u64(impl_->q, d) - 1));
}

std::vector<elt> Tower::coords(elt a) const {
  const Field& F = field();
  F.check(a);
  const unsigned p = F.characteristic();
  const unsigned m = F.degree();
  const unsigned e = impl_->e;
  auto d = F.digits(a);
  std::vector<elt> out(impl_->T, 0);
  for (unsigned i = 0; i < impl_->T; ++i) {
    elt coord = 0;
    elt zp = 1;
    for (unsigned j = 0; j < e; ++j) {
      unsigned digit = 0;
      const Row& Lrow = impl_->coord_rref[i * e + j];
      for (unsigned c = 0; c < m; ++c) digit = (digit + static_cast<unsigned>(Lrow[c]) * d[c]) % p;
      for (unsigned rep = 0; rep < digit; ++rep) coord = F.add(coord, zp);
      zp = F.mul(zp, impl_->zeta);
    }
    out[i] = coord;
  }
  return out;
}

elt Tower::from_coords(std::span<const elt> c) const {
  const Field& F = field();
  if (c.size() != impl_->T) fail_invalid("coordinate vector has wrong length");
  elt r = 0;
  for (unsigned i = 0; i < impl_->T; ++i) r = F.add(r, F.mul(c[i], impl_->basis[i]));
  return r;
}

elt Tower::frob_q(elt a, long j) const {
  const long T = impl_->T;
  long jj = ((j % T) + T) % T;
  return field().frob(a, impl_->e * static_cast<unsigned>(jj));
}

elt Tower::norm_to(elt a, unsigned d) const {
  if (d < 1 || impl_->T % d != 0) fail_invalid("norm target degree must divide extension degree");
  if (a == 0) return 0;
  return field().pow(a, (impl_->top_order - 1) / (pow_u64(impl_->q, d) - 1));
}

elt Tower::trace_to(elt a, unsigned d) const {
  if (d < 1 || impl_->T % d != 0) fail_invalid("trace target degree must divide extension degree");
  const Field& F = field();
  elt s = 0;
  for (unsigned i = 0; i < impl_->T / d; ++i) s = F.add(s, frob_q(a, static_cast<long>(d) * i));
  return s;
}

const std::vector<elt>& Tower::coset_reps() const {
  std::call_once(impl_->reps_once, [&] {
    const Field& F = field();
    std::vector<elt> reps(coset_count());
    elt cur = 1;
    for (auto& r : reps) {
      r = cur;
      cur = F.mul(cur, impl_->gen);
    }
    impl_->reps = std::move(reps);
  });
  return impl_->reps;
}

elt Tower::class_rep(elt a) const {
  if (a == 0) return 0;
  const Field& F = field();
  elt best = a;
  for (elt lam : impl_->base_els) {
    if (lam == 0) continue;
    best = std::min(best, F.mul(lam, a));
  }
  return best;
}

std::vector<elt> Tower::dual_basis(std::span<const elt> basis) const {
  const unsigned T = impl_->T;
  if (basis.size() != T) fail_invalid("dual_basis needs a basis of size T");
  const Field& F = field();
  Mat A(T, Row(T, 0));
  for (unsigned i = 0; i < T; ++i) {
    if (!contains(basis[i])) fail_invalid("basis element outside F_(q^T)");
    for (unsigned u = 0; u < T; ++u)
      A[i][u] = trace_to(F.mul(basis[i], impl_->basis[u]), 1);
  }
  auto Ainv = invert(F, A);
  if (!Ainv) fail_invalid("dual_basis: input is linearly dependent");
  std::vector<elt> dual(T);
  for (unsigned j = 0; j < T; ++j) {
    Row y(T);
    for (unsigned u = 0; u < T; ++u) y[u] = (*Ainv)[u][j];
    dual[j] = from_coords(y);
  }
  return dual;
}

Tower Tower::subtower(unsigned d) const {
  if (d < 1 || impl_->T % d != 0) fail_invalid("subtower degree must divide extension degree");
  return Tower(impl_->F, impl_->e, d);
}

}  // namespace msidon
