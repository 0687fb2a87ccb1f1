#include "subspace.hpp"

#include <algorithm>

namespace msidon {

Subspace Subspace::zero(const Tower& tw) {
  Subspace s;
  s.tw_ = tw;
  return s;
}

Subspace Subspace::span_elements(const Tower& tw, std::span<const elt> gens) {
  Mat rows;
  rows.reserve(gens.size());
  for (elt g : gens) {
    if (!tw.contains(g)) fail_invalid("span: element outside F_(q^T)");
    rows.push_back(tw.coords(g));
  }
  rref(tw.field(), rows);
  Subspace s;
  s.tw_ = tw;
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::from_rows(const Tower& tw, Mat rows) {
  for (const auto& r : rows) {
    if (r.size() != tw.degree()) fail_invalid("basis row has wrong length");
    for (elt x : r)
      if (!tw.in_base(x)) fail_invalid("basis entry outside F_q");
  }
  rref(tw.field(), rows);
  Subspace s;
  s.tw_ = tw;
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::subfield(const Tower& tw, unsigned d) {
  if (d < 1 || tw.degree() % d != 0) fail_invalid("subfield degree must divide extension degree");
  const Field& F = tw.field();
  std::vector<elt> gens(d);
  elt y = tw.subfield_gen(d);
  gens[0] = 1;
  for (unsigned i = 1; i < d; ++i) gens[i] = F.mul(gens[i - 1], y);
  return span_elements(tw, gens);
}

std::vector<elt> Subspace::basis_elements() const {
  std::vector<elt> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(tw_.from_coords(r));
  return out;
}

bool Subspace::contains(elt x) const {
  if (!tw_.contains(x)) return false;
  return in_row_space(tw_.field(), rows_, tw_.coords(x));
}

std::vector<elt> Subspace::elements() const {
  const Field& F = tw_.field();
  std::vector<elt> cur{0};
  for (elt b : basis_elements()) {
    std::vector<elt> next;
    next.reserve(cur.size() * tw_.base_elements().size());
    for (elt lam : tw_.base_elements()) {
      const elt lb = F.mul(lam, b);
      for (elt x : cur) next.push_back(F.add(x, lb));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<elt> Subspace::class_reps() const {
  std::vector<elt> reps;
  for (elt x : elements()) {
    if (x == 0) continue;
    if (tw_.class_rep(x) == x) reps.push_back(x);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

Subspace Subspace::scaled(elt alpha) const {
  if (alpha == 0) fail_invalid("scalar multiple by zero");
  const Field& F = tw_.field();
  std::vector<elt> gens;
  gens.reserve(rows_.size());
  for (elt b : basis_elements()) gens.push_back(F.mul(alpha, b));
  return span_elements(tw_, gens);
}

Subspace Subspace::frob_image_p(unsigned j) const {
  const Field& F = tw_.field();
  std::vector<elt> gens;
  gens.reserve(rows_.size());
  for (elt b : basis_elements()) gens.push_back(F.frob(b, j));
  Subspace img = span_elements(tw_, gens);
  if (img.dim() != dim()) fail_internal("automorphism image changed the dimension");
  return img;
}

Subspace Subspace::frob_image_q(unsigned j) const { return frob_image_p(j * tw_.base_degree()); }

Subspace Subspace::sum(const Subspace& o) const {
  if (!tw_.same_structure(o.tw_)) fail_invalid("sum of subspaces over different fields");
  Mat rows = rows_;
  rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
  return from_rows(tw_, std::move(rows));
}

Subspace Subspace::product_span(const Subspace& o) const {
  if (!tw_.same_structure(o.tw_)) fail_invalid("product of subspaces over different fields");
  const Field& F = tw_.field();
  std::vector<elt> gens;
  for (elt a : basis_elements())
    for (elt b : o.basis_elements()) gens.push_back(F.mul(a, b));
  return span_elements(tw_, gens);
}

std::vector<elt> Subspace::quotient_set() const {
  if (is_zero()) fail_invalid("quotient set of the zero subspace");
  const Field& F = tw_.field();
  auto els = elements();
  std::vector<elt> out;
  out.reserve(els.size() * els.size());
  out.push_back(0);
  for (elt v : els) {
    if (v == 0) continue;
    const elt vi = F.inv(v);
    for (elt u : els) {
      if (u == 0) continue;
      out.push_back(F.mul(u, vi));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitInfo Subspace::orbit_info() const {
  if (is_zero()) fail_invalid("orbit of the zero subspace");
  const unsigned T = tw_.degree();
  for (unsigned d : divisors_desc(T)) {
    if (dim() % d != 0) continue;
    if (d == 1 || scaled(tw_.subfield_gen(d)) == *this) {
      OrbitInfo info;
      info.stabilizer_degree = d;
      info.orbit_size = (tw_.top_order() - 1) / (pow_u64(tw_.q(), d) - 1);
      return info;
    }
  }
  fail_internal("orbit_info: no stabilizer degree found");
}

std::string Subspace::key() const {
  std::string s;
  s.reserve(rows_.size() * tw_.degree() * 8 + 8);
  auto put = [&s](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      s.push_back(static_cast<char>(v & 0xff));
      v >>= 8;
    }
  };
  put(rows_.size());
  for (const auto& r : rows_)
    for (elt x : r) put(x);
  return s;
}

int intersect_dim(const Subspace& a, const Subspace& b) {
  if (!a.tower().same_structure(b.tower())) fail_invalid("intersection over different fields");
  Mat stack = a.rows();
  stack.insert(stack.end(), b.rows().begin(), b.rows().end());
  const unsigned r = rank_of(a.tower().field(), std::move(stack));
  return static_cast<int>(a.dim() + b.dim()) - static_cast<int>(r);
}

unsigned subspace_distance(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - 2 * static_cast<unsigned>(intersect_dim(a, b));
}

}  // namespace msidon
