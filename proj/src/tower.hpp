#pragma once

#include <memory>
#include <mutex>
#include <span>

#include "field.hpp"
#include "linalg.hpp"

namespace msidon {

// The F_q-structure on a subfield F_{q^T} of GF(p^m): q = p^e with e | m and
// T | m/e. Subspaces, linearized polynomials and codes all live relative to a
// Tower. Towers are immutable and cheap to copy.
class Tower {
 public:
  Tower() = default;
  // top_degree == 0 means the full field, T = m/e.
  Tower(FieldPtr field, unsigned base_degree_e, unsigned top_degree = 0);

  const Field& field() const { return *impl_->F; }
  FieldPtr field_ptr() const { return impl_->F; }
  std::uint64_t q() const { return impl_->q; }
  unsigned base_degree() const { return impl_->e; }
  unsigned degree() const { return impl_->T; }  // n of F_{q^n}/F_q at this level
  std::uint64_t top_order() const { return impl_->top_order; }

  elt zeta() const { return impl_->zeta; }  // generator of F_q^*
  elt gen() const { return impl_->gen; }    // generator of F_{q^T}^*
  const std::vector<elt>& base_elements() const { return impl_->base_els; }  // all of F_q, ascending
  const std::vector<elt>& power_basis() const { return impl_->basis; }

  bool in_base(elt a) const { return field().frob(a, impl_->e) == a; }
  bool contains(elt a) const { return field().frob(a, impl_->e * impl_->T) == a; }
  bool in_subfield(elt a, unsigned d) const;  // F_{q^d}, d | T
  elt subfield_gen(unsigned d) const;

  std::vector<elt> coords(elt a) const;  // F_q-coordinates wrt power_basis()
  elt from_coords(std::span<const elt> c) const;

  elt frob_q(elt a, long j) const;  // a^(q^j)
  elt norm_to(elt a, unsigned d) const;
  elt trace_to(elt a, unsigned d) const;

  // representatives of F_{q^T}^* / F_q^*: gen^0, gen^1, ..., index 0 is the
  // class of F_q^*
  const std::vector<elt>& coset_reps() const;
  std::uint64_t coset_count() const { return (impl_->top_order - 1) / (impl_->q - 1); }
  elt class_rep(elt a) const;  // smallest element of a F_q^*

  // unique dual basis wrt Tr_{q^T/q}
  std::vector<elt> dual_basis(std::span<const elt> basis) const;

  Tower subtower(unsigned d) const;  // the F_q-structure on F_{q^d}, d | T

  bool same_structure(const Tower& o) const {
    return same_field(field(), o.field()) && impl_->e == o.impl_->e && impl_->T == o.impl_->T;
  }
  // same ambient field and base F_q (levels may differ)
  bool same_base(const Tower& o) const {
    return same_field(field(), o.field()) && impl_->e == o.impl_->e;
  }

  static bool same_field(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree() &&
           a.modulus() == b.modulus();
  }
  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl {
    FieldPtr F;
    unsigned e = 1;
    unsigned T = 1;
    std::uint64_t q = 0;
    std::uint64_t top_order = 0;
    elt zeta = 1;
    elt gen = 1;
    std::vector<elt> base_els;
    std::vector<elt> basis;
    // F_p-solver taking an element of F_{q^T} to its (e*T) prime-field
    // coordinates over the basis {zeta^j * basis_i}
    Mat coord_rref;                 // RREF of [M | I_m] over F_p
    std::vector<int> pivot_of_col;  // column -> pivot row in coord_rref
    mutable std::vector<elt> reps;  // lazily built coset representatives
    mutable std::once_flag reps_once;
  };
  std::shared_ptr<Impl> impl_;
};

}  // namespace msidon
