#pragma once

#include <string>
#include <vector>

#include "tower.hpp"

namespace msidon {

struct OrbitInfo {
  unsigned stabilizer_degree = 1;  // largest d with U an F_{q^d}-subspace
  std::uint64_t orbit_size = 0;    // (q^n - 1) / (q^d - 1)
};

// An F_q-subspace of the tower's F_{q^T}, stored as the reduced row echelon
// basis matrix over F_q wrt the tower power basis. Equal subspaces have
// identical matrices.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Tower& tw);
  static Subspace span_elements(const Tower& tw, std::span<const elt> gens);
  static Subspace from_rows(const Tower& tw, Mat rows);
  static Subspace subfield(const Tower& tw, unsigned d);  // F_{q^d}, d | T

  const Tower& tower() const { return tw_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const Mat& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }

  std::vector<elt> basis_elements() const;
  bool contains(elt x) const;
  std::vector<elt> elements() const;    // all q^k elements, 0 included
  std::vector<elt> class_reps() const;  // canonical F_q^*-class representatives, sorted

  Subspace scaled(elt alpha) const;
  Subspace frob_image_p(unsigned j) const;  // x -> x^(p^j)
  Subspace frob_image_q(unsigned j) const;  // x -> x^(q^j)
  Subspace sum(const Subspace& o) const;
  Subspace product_span(const Subspace& o) const;  // span of pairwise products

  std::vector<elt> quotient_set() const;  // {u v^{-1}}, 0 included, sorted
  OrbitInfo orbit_info() const;

  bool operator==(const Subspace& o) const { return rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  std::string key() const;  // canonical serialization, usable as hash key

 private:
  Tower tw_;
  Mat rows_;
};

int intersect_dim(const Subspace& a, const Subspace& b);
unsigned subspace_distance(const Subspace& a, const Subspace& b);

}  // namespace msidon
