#pragma once

#include <vector>

#include "tower.hpp"

namespace msidon {

class Subspace;

// A q^s-polynomial acting on the tower's F_{q^T} as an F_q-linear map.
// Internally kept in q-form (one coefficient per exponent q^u, u < T); the
// declared twist is metadata for degree bookkeeping.
class LinPoly {
 public:
  LinPoly() = default;
  static LinPoly zero(const Tower& dom, unsigned twist = 1);
  static LinPoly identity(const Tower& dom);
  static LinPoly scalar(const Tower& dom, elt a);  // a*x
  static LinPoly monomial(const Tower& dom, elt a, unsigned i, unsigned twist);  // a x^(q^(i*twist))
  static LinPoly from_twist_coeffs(const Tower& dom, unsigned twist, std::span<const elt> coeffs);
  static LinPoly from_q_coeffs(const Tower& dom, std::vector<elt> coeffs);

  const Tower& domain() const { return dom_; }
  unsigned twist() const { return twist_; }
  const std::vector<elt>& q_coeffs() const { return c_; }
  // coefficient list a_0..a_l indexed by the declared twist; requires
  // gcd(twist, T) = 1
  std::vector<elt> twist_coeffs() const;

  bool is_zero() const;
  int q_degree() const;      // -1 for the zero polynomial
  int twist_degree() const;  // requires gcd(twist, T) = 1

  elt eval(elt x) const;
  LinPoly add(const LinPoly& o) const;
  LinPoly sub(const LinPoly& o) const;
  LinPoly negated() const;
  LinPoly scaled(elt a) const;
  LinPoly compose(const LinPoly& g) const;  // (*this) after g, reduced mod x^(q^T) - x

  Mat matrix() const;  // T x T over F_q wrt the tower power basis

  // Kernel dimension over F_q via the matrix route. When gcd(twist, T) = 1
  // the bound dim <= twist_degree is checked, and in the equality case the
  // norm identity between leading and trailing coefficients.
  unsigned kernel_dim() const;

  bool operator==(const LinPoly& o) const;

 private:
  Tower dom_;
  unsigned twist_ = 1;
  std::vector<elt> c_;
};

// i-th projection maps of a direct-sum decomposition of the whole F_{q^T},
// built from the dual basis of the concatenated part bases. For each i:
// image = parts[i], identity on parts[i], and the maps sum to the identity.
std::vector<LinPoly> projection_polys(const std::vector<Subspace>& parts);

}  // namespace msidon
