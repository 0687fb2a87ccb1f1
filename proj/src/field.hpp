#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "util.hpp"

namespace msidon {

// Elements of GF(p^m) are coefficient vectors over GF(p) with respect to the
// power basis of the modulus root, serialized as the base-p integer of that
// vector. All arithmetic goes through the owning Field.
using elt = std::uint64_t;

class Field {
 public:
  static constexpr std::uint64_t default_table_cap = std::uint64_t{1} << 20;

  // Deterministic modulus: the lexicographically smallest monic irreducible of
  // degree m, coefficients compared low-degree-first.
  static std::shared_ptr<const Field> make(unsigned p, unsigned m,
                                           std::uint64_t table_cap = default_table_cap);
  // modulus given as ascending coefficients c0,...,cm with cm == 1.
  static std::shared_ptr<const Field> make(unsigned p, unsigned m, std::vector<unsigned> modulus,
                                           std::uint64_t table_cap = default_table_cap);
  // "gf(p^m;c0,c1,...,1)"
  static std::shared_ptr<const Field> parse(std::string_view spec,
                                            std::uint64_t table_cap = default_table_cap);
  std::string spec() const;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return mod_; }
  elt root() const { return m_ == 1 ? 0 : p_; }  // class of x
  elt primitive() const { return gen_; }
  bool has_tables() const { return !exp_.empty(); }

  bool valid(elt a) const { return a < order_; }
  void check(elt a) const;

  elt add(elt a, elt b) const;
  elt sub(elt a, elt b) const;
  elt neg(elt a) const;
  elt mul(elt a, elt b) const;
  elt inv(elt a) const;
  elt div(elt a, elt b) const { return mul(a, inv(b)); }
  elt pow(elt a, std::uint64_t e) const;
  elt frob(elt a, unsigned j) const;  // a^(p^j)

  // discrete log base the primitive element; requires tables and a != 0
  std::uint64_t log(elt a) const;
  elt exp(std::uint64_t i) const;

  std::vector<unsigned> digits(elt a) const;
  elt from_digits(std::span<const unsigned> d) const;

  // subfields over the prime field
  bool in_prime_subfield(elt a, unsigned d) const;  // GF(p^d), d | m

  std::uint64_t mul_order(elt a) const;  // multiplicative order, a != 0
  bool is_primitive(elt a) const;

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus, std::uint64_t table_cap);

  elt mul_poly(elt a, elt b) const;  // table-free path

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint64_t order_ = 0;
  std::vector<unsigned> mod_;  // ascending, size m+1, monic
  elt gen_ = 0;
  std::vector<std::uint64_t> ppow_;  // p^0..p^m
  std::vector<std::uint64_t> order_factors_;
  std::vector<elt> exp_;           // exp_[i] = gen^i, size order-1 when tabled
  std::vector<std::uint64_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);
// q = p^e with p prime; fails otherwise
std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q);

}  // namespace msidon
