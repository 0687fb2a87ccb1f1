#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linpoly.hpp"
#include "subspace.hpp"

namespace msidon {

struct Family {
  Tower tw;
  std::vector<Subspace> subs;
  unsigned r() const { return static_cast<unsigned>(subs.size()); }
  std::vector<unsigned> dims() const;
};

Family make_family(Tower tw, std::vector<Subspace> subs);

// Negative verdicts always carry the reason.
struct Witness {
  std::string kind;            // "stabilizer", "orbit-overlap", "intersection", "quadruple", ...
  std::vector<int> indices;    // subspace indices involved
  std::vector<elt> elements;   // alpha, or the quadruple (a, b, c, d), ...
  unsigned value = 0;          // e.g. offending dimension or stabilizer degree
};

struct Verdict {
  bool result = false;
  std::string route;
  std::optional<Witness> witness;
};

enum class SidonRoute { orbit_intersection, definitional };

Verdict is_sidon(const Subspace& U, SidonRoute route);
Verdict is_multi_sidon(const Family& F, unsigned threads = 1);
Verdict is_weak_multi_sidon(const Family& F);

// Theorem-level equivalent conditions on the family, exposed separately so the
// three-way agreement can be tested directly:
//   cond_quotient:      U_i U_i^{-1} and U_j U_j^{-1} meet exactly in F_q
//   cond_intersection:  dim(U_i ^ alpha U_j) <= 1 for all alpha, i != j
bool cond_quotient(const Family& F);
bool cond_intersection(const Family& F);

struct SpanClassReport {
  std::vector<unsigned> square_dims;  // dim <U_i^2> per factor
  std::uint64_t total = 0;            // sum of the above
  std::uint64_t lower = 0;            // 2 sum k_i
  std::uint64_t upper = 0;            // sum C(k_i + 1, 2)
  bool minimum = false;
  bool maximum = false;
  bool bounds_apply = false;  // all k_i >= 3
  bool bounds_ok = true;      // lower <= total <= upper (when they apply)
};
SpanClassReport span_class(const Family& F);

struct CanonicalForm {
  Tower tw;                    // ambient, degree n = 2t
  Tower sub;                   // F_{q^t} level
  unsigned t = 0;
  std::vector<elt> lambdas;    // lambda_i U_i = W_{f_i, eta_i}
  std::vector<elt> etas;
  std::vector<LinPoly> fs;     // f_i over F_{q^t}
  std::vector<elt> eta_a, eta_b;  // eta_i^2 = a_i eta_i + b_i
  Mat A, B;                    // eta_i = A[i][j] eta_j + B[i][j]
};

CanonicalForm canonical_form(const Family& F, const std::vector<elt>* etas = nullptr);
// reconstructs W_{f, eta} = {x + eta f(x) : x in F_{q^t}} in the ambient tower
Subspace w_space(const Tower& tw, const LinPoly& f, elt eta);

Verdict poly_criterion(const CanonicalForm& C);

struct EqWitness {
  std::vector<unsigned> sigma;  // B_i = lambda_i * A_{sigma[i]}^(p^rho_exp)
  std::vector<elt> lambdas;
  unsigned rho_exp = 0;  // exponent j of the automorphism x -> x^(p^j)
};

enum class AutSet { all, q_powers };

struct EqResult {
  enum class Kind { equivalent, inequivalent, hypothesis_violation } kind;
  std::optional<EqWitness> witness;
  std::optional<Witness> hypothesis_witness;
};

// Witness search for B_i = lambda_i A_{sigma(i)}^rho with rho restricted to
// the given automorphism set; no hypothesis checking.
std::optional<EqWitness> orbit_match_search(const Family& A, const Family& B, AutSet auts);

// Equivalence of families under the product criterion; both families must
// satisfy the pairwise intersection hypothesis, which is verified first and
// reported distinctly from inequivalence.
EqResult family_equivalence(const Family& A, const Family& B, AutSet auts = AutSet::all);

bool validate_equivalence_witness(const Family& A, const Family& B, const EqWitness& w);

}  // namespace msidon
