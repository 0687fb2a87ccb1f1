#pragma once

#include <map>

#include "sidon.hpp"

namespace msidon {

// An F_q-subspace of F_{q^n}^r, stored as a RREF basis matrix of shape
// k x (r*n) over F_q; coordinate blocks follow the tower power basis.
class VecSubspace {
 public:
  VecSubspace() = default;
  static VecSubspace span_vectors(const Tower& tw, unsigned r,
                                  const std::vector<std::vector<elt>>& vecs);
  static VecSubspace product(const std::vector<Subspace>& factors);

  const Tower& tower() const { return tw_; }
  unsigned arity() const { return r_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const Mat& rows() const { return rows_; }

  std::vector<std::vector<elt>> vector_basis() const;  // field-element vectors, length r
  // visits every nonzero vector of the subspace exactly once
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const;

  // image under an invertible r x r matrix over F_{q^n}
  VecSubspace apply(const Mat& map) const;

  bool operator==(const VecSubspace& o) const { return r_ == o.r_ && rows_ == o.rows_; }

 private:
  Tower tw_;
  unsigned r_ = 0;
  Mat rows_;
};

int intersect_dim(const VecSubspace& a, const VecSubspace& b);

struct ProductSpace {
  VecSubspace space;
  std::vector<Subspace> factors;
};
ProductSpace product_space(const Family& F);

struct WeightSpectrum {
  std::map<unsigned, std::uint64_t> counts;  // weight >= 1 -> number of points
  std::uint64_t size = 0;                    // |L_U|
  std::uint64_t n0 = 0;                      // points of weight 0
  unsigned rank = 0;
  bool identities_ok = false;  // the two exact point-count identities
};

WeightSpectrum weight_spectrum(const VecSubspace& V, std::uint64_t cap);

struct HeavyPoint {
  std::vector<elt> point;  // canonical representative, first nonzero coord = 1
  unsigned weight = 0;
};

struct HeavyReport {
  WeightSpectrum spectrum;
  std::vector<HeavyPoint> heavy;        // weight >= 2
  bool exactly_coordinate_points = false;
  bool weight_bound_ok = false;  // every heavy weight <= n/2
  bool rank_bound_ok = false;    // rank <= r*n/2
};

HeavyReport heavy_points_analysis(const VecSubspace& V, std::uint64_t cap);

// |L_{U x U}| for a Sidon space, checked against the closed form
// (q^k-1)/(q-1) (q^k - q) + q + 1.
std::uint64_t sidon_linearset_size(const Subspace& U, std::uint64_t cap);

struct HyperplaneWeights {
  unsigned w_low = 0, w_mid = 0, w_high = 0;
  std::uint64_t n_low = 0, n_mid = 0, n_high = 0;
  std::uint64_t total = 0;  // number of hyperplanes
};

// Dual-hyperplane weight distribution of a maximum-rank linear set with
// exactly the r coordinate heavy points, through the point-to-hyperplane
// weight transfer (no explicit polarity is constructed).
HyperplaneWeights hyperplane_weights(const VecSubspace& V, std::uint64_t cap);

struct NormalizeResult {
  ProductSpace product;
  Mat collineation;  // r x r over F_{q^n}; maps the input onto the product
  std::vector<elt> direct_sum_scalars;  // nonempty when rank <= n
};

// Moves the given r independent heavy points onto the coordinate points and
// extracts the factors. When the rank is at most n, scalars making the factor
// sum direct inside F_{q^n} are found by the greedy scan.
NormalizeResult structure_normalize(const VecSubspace& W,
                                    const std::vector<std::vector<elt>>& points);

struct ProjectionReport {
  std::vector<LinPoly> polys;  // all r projection maps
  bool sum_is_identity = false;
  bool idempotent = false;
  bool mutually_annihilating = false;
  bool images_match = false;
  bool set_equality = false;  // the projection form matches the product image
};

// Projection-map representation of the product linear set of a direct-sum
// decomposition of the whole field; verified exhaustively.
ProjectionReport projection_form(const std::vector<Subspace>& parts);

template <class Fn>
void VecSubspace::for_each_nonzero(Fn&& fn) const {
  const Field& F = tw_.field();
  const unsigned k = dim();
  if (k == 0) return;
  const auto& base = tw_.base_elements();
  const std::uint64_t q = base.size();
  const auto basis = vector_basis();
  // multiples[j][c] = base[c] * basis[j]
  std::vector<std::vector<std::vector<elt>>> multiples(k);
  for (unsigned j = 0; j < k; ++j) {
    multiples[j].resize(q);
    for (std::uint64_t c = 0; c < q; ++c) {
      std::vector<elt> v(r_);
      for (unsigned x = 0; x < r_; ++x) v[x] = F.mul(base[c], basis[j][x]);
      multiples[j][c] = std::move(v);
    }
  }
  std::vector<std::uint64_t> digit(k, 0);
  // prefix[j] = sum of multiples[i][digit[i]] for i < j
  std::vector<std::vector<elt>> prefix(k + 1, std::vector<elt>(r_, 0));
  auto recompute_from = [&](unsigned from) {
    for (unsigned j = from; j < k; ++j) {
      for (unsigned x = 0; x < r_; ++x)
        prefix[j + 1][x] = F.add(prefix[j][x], multiples[j][digit[j]][x]);
    }
  };
  recompute_from(0);
  while (true) {
    bool nonzero = false;
    for (unsigned x = 0; x < r_; ++x)
      if (prefix[k][x] != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) fn(prefix[k]);
    // odometer step: advance the last digit, carrying leftwards
    unsigned j = k;
    while (j > 0 && digit[j - 1] + 1 == q) {
      digit[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++digit[j - 1];
    recompute_from(j - 1);
  }
}

}  // namespace msidon
