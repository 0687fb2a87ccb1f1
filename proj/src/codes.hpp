#pragma once

#include "sidon.hpp"

namespace msidon {

// Union of scalar orbits in the Grassmannian G_q(n, t), with materialized
// canonical codewords.
struct CyclicCode {
  Tower tw;
  unsigned t = 0;
  std::vector<Subspace> generators;
  std::vector<std::uint64_t> orbit_sizes;
  std::uint64_t size = 0;
  std::vector<Subspace> codewords;  // deduplicated canonical forms
  std::optional<unsigned> min_dist;
};

// Materializes all orbits; verifies sizes against the orbit-stabilizer count
// and that the orbits are pairwise disjoint (a collision reports the scalar
// witness).
CyclicCode build_code(const Family& F, unsigned threads = 1);

unsigned min_distance(CyclicCode& C, unsigned threads = 1);

enum class CodeEqMode { linear, semilinear };

// linear: generator sets match up to scalars, a q-power Frobenius and a
// permutation; semilinear: any field automorphism.
std::optional<EqWitness> code_equivalence(const CyclicCode& A, const CyclicCode& B,
                                          CodeEqMode mode);

struct ChannelParams {
  unsigned rho_dims = 0;  // dimensions erased
  unsigned err_dims = 0;  // error dimensions inserted
  std::uint64_t seed = 0;
};

// Operator channel: keeps a uniformly random (t - rho)-dimensional subspace
// of the sent codeword and adjoins err_dims fresh error dimensions, so the
// subspace distance to the input is exactly rho + err.
Subspace transmit(const Subspace& sent, const ChannelParams& ch);

struct DecodeResult {
  Subspace best;
  unsigned distance = 0;
  bool unique = true;          // the argmin set is a singleton
  std::vector<Subspace> ties;  // full argmin set when not unique
};

DecodeResult decode_min_distance(const CyclicCode& C, const Subspace& received,
                                 unsigned threads = 1);

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;  // unique and correct
  std::uint64_t ambiguous = 0;
  std::uint64_t failures = 0;   // unique but wrong
  // violations of the unique-decoding guarantee: the sent word was within
  // half the minimum distance of the received space yet was not returned;
  // always zero
  std::uint64_t wrong_unique_claims = 0;
  ChannelParams params;
};

// Seeded end-to-end run: per trial, a codeword is drawn, pushed through the
// channel and decoded. Per-trial seeds derive from the base seed so the run
// is reproducible at any thread count.
SimReport simulate(CyclicCode& C, const ChannelParams& params, std::uint64_t trials,
                   unsigned threads = 1);

}  // namespace msidon
