#pragma once

#include "construct.hpp"
#include "linset.hpp"

namespace msidon {

// Randomized property sweeps over small fields. Each suite is deterministic
// under its seed; the structs report exact counts so callers can assert
// 100% rates.

struct KernelBoundReport {
  std::uint64_t samples = 0;
  std::uint64_t bound_ok = 0;        // kernel dim <= twist degree
  std::uint64_t oracle_agree = 0;    // exhaustive root count == q^nullity
  std::uint64_t equality_cases = 0;  // kernel dim == twist degree
  std::uint64_t norm_identity_ok = 0;
};
KernelBoundReport kernel_bound_suite(std::uint64_t samples, std::uint64_t seed);

struct ThreeWayReport {
  std::uint64_t families = 0;
  std::uint64_t agree = 0;       // all three conditions coincide
  std::uint64_t holds = 0;       // families satisfying the conditions
  std::uint64_t quotient_only = 0;
  std::uint64_t intersection_only = 0;
  std::uint64_t heavy_mismatch = 0;
};
ThreeWayReport three_way_suite(std::uint64_t families, std::uint64_t seed);

struct ProjectionReportSuite {
  std::uint64_t decompositions = 0;
  std::uint64_t all_ok = 0;
};
ProjectionReportSuite projection_suite(std::uint64_t decompositions, std::uint64_t seed);

struct RoundTripReport {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;  // equivalence found and witness validated
};
RoundTripReport equivalence_roundtrip_suite(std::uint64_t trials, std::uint64_t seed);

struct WeakSearchReport {
  std::uint64_t trials = 0;
  std::uint64_t weak = 0;
  std::uint64_t multi = 0;
  std::uint64_t weak_not_multi = 0;  // open-problem candidates
  std::vector<Family> candidates;
};
WeakSearchReport weak_search(std::uint64_t q, unsigned n, std::uint64_t trials,
                             std::uint64_t seed, unsigned r = 2);

struct MonomialGridReport {
  std::uint64_t pairs = 0;
  std::uint64_t agree = 0;
  std::vector<std::string> disagreements;
};
// Compares the direct-condition monomial decision against the generic search
// over a (q, t, s, s') grid.
MonomialGridReport monomial_grid_suite(unsigned q_max, unsigned t_max);

// Random subspace of exact dimension k; exposed for tests.
Subspace random_subspace(const Tower& tw, unsigned k, std::mt19937_64& rng);

}  // namespace msidon
