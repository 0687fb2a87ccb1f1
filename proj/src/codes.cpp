#include "codes.hpp"

#include <algorithm>
#include <unordered_map>

namespace msidon {

CyclicCode build_code(const Family& F, unsigned threads) {
  const Tower& tw = F.tw;
  CyclicCode C;
  C.tw = tw;
  C.generators = F.subs;
  C.t = F.subs[0].dim();
  for (const auto& u : F.subs)
    if (u.dim() != C.t) fail_invalid("code generators must share one dimension");

  const auto& reps = tw.coset_reps();
  std::unordered_map<std::string, std::pair<unsigned, std::uint64_t>> seen;  // key -> (gen, rep idx)
  for (unsigned g = 0; g < C.generators.size(); ++g) {
    const auto info = C.generators[g].orbit_info();
    // orbit elements: one codeword per scalar coset of the stabilizer field
    auto chunked = parallel_chunks<std::vector<Subspace>>(
        reps.size(), threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
          std::vector<Subspace> out;
          out.reserve(e - b);
          for (std::uint64_t a = b; a < e; ++a) out.push_back(C.generators[g].scaled(reps[a]));
          return out;
        });
    std::uint64_t count = 0;
    std::uint64_t rep_idx = 0;
    for (const auto& chunk : chunked) {
      for (const auto& cw : chunk) {
        auto [it, inserted] = seen.emplace(cw.key(), std::make_pair(g, rep_idx));
        if (inserted) {
          C.codewords.push_back(cw);
          ++count;
        } else if (it->second.first != g) {
          // alpha with gen_g = alpha * gen_g'
          const elt alpha = tw.field().div(reps[it->second.second], reps[rep_idx]);
          fail_invalid("orbits of generators " + std::to_string(it->second.first) + " and " +
                       std::to_string(g) + " overlap at scalar " + std::to_string(alpha));
        }
        ++rep_idx;
      }
    }
    if (count != info.orbit_size) fail_internal("materialized orbit size disagrees with the stabilizer count");
    C.orbit_sizes.push_back(count);
    C.size += count;
  }
  return C;
}

unsigned min_distance(CyclicCode& C, unsigned threads) {
  if (C.min_dist) return *C.min_dist;
  if (C.size < 2) fail_invalid("minimum distance needs at least two codewords");
  const Tower& tw = C.tw;
  const auto& reps = tw.coset_reps();
  // max intersection between distinct codewords, scanned orbit-wise:
  // d(alpha U_i, beta U_j) = d(U_i, gamma U_j)
  int best = 0;
  for (unsigned i = 0; i < C.generators.size(); ++i) {
    for (unsigned j = i; j < C.generators.size(); ++j) {
      auto chunked = parallel_chunks<int>(reps.size(), threads,
                                          [&](std::uint64_t b, std::uint64_t e, unsigned) {
                                            int mx = 0;
                                            for (std::uint64_t a = b; a < e; ++a) {
                                              const Subspace s = C.generators[j].scaled(reps[a]);
                                              if (s == C.generators[i]) continue;  // same codeword
                                              mx = std::max(mx, intersect_dim(C.generators[i], s));
                                            }
                                            return mx;
                                          });
      for (int m : chunked) best = std::max(best, m);
    }
  }
  C.min_dist = 2 * C.t - 2 * static_cast<unsigned>(best);
  return *C.min_dist;
}

std::optional<EqWitness> code_equivalence(const CyclicCode& A, const CyclicCode& B,
                                          CodeEqMode mode) {
  if (!A.tw.same_structure(B.tw)) fail_invalid("code equivalence needs one ambient field");
  if (A.t != B.t) fail_invalid("code equivalence needs one codeword dimension");
  if (A.size != B.size || A.generators.size() != B.generators.size()) return std::nullopt;
  const AutSet auts = mode == CodeEqMode::linear ? AutSet::q_powers : AutSet::all;
  const Family famA{A.tw, A.generators};
  const Family famB{B.tw, B.generators};
  auto w = orbit_match_search(famA, famB, auts);
  if (w && !validate_equivalence_witness(famA, famB, *w))
    fail_internal("equivalence witness failed validation");
  return w;
}

namespace {

// uniformly random d-dimensional subspace of the span of `basis`
Subspace random_subspace_of(const Tower& tw, const std::vector<elt>& basis, unsigned d,
                            std::mt19937_64& rng) {
  const Field& F = tw.field();
  const auto& base = tw.base_elements();
  while (true) {
    std::vector<elt> gens(d, 0);
    for (auto& g : gens)
      for (elt b : basis) g = F.add(g, F.mul(base[rng_below(rng, base.size())], b));
    Subspace s = Subspace::span_elements(tw, gens);
    if (s.dim() == d) return s;
  }
}

}  // namespace

Subspace transmit(const Subspace& sent, const ChannelParams& ch) {
  const Tower& tw = sent.tower();
  const Field& F = tw.field();
  const unsigned t = sent.dim();
  if (ch.rho_dims > t) fail_invalid("cannot erase more dimensions than the codeword has");
  if (t + ch.err_dims > tw.degree())
    fail_invalid("error dimensions cannot stay disjoint from the codeword");
  std::mt19937_64 rng(ch.seed);

  Subspace kept = ch.rho_dims == 0
                      ? sent
                      : random_subspace_of(tw, sent.basis_elements(), t - ch.rho_dims, rng);
  if (ch.err_dims == 0) return kept;

  // error dimensions are drawn until they add to the sent space, so the
  // distance to the codeword is exactly rho + err
  std::vector<elt> ambient;
  for (elt b : tw.power_basis()) ambient.push_back(b);
  while (true) {
    std::vector<elt> gens = kept.basis_elements();
    const auto& base = tw.base_elements();
    for (unsigned i = 0; i < ch.err_dims; ++i) {
      elt g = 0;
      for (elt b : ambient) g = F.add(g, F.mul(base[rng_below(rng, base.size())], b));
      gens.push_back(g);
    }
    Subspace received = Subspace::span_elements(tw, gens);
    if (received.dim() != kept.dim() + ch.err_dims) continue;
    Mat stack = sent.rows();
    stack.insert(stack.end(), received.rows().begin(), received.rows().end());
    const unsigned joint = rank_of(F, std::move(stack));
    if (joint == t + ch.err_dims) return received;  // E meets <sent> trivially
  }
}

DecodeResult decode_min_distance(const CyclicCode& C, const Subspace& received,
                                 unsigned threads) {
  if (C.codewords.empty()) fail_invalid("decoding against an empty code");
  struct Best {
    unsigned dist = ~0u;
    std::vector<std::size_t> argmin;
  };
  auto chunked = parallel_chunks<Best>(
      C.codewords.size(), threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        Best best;
        for (std::uint64_t i = b; i < e; ++i) {
          const unsigned d = subspace_distance(C.codewords[i], received);
          if (d < best.dist) {
            best.dist = d;
            best.argmin = {i};
          } else if (d == best.dist) {
            best.argmin.push_back(i);
          }
        }
        return best;
      });
  Best total;
  for (const auto& b : chunked) {
    if (b.dist < total.dist) {
      total = b;
    } else if (b.dist == total.dist) {
      total.argmin.insert(total.argmin.end(), b.argmin.begin(), b.argmin.end());
    }
  }
  DecodeResult res;
  res.distance = total.dist;
  res.unique = total.argmin.size() == 1;
  // deterministic tie handling: smallest canonical form wins
  std::size_t winner = total.argmin.front();
  for (std::size_t i : total.argmin)
    if (C.codewords[i].rows() < C.codewords[winner].rows()) winner = i;
  res.best = C.codewords[winner];
  if (!res.unique)
    for (std::size_t i : total.argmin) res.ties.push_back(C.codewords[i]);
  return res;
}

SimReport simulate(CyclicCode& C, const ChannelParams& params, std::uint64_t trials,
                   unsigned threads) {
  SimReport rep;
  rep.trials = trials;
  rep.params = params;
  const unsigned dmin = min_distance(C, threads);
  auto chunked = parallel_chunks<SimReport>(
      trials, threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        SimReport local;
        for (std::uint64_t trial = b; trial < e; ++trial) {
          std::mt19937_64 pick(params.seed ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
          const Subspace& sent = C.codewords[rng_below(pick, C.codewords.size())];
          ChannelParams ch = params;
          ch.seed = pick();
          const Subspace received = transmit(sent, ch);
          const DecodeResult dec = decode_min_distance(C, received, 1);
          const bool exact = dec.unique && dec.best == sent;
          if (!dec.unique)
            ++local.ambiguous;
          else if (exact)
            ++local.successes;
          else
            ++local.failures;
          // the unique-decoding guarantee: a sent word within the radius is
          // always returned
          if (2 * subspace_distance(sent, received) < dmin && !exact)
            ++local.wrong_unique_claims;
        }
        return local;
      });
  for (const auto& l : chunked) {
    rep.successes += l.successes;
    rep.ambiguous += l.ambiguous;
    rep.failures += l.failures;
    rep.wrong_unique_claims += l.wrong_unique_claims;
  }
  return rep;
}

}  // namespace msidon
