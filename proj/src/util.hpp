#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace msidon {

enum class status_code {
  ok = 0,
  invalid = 1,
  parse = 2,
  cap_exceeded = 3,
  internal = 4,
};

class error : public std::runtime_error {
 public:
  error(status_code c, const std::string& what) : std::runtime_error(what), code_(c) {}
  status_code code() const { return code_; }

 private:
  status_code code_;
};

[[noreturn]] inline void fail(status_code c, const std::string& what) { throw error(c, what); }
[[noreturn]] inline void fail_invalid(const std::string& what) { fail(status_code::invalid, what); }
[[noreturn]] inline void fail_internal(const std::string& what) { fail(status_code::internal, what); }

// Portable bounded draw; std::uniform_int_distribution is not bit-stable
// across standard library implementations.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail_internal("rng_below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// Runs fn(begin, end, chunk_index) over a partition of [0, n) and returns the
// per-chunk results in chunk order, so reductions stay deterministic no matter
// how many threads ran.
template <class R, class Fn>
std::vector<R> parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2 * threads) {
    std::vector<R> out;
    if (n > 0) out.push_back(fn(std::uint64_t{0}, n, 0u));
    return out;
  }
  const unsigned chunks = threads;
  std::vector<R> out(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::uint64_t step = (n + chunks - 1) / chunks;
  for (unsigned c = 0; c < chunks; ++c) {
    const std::uint64_t b = std::min<std::uint64_t>(n, c * step);
    const std::uint64_t e = std::min<std::uint64_t>(n, b + step);
    pool.emplace_back([&, b, e, c] { out[c] = fn(b, e, c); });
  }
  for (auto& t : pool) t.join();
  return out;
}

inline unsigned gcd_u(unsigned a, unsigned b) {
  while (b != 0) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::vector<unsigned> divisors_desc(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = n; i >= 1; --i)
    if (n % i == 0) d.push_back(i);
  return d;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace msidon
