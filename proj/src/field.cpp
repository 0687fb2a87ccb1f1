#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace msidon {

namespace {

// Dense polynomials over GF(p), used only for modulus selection/validation.
using PPoly = std::vector<unsigned>;

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly a, const PPoly& f, unsigned p) {
  // f monic
  while (a.size() >= f.size()) {
    unsigned c = a.back();
    if (c != 0) {
      std::size_t off = a.size() - f.size();
      for (std::size_t i = 0; i < f.size(); ++i) {
        unsigned t = (c * f[i]) % p;
        a[off + i] = (a[off + i] + p - t) % p;
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() < f.size()) break;
  }
  ptrim(a);
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return pmod(std::move(c), f, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, unsigned p) {
  PPoly r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, unsigned p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic for pmod
    unsigned lead = b.back();
    if (lead != 1) {
      unsigned il = 1;
      for (unsigned k = 1; k < p; ++k)
        if ((k * lead) % p == 1) {
          il = k;
          break;
        }
      for (auto& c : b) c = (c * il) % p;
    }
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool poly_irreducible(const PPoly& f, unsigned p) {
  // f monic of degree m >= 1; x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  PPoly x{0, 1};
  PPoly xq = x;
  std::vector<PPoly> frob_chain;  // x^(p^i) mod f for i = 1..m
  for (unsigned i = 1; i <= m; ++i) {
    xq = ppowmod(xq, p, f, p);
    frob_chain.push_back(xq);
  }
  PPoly top = frob_chain[m - 1];
  // x^(p^m) - x must be 0 mod f
  PPoly diff = top;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t l : prime_factors(m)) {
    PPoly d = frob_chain[m / l - 1];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    PPoly g = pgcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m) {
  if (m == 1) return {0, 1};  // x
  // enumerate (c0,...,c_{m-1}) in lexicographic order, c0 most significant
  std::vector<unsigned> c(m, 0);
  const std::uint64_t total = pow_u64(p, m);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t v = k;
    for (unsigned i = 0; i < m; ++i) {
      c[m - 1 - i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    PPoly f(c);
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
  }
  fail_internal("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) fail_invalid("q must be a prime power >= 2");
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      unsigned e = 0;
      std::uint64_t v = q;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (v != 1) fail_invalid("q = " + std::to_string(q) + " is not a prime power");
      return {static_cast<unsigned>(p), e};
    }
  }
  return {static_cast<unsigned>(q), 1};  // q prime
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus, std::uint64_t table_cap)
    : p_(p), m_(m), mod_(std::move(modulus)) {
  if (!is_prime(p_)) fail_invalid("characteristic " + std::to_string(p_) + " is not prime");
  if (m_ < 1) fail_invalid("extension degree must be >= 1");
  if (mod_.size() != m_ + 1 || mod_.back() != 1) fail_invalid("modulus must be monic of degree m");
  for (unsigned c : mod_)
    if (c >= p_) fail_invalid("modulus coefficient out of range");
  if (!poly_irreducible(mod_, p_)) fail_invalid("supplied modulus is reducible");

  ppow_.resize(m_ + 1);
  ppow_[0] = 1;
  for (unsigned i = 1; i <= m_; ++i) ppow_[i] = ppow_[i - 1] * p_;
  order_ = ppow_[m_];
  order_factors_ = prime_factors(order_ - 1);

  // smallest element of full multiplicative order
  gen_ = 0;
  for (elt a = order_ > 2 ? 2 : 1; a < order_; ++a) {
    bool ok = true;
    for (std::uint64_t l : order_factors_) {
      elt t = 1, b = a;
      std::uint64_t e = (order_ - 1) / l;
      while (e) {
        if (e & 1) t = mul_poly(t, b);
        b = mul_poly(b, b);
        e >>= 1;
      }
      if (t == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = a;
      break;
    }
  }
  if (gen_ == 0) fail_internal("no primitive element found");

  if (order_ <= table_cap) {
    exp_.resize(order_ - 1);
    log_.assign(order_, 0);
    elt cur = 1;
    for (std::uint64_t i = 0; i + 1 < order_; ++i) {
      exp_[i] = cur;
      log_[cur] = i;
      cur = mul_poly(cur, gen_);
    }
    if (cur != 1) fail_internal("primitive element order mismatch");
  }
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned m, std::uint64_t table_cap) {
  if (!is_prime(p)) fail_invalid("characteristic " + std::to_string(p) + " is not prime");
  return std::shared_ptr<const Field>(new Field(p, m, smallest_irreducible(p, m), table_cap));
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned m, std::vector<unsigned> modulus,
                                         std::uint64_t table_cap) {
  return std::shared_ptr<const Field>(new Field(p, m, std::move(modulus), table_cap));
}

std::shared_ptr<const Field> Field::parse(std::string_view spec, std::uint64_t table_cap) {
  // gf(p^m;c0,c1,...,1)
  std::string s(spec);
  auto bad = [&]() -> std::shared_ptr<const Field> {
    fail(status_code::parse, "malformed field spec: " + s);
  };
  if (s.size() < 6 || s.substr(0, 3) != "gf(" || s.back() != ')') return bad();
  std::string body = s.substr(3, s.size() - 4);
  auto semi = body.find(';');
  if (semi == std::string::npos) return bad();
  std::string pm = body.substr(0, semi);
  auto caret = pm.find('^');
  if (caret == std::string::npos) return bad();
  unsigned p = 0, m = 0;
  try {
    p = static_cast<unsigned>(std::stoul(pm.substr(0, caret)));
    m = static_cast<unsigned>(std::stoul(pm.substr(caret + 1)));
  } catch (...) {
    return bad();
  }
  std::vector<unsigned> mod;
  std::stringstream cs(body.substr(semi + 1));
  std::string tok;
  while (std::getline(cs, tok, ',')) {
    try {
      mod.push_back(static_cast<unsigned>(std::stoul(tok)));
    } catch (...) {
      return bad();
    }
  }
  if (mod.size() != m + 1) return bad();
  return make(p, m, std::move(mod), table_cap);
}

std::string Field::spec() const {
  std::ostringstream os;
  os << "gf(" << p_ << '^' << m_ << ';';
  for (unsigned i = 0; i <= m_; ++i) {
    if (i) os << ',';
    os << mod_[i];
  }
  os << ')';
  return os.str();
}

void Field::check(elt a) const {
  if (!valid(a)) fail_invalid("element " + std::to_string(a) + " outside " + spec());
}

elt Field::add(elt a, elt b) const {
  if (p_ == 2) return a ^ b;
  elt r = 0;
  for (unsigned i = 0; i < m_ && (a || b); ++i) {
    unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ppow_[i] * ((da + db) % p_);
  }
  return r;
}

elt Field::neg(elt a) const {
  if (p_ == 2) return a;
  elt r = 0;
  for (unsigned i = 0; i < m_ && a; ++i) {
    unsigned d = a % p_;
    a /= p_;
    if (d) r += ppow_[i] * (p_ - d);
  }
  return r;
}

elt Field::sub(elt a, elt b) const { return add(a, neg(b)); }

elt Field::mul_poly(elt a, elt b) const {
  if (a == 0 || b == 0) return 0;
  // schoolbook product of digit vectors, then reduction by the monic modulus
  std::vector<unsigned> da(m_), db(m_), c(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
    unsigned coef = c[d];
    if (coef) {
      c[d] = 0;
      for (unsigned j = 0; j < m_; ++j) {
        unsigned t = (coef * mod_[j]) % p_;
        c[d - m_ + j] = (c[d - m_ + j] + p_ - t) % p_;
      }
    }
    if (d == m_) break;
  }
  elt r = 0;
  for (unsigned i = 0; i < m_; ++i) r += ppow_[i] * c[i];
  return r;
}

elt Field::mul(elt a, elt b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  return mul_poly(a, b);
}

elt Field::inv(elt a) const {
  if (a == 0) fail_invalid("inverse of zero");
  if (!exp_.empty()) {
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : order_ - 1 - l];
  }
  return pow(a, order_ - 2);
}

elt Field::pow(elt a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    std::uint64_t l = (static_cast<unsigned __int128>(log_[a]) * (e % (order_ - 1))) % (order_ - 1);
    return exp_[l];
  }
  e %= order_ - 1;
  elt r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    e >>= 1;
  }
  return r;
}

elt Field::frob(elt a, unsigned j) const {
  if (a == 0) return 0;
  j %= m_;
  if (j == 0) return a;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j; ++i) e = (static_cast<unsigned __int128>(e) * p_) % (order_ - 1);
  return pow(a, e);
}

std::uint64_t Field::log(elt a) const {
  if (a == 0) fail_invalid("log of zero");
  if (exp_.empty()) fail_invalid("field has no discrete-log table");
  return log_[a];
}

elt Field::exp(std::uint64_t i) const {
  if (!exp_.empty()) return exp_[i % (order_ - 1)];
  return pow(gen_, i);
}

std::vector<unsigned> Field::digits(elt a) const {
  std::vector<unsigned> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

elt Field::from_digits(std::span<const unsigned> d) const {
  elt r = 0;
  for (unsigned i = 0; i < m_ && i < d.size(); ++i) r += ppow_[i] * (d[i] % p_);
  return r;
}

bool Field::in_prime_subfield(elt a, unsigned d) const {
  if (m_ % d != 0) fail_invalid("subfield degree must divide field degree");
  return frob(a, d) == a;
}

std::uint64_t Field::mul_order(elt a) const {
  if (a == 0) fail_invalid("order of zero");
  std::uint64_t o = order_ - 1;
  for (std::uint64_t l : order_factors_) {
    while (o % l == 0 && pow(a, o / l) == 1) o /= l;
  }
  return o;
}

bool Field::is_primitive(elt a) const { return a != 0 && mul_order(a) == order_ - 1; }

}  // namespace msidon
