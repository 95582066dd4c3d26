#include "sepsym/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace sepsym {
namespace detail {

std::optional<std::vector<unsigned>> lookup_modulus(std::uint32_t q);  // modulus_table.cpp

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over Z_p as dense coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  return r;
}

void poly_trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// Remainder of a by monic m.
Poly poly_rem(Poly a, const Poly& m, unsigned p) {
  poly_trim(a);
  while (a.size() >= m.size() && !(a.size() == 1 && a[0] == 0)) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
        a[shift + i] = (a[shift + i] + p - static_cast<unsigned>(sub)) % p;
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() < m.size()) break;
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Trial factorization: no monic divisor of degree 1..deg/2.
bool poly_irreducible(const Poly& m, unsigned p) {
  unsigned deg = static_cast<unsigned>(m.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    Poly cand(d + 1, 0);
    cand[d] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        cand[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      if (poly_is_zero(poly_rem(m, cand, p))) return false;
    }
  }
  return true;
}

std::vector<unsigned> index_digits(std::uint32_t idx, unsigned p, unsigned e) {
  std::vector<unsigned> d(e, 0);
  for (unsigned i = 0; i < e && idx; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

std::uint32_t digits_index(const Poly& d, unsigned p, unsigned e) {
  std::uint32_t idx = 0;
  for (unsigned i = e; i-- > 0;) idx = idx * p + (i < d.size() ? d[i] : 0);
  return idx;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::uint32_t mod_pow(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = r * a % m;
    a = a * a % m;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t FieldData::add_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, base = 1;
  for (unsigned i = 0; i < e; ++i) {
    unsigned da = a % p, db = b % p;
    a /= p;
    b /= p;
    r += (da + db) % p * base;
    base *= p;
  }
  return r;
}

std::uint32_t FieldData::neg_slow(std::uint32_t a) const {
  std::uint32_t r = 0, base = 1;
  for (unsigned i = 0; i < e; ++i) {
    unsigned da = a % p;
    a /= p;
    r += (da ? p - da : 0) * base;
    base *= p;
  }
  return r;
}

std::uint32_t FieldData::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (e == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  Poly pa = index_digits(a, p, e);
  Poly pb = index_digits(b, p, e);
  Poly prod = poly_rem(poly_mul(pa, pb, p), modulus, p);
  return digits_index(prod, p, e);
}

std::uint32_t FieldData::pow_slow(std::uint32_t a, std::uint64_t n) const {
  if (e == 1) return mod_pow(a, n, p);
  std::uint32_t r = 1, base = a;
  while (n) {
    if (n & 1) r = mul_slow(r, base);
    base = mul_slow(base, base);
    n >>= 1;
  }
  return r;
}

std::shared_ptr<const FieldData> make_field_data(unsigned p, unsigned e, std::uint32_t max_q) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_q)
      throw Error(ErrorKind::TooLarge,
                  "q exceeds the configured field-size limit " + std::to_string(max_q));
  }

  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->e = e;
  data->q = static_cast<std::uint32_t>(q);

  if (e > 1) {
    auto mod = lookup_modulus(data->q);
    if (!mod)
      throw Error(ErrorKind::NoModulusAvailable,
                  "no defining polynomial for q = " + std::to_string(q));
    if (mod->size() != e + 1 || mod->back() != 1)
      throw Error(ErrorKind::BadModulusTable,
                  "modulus for q = " + std::to_string(q) + " is not monic of degree e");
    for (unsigned c : *mod)
      if (c >= p)
        throw Error(ErrorKind::BadModulusTable, "modulus coefficient out of range");
    if (!poly_irreducible(*mod, p))
      throw Error(ErrorKind::BadModulusTable,
                  "modulus for q = " + std::to_string(q) + " is reducible");
    data->modulus = std::move(*mod);
  }

  data->fact.resize(p);
  data->inv_fact.resize(p);
  data->fact[0] = 1;
  for (unsigned i = 1; i < p; ++i)
    data->fact[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(data->fact[i - 1]) * i % p);
  data->inv_fact[p - 1] = mod_pow(data->fact[p - 1], p - 2, p);
  for (unsigned i = p - 1; i > 0; --i)
    data->inv_fact[i - 1] =
        static_cast<std::uint32_t>(static_cast<std::uint64_t>(data->inv_fact[i]) * i % p);

  if (e > 1 && q <= kAddTableLimit) {
    data->add_tab.resize(q * q);
    data->neg_tab.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      data->neg_tab[a] = static_cast<std::uint16_t>(data->neg_slow(a));
      for (std::uint32_t b = a; b < q; ++b) {
        auto s = static_cast<std::uint16_t>(data->add_slow(a, b));
        data->add_tab[a * q + b] = s;
        data->add_tab[b * q + a] = s;
      }
    }
  }

  if (q <= kLogTableLimit && q > 2) {
    // find a generator of the multiplicative group
    auto factors = prime_factors(q - 1);
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (auto r : factors)
        if (data->pow_slow(cand, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }
    if (gen == 0)
      throw Error(ErrorKind::BadModulusTable, "no multiplicative generator found");
    data->log.assign(q, 0);
    data->antilog.assign(2 * (q - 1), 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      data->antilog[i] = static_cast<std::uint16_t>(x);
      data->antilog[i + (q - 1)] = static_cast<std::uint16_t>(x);
      data->log[x] = static_cast<std::uint16_t>(i);
      x = data->mul_slow(x, gen);
    }
  } else if (q == 2) {
    data->log.assign(2, 0);
    data->antilog.assign(2, 1);
  }

  return data;
}

}  // namespace detail

Field Field::make_q(std::uint64_t q, std::uint32_t max_q) {
  auto [p, e] = factor_prime_power(q);
  return make(p, e, max_q);
}

Fe Field::binom_mod_p(std::uint64_t c, std::uint64_t j) const {
  const auto& d = *d_;
  std::uint64_t r = 1;
  while (j > 0 || c > 0) {
    std::uint64_t cd = c % d.p, jd = j % d.p;
    if (jd > cd) return fe_zero;
    r = r * d.fact[cd] % d.p * d.inv_fact[jd] % d.p * d.inv_fact[cd - jd] % d.p;
    c /= d.p;
    j /= d.p;
  }
  return Fe{static_cast<std::uint32_t>(r)};
}

std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NotPrime, "q must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(p), e};
}

}  // namespace sepsym
