#ifndef SEPSYM_GF_HPP
#define SEPSYM_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "sepsym/error.hpp"

namespace sepsym {

/// Element of GF(q) in canonical index form. Index i = sum c_j p^j encodes the
/// residue sum c_j t^j modulo the field's defining polynomial; for prime fields
/// the index is the residue itself. 0 is the additive and 1 the multiplicative
/// identity in every field.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fe, Fe) noexcept = default;
  friend constexpr auto operator<=>(Fe, Fe) noexcept = default;
};

inline constexpr Fe fe_zero{0};
inline constexpr Fe fe_one{1};

inline constexpr std::uint32_t kDefaultMaxFieldSize = 1u << 16;

namespace detail {

inline constexpr std::uint32_t kLogTableLimit = 1u << 12;
inline constexpr std::uint32_t kAddTableLimit = 1u << 10;

struct FieldData {
  unsigned p = 0;
  unsigned e = 0;
  std::uint32_t q = 0;
  std::vector<unsigned> modulus;  // monic, length e+1; empty for e == 1

  // discrete log tables over a fixed generator, present when q <= kLogTableLimit
  std::vector<std::uint16_t> log;      // index -> exponent, defined for index >= 1
  std::vector<std::uint16_t> antilog;  // exponent -> index, doubled to 2(q-1)
  // addition/negation tables, present for e > 1 and q <= kAddTableLimit
  std::vector<std::uint16_t> add_tab;
  std::vector<std::uint16_t> neg_tab;
  // factorials mod p for Lucas-reduced binomials
  std::vector<std::uint32_t> fact;
  std::vector<std::uint32_t> inv_fact;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_slow(std::uint32_t a) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t n) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) {
      std::uint32_t s = a + b;
      return s >= q ? s - q : s;
    }
    if (!add_tab.empty()) return add_tab[a * q + b];
    return add_slow(a, b);
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (e == 1) return a == 0 ? 0 : q - a;
    if (!neg_tab.empty()) return neg_tab[a];
    return neg_slow(a);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) return antilog[log[a] + log[b]];
    return mul_slow(a, b);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (!log.empty()) return antilog[(q - 1) - log[a]];
    return pow_slow(a, q - 2);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    std::uint64_t r = n % (q - 1);
    if (!log.empty()) return antilog[(log[a] * r) % (q - 1)];
    return pow_slow(a, r);
  }
};

std::shared_ptr<const FieldData> make_field_data(unsigned p, unsigned e, std::uint32_t max_q);

}  // namespace detail

/// Immutable handle to GF(q), q = p^e. Cheap to copy and safe to share across
/// threads; all arithmetic is pure. Extension fields take their defining
/// polynomial from the built-in table (override with SEPSYM_MODULUS_TABLE).
class Field {
 public:
  /// Builds GF(p^e). Throws NotPrime, TooLarge, or NoModulusAvailable.
  static Field make(unsigned p, unsigned e, std::uint32_t max_q = kDefaultMaxFieldSize) {
    return Field(detail::make_field_data(p, e, max_q));
  }

  /// Builds GF(q) after factoring q = p^e.
  static Field make_q(std::uint64_t q, std::uint32_t max_q = kDefaultMaxFieldSize);

  unsigned p() const noexcept { return d_->p; }
  unsigned e() const noexcept { return d_->e; }
  std::uint32_t q() const noexcept { return d_->q; }

  /// Defining polynomial coefficients, constant term first; empty for prime fields.
  const std::vector<unsigned>& modulus() const noexcept { return d_->modulus; }

  Fe element(std::uint32_t index) const {
    if (index >= q()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    return Fe{index};
  }

  Fe add(Fe a, Fe b) const { return Fe{d_->add(a.v, b.v)}; }
  Fe sub(Fe a, Fe b) const { return Fe{d_->add(a.v, d_->neg(b.v))}; }
  Fe neg(Fe a) const { return Fe{d_->neg(a.v)}; }
  Fe mul(Fe a, Fe b) const { return Fe{d_->mul(a.v, b.v)}; }

  Fe inv(Fe a) const {
    if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Fe{d_->inv(a.v)};
  }

  Fe div(Fe a, Fe b) const {
    if (b.v == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Fe{d_->mul(a.v, d_->inv(b.v))};
  }

  /// a^n with the convention pow(0, 0) = 1.
  Fe pow(Fe a, std::uint64_t n) const { return Fe{d_->pow(a.v, n)}; }

  /// The Frobenius automorphism a -> a^p.
  Fe frobenius(Fe a) const { return pow(a, p()); }

  /// a^(p^k) for k >= 0, reduced through the order-e Frobenius cycle.
  Fe frobenius_pow(Fe a, unsigned k) const {
    Fe r = a;
    for (unsigned i = 0, reps = k % e(); i < reps; ++i) r = frobenius(r);
    return r;
  }

  /// The unique b with b^(p^k) = a: the inverse Frobenius applied k times.
  Fe pth_root(Fe a, unsigned k) const {
    return frobenius_pow(a, e() - k % e());
  }

  /// Binomial coefficient binom(c, j) mod p by Lucas's theorem, as an element
  /// of the prime subfield.
  Fe binom_mod_p(std::uint64_t c, std::uint64_t j) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.d_ == b.d_ || (a.q() == b.q() && a.modulus() == b.modulus());
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Factors a prime power q = p^e; throws NotPrime when q is not one.
std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q);

namespace detail {

/// Parses a modulus table in the shipped text format: one entry per line,
/// "q c0 c1 ... ce" with coefficients low-to-high; '#' starts a comment.
std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> parse_modulus_table(const std::string& text);

}  // namespace detail

}  // namespace sepsym

#endif
