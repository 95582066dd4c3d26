#ifndef SEPSYM_MULTISYM_HPP
#define SEPSYM_MULTISYM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepsym/bigint.hpp"
#include "sepsym/orbits.hpp"
#include "sepsym/separating.hpp"

namespace sepsym {

/// A size-n multiset of points of GF(q)^m: the S_n-orbit of an m-tuple of
/// vectors. Points are keyed by their mixed-radix index (base q, coordinate 1
/// most significant); the zero point is an explicit key.
class MultiOrbit {
 public:
  MultiOrbit(Field field, unsigned m, unsigned n, std::vector<std::uint32_t> counts);

  const Field& field() const noexcept { return field_; }
  unsigned copies() const noexcept { return m_; }
  unsigned ambient() const noexcept { return n_; }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  std::uint64_t point_count() const noexcept { return counts_.size(); }

  std::vector<Fe> decode_point(std::uint64_t index) const;
  std::uint64_t encode_point(std::span<const Fe> point) const;

  friend bool operator==(const MultiOrbit& a, const MultiOrbit& b) {
    return a.field_ == b.field_ && a.m_ == b.m_ && a.n_ == b.n_ && a.counts_ == b.counts_;
  }

 private:
  Field field_;
  unsigned m_, n_;
  std::vector<std::uint32_t> counts_;
};

BigInt multi_orbit_count(const Field& field, unsigned m, unsigned n);
std::uint64_t checked_multi_orbit_count(const Field& field, unsigned m, unsigned n,
                                        std::uint64_t cap);

/// Streams all size-n multisets over GF(q)^m in lexicographic order of the
/// count vectors; sharding mirrors OrbitStream.
class MultiOrbitStream {
 public:
  MultiOrbitStream(Field field, unsigned m, unsigned n);
  MultiOrbitStream(Field field, unsigned m, unsigned n, std::uint32_t first_count);

  bool next();
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  std::uint64_t position() const noexcept { return pos_; }
  MultiOrbit orbit() const { return MultiOrbit(field_, m_, n_, counts_); }

  static std::uint64_t shard_start(const Field& field, unsigned m, unsigned n,
                                   std::uint32_t first_count);

 private:
  Field field_;
  unsigned m_, n_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t pos_;
  bool started_ = false;
  bool fixed_first_ = false;
  bool done_ = false;
};

/// Folds the multiset { prod_j u_j^{alpha_j} : u in the multi-orbit } into an
/// orbit over GF(q) with the same ambient n; products equal to zero become
/// implied zeros. Convention 0^0 = 1.
OrbitMultiplicity power_substitute(const MultiOrbit& orbit, std::span<const unsigned> alpha);

/// A tagged member of one of the three multisymmetric separating families.
struct FamilyMember {
  enum class Tag { Main, Amitsur, Cheap };

  Tag tag;
  unsigned j = 0;               // Main
  unsigned k = 0;               // Main, Amitsur, Cheap
  unsigned d = 0;               // Cheap
  std::vector<unsigned> alpha;  // Main, Amitsur

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

/// s_{j p^k}(x^alpha) grid: gcd(alpha) = 1, alpha_i <= q-1, |alpha| <= n,
/// k <= floor(log_p(n/|alpha|)), j in [1, q-1]. Ordered alpha-lex, then k,
/// then j.
std::vector<FamilyMember> family_main(const Field& field, unsigned m, unsigned n);

/// s_k(x^alpha) grid: k >= 1, k|alpha| <= n, gcd(alpha) = 1. Ordered
/// alpha-lex, then k.
std::vector<FamilyMember> family_amitsur(unsigned m, unsigned n);

/// Cheap polarization grid: k in [1, n], d in [0, (m-1)n].
std::vector<FamilyMember> family_cheap(unsigned m, unsigned n);

/// Evaluates one family member on a multi-orbit. Cheap members read the
/// lambda^d coefficient of the degree-k elementary symmetric value of the
/// entries v_i^(1) + lambda v_i^(2) + ... + lambda^(m-1) v_i^(m).
Fe evaluate_member(const FamilyMember& member, const MultiOrbit& orbit);

struct MultiWitness {
  MultiOrbit v;  // the later orbit in enumeration order
  MultiOrbit w;  // the earlier orbit
};

struct MultiSeparatingOutcome {
  std::optional<MultiWitness> witness;
  std::uint64_t orbit_count = 0;

  bool separating() const noexcept { return !witness.has_value(); }
};

/// Signature grouping over all multi-orbits; same witness-selection and
/// determinism contract as is_separating.
MultiSeparatingOutcome is_separating_multi(const Field& field, unsigned m, unsigned n,
                                           std::span<const FamilyMember> family,
                                           const EnumOptions& opt = {});

struct MultiBounds {
  unsigned q = 0;
  unsigned m = 0;
  unsigned n = 0;
  BigInt orbit_count;      // binom(q^m + n - 1, n)
  unsigned klr_bound = 0;  // ceil(log_q orbit_count)
  std::size_t main_size = 0;
  std::size_t amitsur_size = 0;
  std::size_t cheap_size = 0;
};

MultiBounds multi_bounds(const Field& field, unsigned m, unsigned n);

}  // namespace sepsym

#endif
