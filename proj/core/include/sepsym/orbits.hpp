#ifndef SEPSYM_ORBITS_HPP
#define SEPSYM_ORBITS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sepsym/bigint.hpp"
#include "sepsym/gf.hpp"

namespace sepsym {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// A multiplicity function on the nonzero elements of GF(q) with total weight
/// at most n. Encodes one S_n-orbit of GF(q)^n: counts(a) coordinates equal to
/// a, the remaining n - sum coordinates zero. Immutable.
class OrbitMultiplicity {
 public:
  /// The orbit of the zero vector.
  OrbitMultiplicity(Field field, unsigned n);

  /// counts[i] is the multiplicity of the element with index i+1; must have
  /// size q-1 and total at most n.
  OrbitMultiplicity(Field field, unsigned n, std::vector<std::uint32_t> counts);

  const Field& field() const noexcept { return field_; }
  unsigned ambient() const noexcept { return n_; }

  std::uint32_t count(Fe a) const { return a.v == 0 ? 0 : counts_[a.v - 1]; }
  std::uint64_t weight() const noexcept { return weight_; }
  std::uint32_t zeros() const noexcept { return static_cast<std::uint32_t>(n_ - weight_); }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const OrbitMultiplicity& a, const OrbitMultiplicity& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.counts_ == b.counts_;
  }

 private:
  Field field_;
  unsigned n_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t weight_;
};

/// Digit decomposition of an orbit at level k: low holds the k lowest base-p
/// digits of every count, high the rest, shifted = high / p^(k+1).
struct DigitSlice {
  OrbitMultiplicity low;
  OrbitMultiplicity high;
  OrbitMultiplicity shifted;
};

/// Tallies a coordinate vector into its orbit.
OrbitMultiplicity orbit_from_vector(const Field& field, std::span<const Fe> v);

/// The weakly index-increasing representative; zeros first.
std::vector<Fe> canonical_vector(const OrbitMultiplicity& orbit);

DigitSlice digit_slice(const OrbitMultiplicity& orbit, unsigned k);

/// Multiplies every count by p^j and widens the ambient dimension to m.
/// Throws AmbientTooSmall unless p^j * n <= m.
OrbitMultiplicity scale_by_p(const OrbitMultiplicity& orbit, unsigned j, unsigned m);

/// |Pi_{q,n}| = binom(n+q-1, q-1).
BigInt orbit_count(const Field& field, unsigned n);

/// orbit_count checked against a cap; throws TooMany above it.
std::uint64_t checked_orbit_count(const Field& field, unsigned n, std::uint64_t cap);

/// Streams Pi_{q,n} in lexicographic order of the count vectors
/// (counts(a_1), ..., counts(a_{q-1})), elements ordered by index. A shard
/// stream fixes counts(a_1) and enumerates its contiguous slice; shards
/// partition the full stream and positions are global, so consumers can fan
/// shards out to workers and merge deterministically.
class OrbitStream {
 public:
  OrbitStream(Field field, unsigned n);
  OrbitStream(Field field, unsigned n, std::uint32_t first_count);

  /// Advances to the next orbit; false once exhausted.
  bool next();

  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  std::uint64_t position() const noexcept { return pos_; }
  OrbitMultiplicity orbit() const { return OrbitMultiplicity(field_, n_, counts_); }

  /// Number of orbits in the shard with counts(a_1) = first_count.
  static std::uint64_t shard_size(const Field& field, unsigned n, std::uint32_t first_count);
  /// Global position of the first orbit of a shard.
  static std::uint64_t shard_start(const Field& field, unsigned n, std::uint32_t first_count);

 private:
  Field field_;
  unsigned n_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t total_;  // current weight
  std::uint64_t pos_;
  bool started_ = false;
  bool fixed_first_ = false;
  bool done_ = false;
};

}  // namespace sepsym

#endif
