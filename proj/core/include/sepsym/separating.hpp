#ifndef SEPSYM_SEPARATING_HPP
#define SEPSYM_SEPARATING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sepsym/bigint.hpp"
#include "sepsym/orbits.hpp"
#include "sepsym/series.hpp"

namespace sepsym {

/// A sorted set of elementary symmetric degrees in [1, n], carried with its
/// (q, n) context.
class IndexSet {
 public:
  IndexSet(unsigned q, unsigned n, std::vector<unsigned> degrees);

  unsigned q() const noexcept { return q_; }
  unsigned n() const noexcept { return n_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }

  bool contains(unsigned d) const;
  IndexSet without(unsigned d) const;
  /// A restricted to {1..m} with context dimension m.
  IndexSet restricted(unsigned m) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.degrees_ == b.degrees_;
  }

 private:
  unsigned q_, n_;
  std::vector<unsigned> degrees_;
};

/// [n]_q = { j p^k : 1 <= j <= q-1, k >= 0, j p^k <= n }, deduplicated.
IndexSet index_set(unsigned q, unsigned n);

struct WitnessPair {
  enum class Kind { Collision, Irreplaceable };

  OrbitMultiplicity v;  // the later orbit in enumeration order
  OrbitMultiplicity w;  // the earlier orbit
  unsigned k;           // irreplaceability degree, or the least degree where the pair differs
  Kind kind;
};

struct SeparatingOutcome {
  std::optional<WitnessPair> witness;
  std::uint64_t orbit_count = 0;

  bool separating() const noexcept { return !witness.has_value(); }
};

struct EnumOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned workers = 1;
};

/// Groups Pi_{q,n} by signature on A. Separating when all groups are
/// singletons; otherwise reports the lexicographically first colliding pair
/// (minimal first position, then minimal second). Deterministic for any
/// worker count. Throws TooMany above the cap.
SeparatingOutcome is_separating(const Field& field, unsigned n, const IndexSet& A,
                                const EnumOptions& opt = {});

struct RecoverOptions {
  bool allow_q9 = false;  // q = 9 costs ~4.3e7 candidate maps; opt in explicitly
};

/// Given purported coefficients c_1..c_{q-1} of some generating polynomial,
/// finds a digit map D : F_q^x -> {0..q-1} whose generating polynomial matches
/// them and returns its residues mod p (the residues do not depend on which
/// match is found). Returns nullopt when no map matches. Throws
/// UnsupportedScale for q > 9, or q = 9 without the opt-in flag.
std::optional<std::vector<unsigned>> base_digit_recover(const Field& field, std::span<const Fe> c,
                                                        const RecoverOptions& opt = {});

/// Inverts the signature map on [n]_q: recovers the base digits level by
/// level, solving the triangular convolution system for the high part and
/// extracting p^(k+1)-th roots between levels. values must be keyed exactly
/// by index_set(q, n). Returns nullopt when the values are not a signature.
std::optional<OrbitMultiplicity> reconstruct(const Field& field, unsigned n,
                                             const std::map<unsigned, Fe>& values,
                                             const RecoverOptions& opt = {});

/// Searches Pi_{q,n} for a pair agreeing on every s_j, j != k, and differing
/// at s_k. None certifies that s_k is not irreplaceable here. Deterministic
/// pair selection as in is_separating.
std::optional<WitnessPair> irreplaceable_witness(const Field& field, unsigned n, unsigned k,
                                                 const EnumOptions& opt = {});

/// Re-checks the defining property of a witness pair against full signatures.
bool witness_valid(const WitnessPair& witness);

enum class MinimalMode { OneGreedy, All };

/// OneGreedy repeatedly drops the largest removable degree; All returns every
/// inclusion-minimal separating subset (|A| <= 20), sorted. Throws
/// NotSeparating when A itself does not separate.
std::vector<IndexSet> minimal_subsets(const Field& field, unsigned n, const IndexSet& A,
                                      MinimalMode mode, const EnumOptions& opt = {});

struct BoundsReport {
  unsigned q = 0;
  unsigned n = 0;
  std::size_t set_size = 0;   // |[n]_q|
  BigInt orbit_count;         // binom(n+q-1, q-1)
  unsigned klr_bound = 0;     // ceil(log_q orbit_count)
  std::optional<int> defect;  // set_size - klr_bound, prime q only
};

/// Size bookkeeping for [n]_q against the log_q orbit-count lower bound; no
/// enumeration involved.
BoundsReport bounds_report(unsigned q, unsigned n);

/// For k | q-1: the orbit of the k distinct k-th roots of unity against the
/// zero vector, a verified irreplaceability witness for s_k^(k) with
/// s_k = (-1)^(k+1). Throws NotDivisor otherwise.
WitnessPair roots_of_unity_witness(const Field& field, unsigned k);

struct LacunaryResult {
  enum class Status { Equal, DifferAt, NotSplit };

  Status status;
  unsigned degree = 0;  // DifferAt position
  int which = 0;        // NotSplit: 0 = f, 1 = g
};

/// Checks that two monic split degree-n polynomials agreeing at all
/// coefficients n-j, j in [n]_q, are equal. Splitting is established by trial
/// division by (x - a) over all of GF(q); agreement at the lacunary positions
/// is re-verified by full comparison. Throws DegreeMismatch or NotMonic.
LacunaryResult lacunary_check(const Field& field, std::span<const Fe> f, std::span<const Fe> g);

/// Whether [A separating at n] implies [A restricted to {1..m} separating at
/// m]; property-test driver, expected always true. Requires m <= n.
bool monotonicity_check(const Field& field, unsigned n, unsigned m, const IndexSet& A,
                        const EnumOptions& opt = {});

}  // namespace sepsym

#endif
