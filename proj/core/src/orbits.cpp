#include "sepsym/orbits.hpp"

#include <numeric>
#include <string>

namespace sepsym {

OrbitMultiplicity::OrbitMultiplicity(Field field, unsigned n)
    : field_(std::move(field)), n_(n), counts_(field_.q() - 1, 0), weight_(0) {}

OrbitMultiplicity::OrbitMultiplicity(Field field, unsigned n, std::vector<std::uint32_t> counts)
    : field_(std::move(field)), n_(n), counts_(std::move(counts)) {
  if (counts_.size() != field_.q() - 1)
    throw Error(ErrorKind::InvalidArgument, "count vector must have q-1 entries");
  weight_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (weight_ > n_)
    throw Error(ErrorKind::AmbientTooSmall,
                "orbit weight " + std::to_string(weight_) + " exceeds ambient " + std::to_string(n_));
}

OrbitMultiplicity orbit_from_vector(const Field& field, std::span<const Fe> v) {
  std::vector<std::uint32_t> counts(field.q() - 1, 0);
  for (Fe a : v) {
    if (a.v >= field.q()) throw Error(ErrorKind::InvalidArgument, "vector entry out of field");
    if (a.v != 0) ++counts[a.v - 1];
  }
  return OrbitMultiplicity(field, static_cast<unsigned>(v.size()), std::move(counts));
}

std::vector<Fe> canonical_vector(const OrbitMultiplicity& orbit) {
  std::vector<Fe> v;
  v.reserve(orbit.ambient());
  v.assign(orbit.zeros(), fe_zero);
  const auto& counts = orbit.counts();
  for (std::uint32_t i = 0; i < counts.size(); ++i)
    v.insert(v.end(), counts[i], Fe{i + 1});
  return v;
}

DigitSlice digit_slice(const OrbitMultiplicity& orbit, unsigned k) {
  const Field& F = orbit.field();
  std::uint64_t pk1 = 1;
  for (unsigned i = 0; i <= k; ++i) pk1 *= F.p();

  std::vector<std::uint32_t> low(orbit.counts().size()), high(orbit.counts().size()),
      shifted(orbit.counts().size());
  for (std::size_t i = 0; i < orbit.counts().size(); ++i) {
    std::uint32_t c = orbit.counts()[i];
    low[i] = static_cast<std::uint32_t>(c % pk1);
    high[i] = c - low[i];
    shifted[i] = static_cast<std::uint32_t>(high[i] / pk1);
  }
  unsigned n = orbit.ambient();
  return DigitSlice{OrbitMultiplicity(F, n, std::move(low)), OrbitMultiplicity(F, n, std::move(high)),
                    OrbitMultiplicity(F, n, std::move(shifted))};
}

OrbitMultiplicity scale_by_p(const OrbitMultiplicity& orbit, unsigned j, unsigned m) {
  const Field& F = orbit.field();
  std::uint64_t pj = 1;
  for (unsigned i = 0; i < j; ++i) pj *= F.p();
  if (pj * orbit.ambient() > m)
    throw Error(ErrorKind::AmbientTooSmall,
                "need ambient at least " + std::to_string(pj * orbit.ambient()));
  std::vector<std::uint32_t> counts(orbit.counts());
  for (auto& c : counts) c = static_cast<std::uint32_t>(c * pj);
  return OrbitMultiplicity(F, m, std::move(counts));
}

BigInt orbit_count(const Field& field, unsigned n) {
  return binomial(std::uint64_t{n} + field.q() - 1, field.q() - 1);
}

std::uint64_t checked_orbit_count(const Field& field, unsigned n, std::uint64_t cap) {
  BigInt total = orbit_count(field, n);
  if (total > cap)
    throw Error(ErrorKind::TooMany, "enumeration of " + total.str() + " orbits exceeds cap " +
                                        std::to_string(cap));
  return total.convert_to<std::uint64_t>();
}

OrbitStream::OrbitStream(Field field, unsigned n)
    : field_(std::move(field)), n_(n), counts_(field_.q() - 1, 0), total_(0), pos_(0) {}

OrbitStream::OrbitStream(Field field, unsigned n, std::uint32_t first_count)
    : field_(std::move(field)),
      n_(n),
      counts_(field_.q() - 1, 0),
      total_(first_count),
      pos_(shard_start(field_, n, first_count)),
      fixed_first_(true) {
  if (first_count > n) throw Error(ErrorKind::InvalidArgument, "first count exceeds n");
  counts_[0] = first_count;
}

bool OrbitStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;  // initial state set by the constructor; position already correct
  }
  // lexicographic successor under sum <= n: bump the rightmost bumpable slot,
  // zeroing everything after it
  std::size_t lo = fixed_first_ ? 1 : 0;
  std::uint64_t suffix = 0;
  for (std::size_t idx = counts_.size(); idx-- > lo;) {
    if (total_ - suffix + 1 <= n_) {
      ++counts_[idx];
      for (std::size_t t = idx + 1; t < counts_.size(); ++t) counts_[t] = 0;
      total_ = total_ - suffix + 1;
      ++pos_;
      return true;
    }
    suffix += counts_[idx];
  }
  done_ = true;
  return false;
}

std::uint64_t OrbitStream::shard_size(const Field& field, unsigned n, std::uint32_t first_count) {
  // remaining q-2 slots sum to at most n - first_count
  return binomial(std::uint64_t{n} - first_count + field.q() - 2, field.q() - 2)
      .convert_to<std::uint64_t>();
}

std::uint64_t OrbitStream::shard_start(const Field& field, unsigned n, std::uint32_t first_count) {
  std::uint64_t start = 0;
  for (std::uint32_t c = 0; c < first_count; ++c) start += shard_size(field, n, c);
  return start;
}

}  // namespace sepsym
