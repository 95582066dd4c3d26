#include "sepsym/multisym.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "scan_util.hpp"

namespace sepsym {

namespace {

std::uint64_t point_space_size(const Field& field, unsigned m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "need at least one vector copy");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m; ++i) {
    size *= field.q();
    if (size > (std::uint64_t{1} << 32))
      throw Error(ErrorKind::TooLarge, "q^m point space too large");
  }
  return size;
}

}  // namespace

MultiOrbit::MultiOrbit(Field field, unsigned m, unsigned n, std::vector<std::uint32_t> counts)
    : field_(std::move(field)), m_(m), n_(n), counts_(std::move(counts)) {
  if (counts_.size() != point_space_size(field_, m_))
    throw Error(ErrorKind::InvalidArgument, "count vector must have q^m entries");
  std::uint64_t total = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (total != n_)
    throw Error(ErrorKind::InvalidArgument, "multiset size must equal n exactly");
}

std::vector<Fe> MultiOrbit::decode_point(std::uint64_t index) const {
  std::vector<Fe> point(m_);
  for (unsigned j = m_; j-- > 0;) {
    point[j] = Fe{static_cast<std::uint32_t>(index % field_.q())};
    index /= field_.q();
  }
  return point;
}

std::uint64_t MultiOrbit::encode_point(std::span<const Fe> point) const {
  if (point.size() != m_) throw Error(ErrorKind::InvalidArgument, "point arity mismatch");
  std::uint64_t index = 0;
  for (Fe c : point) {
    if (c.v >= field_.q()) throw Error(ErrorKind::InvalidArgument, "coordinate out of field");
    index = index * field_.q() + c.v;
  }
  return index;
}

BigInt multi_orbit_count(const Field& field, unsigned m, unsigned n) {
  std::uint64_t points = point_space_size(field, m);
  return binomial(points + n - 1, n);
}

std::uint64_t checked_multi_orbit_count(const Field& field, unsigned m, unsigned n,
                                        std::uint64_t cap) {
  BigInt total = multi_orbit_count(field, m, n);
  if (total > cap)
    throw Error(ErrorKind::TooMany, "enumeration of " + total.str() + " multi-orbits exceeds cap " +
                                        std::to_string(cap));
  return total.convert_to<std::uint64_t>();
}

MultiOrbitStream::MultiOrbitStream(Field field, unsigned m, unsigned n)
    : field_(std::move(field)), m_(m), n_(n), counts_(point_space_size(field_, m_), 0), pos_(0) {
  counts_.back() = n;
}

MultiOrbitStream::MultiOrbitStream(Field field, unsigned m, unsigned n, std::uint32_t first_count)
    : field_(std::move(field)),
      m_(m),
      n_(n),
      counts_(point_space_size(field_, m_), 0),
      pos_(shard_start(field_, m_, n_, first_count)),
      fixed_first_(true) {
  if (first_count > n) throw Error(ErrorKind::InvalidArgument, "first count exceeds n");
  counts_[0] = first_count;
  if (counts_.size() == 1) {
    if (first_count != n) done_ = true;
  } else {
    counts_.back() = n - first_count;
  }
}

bool MultiOrbitStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // lexicographic successor with the sum pinned to n: bump the rightmost
  // bumpable slot before the last and dump the remainder into the last slot
  std::size_t lo = fixed_first_ ? 1 : 0;
  if (counts_.size() - lo < 2) {
    done_ = true;
    return false;
  }
  std::uint64_t suffix = counts_.back();
  for (std::size_t idx = counts_.size() - 1; idx-- > lo;) {
    if (suffix > 0) {
      ++counts_[idx];
      for (std::size_t t = idx + 1; t < counts_.size(); ++t) counts_[t] = 0;
      counts_.back() = static_cast<std::uint32_t>(suffix - 1);
      ++pos_;
      return true;
    }
    suffix += counts_[idx];
  }
  done_ = true;
  return false;
}

std::uint64_t MultiOrbitStream::shard_start(const Field& field, unsigned m, unsigned n,
                                            std::uint32_t first_count) {
  std::uint64_t points = point_space_size(field, m);
  if (points == 1) return 0;
  std::uint64_t start = 0;
  for (std::uint32_t c = 0; c < first_count; ++c)
    start += binomial(std::uint64_t{n} - c + points - 2, points - 2).convert_to<std::uint64_t>();
  return start;
}

OrbitMultiplicity power_substitute(const MultiOrbit& orbit, std::span<const unsigned> alpha) {
  const Field& F = orbit.field();
  if (alpha.size() != orbit.copies())
    throw Error(ErrorKind::ParameterMismatch, "alpha arity must equal the number of copies");
  std::vector<std::uint32_t> counts(F.q() - 1, 0);
  for (std::uint64_t idx = 0; idx < orbit.point_count(); ++idx) {
    std::uint32_t c = orbit.counts()[idx];
    if (c == 0) continue;
    std::vector<Fe> point = orbit.decode_point(idx);
    Fe val = fe_one;
    for (unsigned j = 0; j < alpha.size(); ++j) val = F.mul(val, F.pow(point[j], alpha[j]));
    if (val.v != 0) counts[val.v - 1] += c;
  }
  return OrbitMultiplicity(F, orbit.ambient(), std::move(counts));
}

namespace {

unsigned vec_gcd(std::span<const unsigned> v) {
  unsigned g = 0;
  for (unsigned x : v) g = std::gcd(g, x);
  return g;
}

// All alpha in [0, bound]^m with |alpha| <= max_sum, lexicographically.
template <class Fn>
void for_each_alpha(unsigned m, unsigned bound, unsigned max_sum, Fn&& fn) {
  std::vector<unsigned> alpha(m, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned used) -> void {
    if (pos == m) {
      fn(alpha);
      return;
    }
    unsigned top = std::min(bound, max_sum - used);
    for (unsigned a = 0; a <= top; ++a) {
      alpha[pos] = a;
      self(self, pos + 1, used + a);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<FamilyMember> family_main(const Field& field, unsigned m, unsigned n) {
  std::vector<FamilyMember> members;
  for_each_alpha(m, field.q() - 1, n, [&](const std::vector<unsigned>& alpha) {
    if (vec_gcd(alpha) != 1) return;
    unsigned size = std::accumulate(alpha.begin(), alpha.end(), 0u);
    unsigned kmax = floor_log(field.p(), n / size);
    for (unsigned k = 0; k <= kmax; ++k)
      for (unsigned j = 1; j < field.q(); ++j)
        members.push_back(FamilyMember{FamilyMember::Tag::Main, j, k, 0, alpha});
  });
  return members;
}

std::vector<FamilyMember> family_amitsur(unsigned m, unsigned n) {
  std::vector<FamilyMember> members;
  for_each_alpha(m, n, n, [&](const std::vector<unsigned>& alpha) {
    if (vec_gcd(alpha) != 1) return;
    unsigned size = std::accumulate(alpha.begin(), alpha.end(), 0u);
    for (unsigned k = 1; k * size <= n; ++k)
      members.push_back(FamilyMember{FamilyMember::Tag::Amitsur, 0, k, 0, alpha});
  });
  return members;
}

std::vector<FamilyMember> family_cheap(unsigned m, unsigned n) {
  std::vector<FamilyMember> members;
  members.reserve(std::size_t{n} * ((m - 1) * n + 1));
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned d = 0; d <= (m - 1) * n; ++d)
      members.push_back(FamilyMember{FamilyMember::Tag::Cheap, 0, k, d, {}});
  return members;
}

namespace {

// Elementary symmetric polynomials of the n lambda-linear-combination entries
// of a multi-orbit: rows[k] holds e_k as a polynomial in lambda of degree at
// most k(m-1).
std::vector<std::vector<Fe>> cheap_rows(const MultiOrbit& orbit, unsigned kmax) {
  const Field& F = orbit.field();
  unsigned m = orbit.copies();
  std::size_t width = std::size_t{m - 1} * orbit.ambient() + 1;
  std::vector<std::vector<Fe>> rows(kmax + 1, std::vector<Fe>(width, fe_zero));
  rows[0][0] = fe_one;

  unsigned placed = 0;
  for (std::uint64_t idx = 0; idx < orbit.point_count(); ++idx) {
    std::uint32_t c = orbit.counts()[idx];
    if (c == 0) continue;
    std::vector<Fe> w = orbit.decode_point(idx);  // w[t] is the lambda^t coefficient
    bool zero_entry = std::all_of(w.begin(), w.end(), [](Fe x) { return x.v == 0; });
    if (zero_entry) continue;
    for (std::uint32_t rep = 0; rep < c; ++rep) {
      ++placed;
      for (unsigned k = std::min(kmax, placed); k >= 1; --k) {
        const auto& prev = rows[k - 1];
        auto& cur = rows[k];
        for (std::size_t i = 0; i < width; ++i) {
          if (prev[i].v == 0) continue;
          for (unsigned t = 0; t < m && i + t < width; ++t) {
            if (w[t].v == 0) continue;
            cur[i + t] = F.add(cur[i + t], F.mul(prev[i], w[t]));
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace

Fe evaluate_member(const FamilyMember& member, const MultiOrbit& orbit) {
  const Field& F = orbit.field();
  unsigned m = orbit.copies();
  unsigned n = orbit.ambient();
  switch (member.tag) {
    case FamilyMember::Tag::Main: {
      if (member.alpha.size() != m || member.j < 1 || member.j >= F.q())
        throw Error(ErrorKind::ParameterMismatch, "bad Main member");
      std::uint64_t degree = member.j;
      for (unsigned i = 0; i < member.k && degree <= n; ++i) degree *= F.p();
      return s_value(power_substitute(orbit, member.alpha), degree);
    }
    case FamilyMember::Tag::Amitsur: {
      if (member.alpha.size() != m || member.k < 1)
        throw Error(ErrorKind::ParameterMismatch, "bad Amitsur member");
      return s_value(power_substitute(orbit, member.alpha), member.k);
    }
    case FamilyMember::Tag::Cheap: {
      if (member.k < 1 || member.k > n || member.d > (m - 1) * n)
        throw Error(ErrorKind::ParameterMismatch, "bad Cheap member");
      auto rows = cheap_rows(orbit, member.k);
      return rows[member.k][member.d];
    }
  }
  throw Error(ErrorKind::ParameterMismatch, "unknown member tag");
}

MultiSeparatingOutcome is_separating_multi(const Field& field, unsigned m, unsigned n,
                                           std::span<const FamilyMember> family,
                                           const EnumOptions& opt) {
  std::uint64_t total = checked_multi_orbit_count(field, m, n, opt.cap);
  std::uint64_t points = point_space_size(field, m);

  // evaluation plan: distinct alphas once, cheap rows once, members read out
  // of the precomputed pieces in family order
  std::vector<std::vector<unsigned>> alphas;
  struct Step {
    int alpha_id = -1;        // >= 0: read degree from that substituted orbit
    std::uint64_t degree = 0;
    unsigned k = 0, d = 0;    // alpha_id < 0: cheap coefficient
  };
  std::vector<Step> plan;
  unsigned cheap_kmax = 0;
  for (const auto& member : family) {
    Step step;
    if (member.tag == FamilyMember::Tag::Cheap) {
      if (member.k < 1 || member.k > n || member.d > (m - 1) * n)
        throw Error(ErrorKind::ParameterMismatch, "bad Cheap member");
      step.k = member.k;
      step.d = member.d;
      cheap_kmax = std::max(cheap_kmax, member.k);
    } else {
      if (member.alpha.size() != m)
        throw Error(ErrorKind::ParameterMismatch, "alpha arity must equal m");
      auto it = std::find(alphas.begin(), alphas.end(), member.alpha);
      if (it == alphas.end()) {
        alphas.push_back(member.alpha);
        it = std::prev(alphas.end());
      }
      step.alpha_id = static_cast<int>(it - alphas.begin());
      step.degree = member.j;
      if (member.tag == FamilyMember::Tag::Main)
        for (unsigned i = 0; i < member.k && step.degree <= n; ++i) step.degree *= field.p();
      else
        step.degree = member.k;
    }
    plan.push_back(std::move(step));
  }

  // substituted value of every point under every alpha, shared across workers
  std::vector<std::vector<std::uint32_t>> value_table(alphas.size());
  for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
    value_table[ai].resize(points);
    for (std::uint64_t idx = 0; idx < points; ++idx) {
      std::uint64_t rest = idx;
      Fe val = fe_one;
      for (unsigned j = m; j-- > 0;) {
        Fe coord{static_cast<std::uint32_t>(rest % field.q())};
        rest /= field.q();
        val = field.mul(val, field.pow(coord, alphas[ai][j]));
      }
      value_table[ai][idx] = val.v;
    }
  }

  auto make_stream = [&](std::uint32_t first) { return MultiOrbitStream(field, m, n, first); };
  auto make_key_fn = [&]() {
    return [&, sub_counts = std::vector<std::uint32_t>{}, series = std::vector<Fe>{},
            scratch = std::vector<Fe>{},
            coeffs = std::vector<std::vector<Fe>>{}](const std::vector<std::uint32_t>& counts,
                                                     std::string& key) mutable -> std::uint32_t {
      coeffs.assign(alphas.size(), {});
      for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        sub_counts.assign(field.q() - 1, 0);
        for (std::uint64_t idx = 0; idx < points; ++idx) {
          std::uint32_t c = counts[static_cast<std::size_t>(idx)];
          if (c == 0) continue;
          std::uint32_t val = value_table[ai][idx];
          if (val != 0) sub_counts[val - 1] += c;
        }
        detail::gen_poly_into(field, sub_counts, n, series, scratch);
        coeffs[ai] = series;
      }
      std::vector<std::vector<Fe>> rows;
      if (cheap_kmax > 0) rows = cheap_rows(MultiOrbit(field, m, n, counts), cheap_kmax);
      for (const Step& step : plan) {
        std::uint32_t v;
        if (step.alpha_id >= 0)
          v = step.degree <= n ? coeffs[step.alpha_id][static_cast<std::size_t>(step.degree)].v : 0;
        else
          v = rows[step.k][step.d].v;
        detail::append_element(key, v);
      }
      return 0;
    };
  };

  auto conflict =
      detail::find_first_conflict<detail::PairBucket>(n, opt.workers, make_stream, make_key_fn);
  if (!conflict) return MultiSeparatingOutcome{std::nullopt, total};
  return MultiSeparatingOutcome{
      MultiWitness{MultiOrbit(field, m, n, conflict->second.counts),
                   MultiOrbit(field, m, n, conflict->first.counts)},
      total};
}

MultiBounds multi_bounds(const Field& field, unsigned m, unsigned n) {
  MultiBounds bounds;
  bounds.q = field.q();
  bounds.m = m;
  bounds.n = n;
  bounds.orbit_count = multi_orbit_count(field, m, n);
  bounds.klr_bound = ceil_log(field.q(), bounds.orbit_count);
  bounds.main_size = family_main(field, m, n).size();
  bounds.amitsur_size = family_amitsur(m, n).size();
  bounds.cheap_size = family_cheap(m, n).size();
  return bounds;
}

}  // namespace sepsym
