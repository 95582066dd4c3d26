#include "sepsym/separating.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>

#include "scan_util.hpp"

namespace sepsym {

IndexSet::IndexSet(unsigned q, unsigned n, std::vector<unsigned> degrees)
    : q_(q), n_(n), degrees_(std::move(degrees)) {
  factor_prime_power(q_);
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 1 || degrees_[i] > n_)
      throw Error(ErrorKind::InvalidArgument, "degree out of [1, n]");
    if (i > 0 && degrees_[i] <= degrees_[i - 1])
      throw Error(ErrorKind::InvalidArgument, "degrees must be strictly increasing");
  }
}

bool IndexSet::contains(unsigned d) const {
  return std::binary_search(degrees_.begin(), degrees_.end(), d);
}

IndexSet IndexSet::without(unsigned d) const {
  std::vector<unsigned> rest;
  rest.reserve(degrees_.size());
  for (unsigned x : degrees_)
    if (x != d) rest.push_back(x);
  return IndexSet(q_, n_, std::move(rest));
}

IndexSet IndexSet::restricted(unsigned m) const {
  std::vector<unsigned> rest;
  for (unsigned x : degrees_)
    if (x <= m) rest.push_back(x);
  return IndexSet(q_, m, std::move(rest));
}

IndexSet index_set(unsigned q, unsigned n) {
  auto [p, e] = factor_prime_power(q);
  std::set<unsigned> degs;
  for (unsigned j = 1; j < q; ++j)
    for (std::uint64_t d = j; d <= n; d *= p) degs.insert(static_cast<unsigned>(d));
  return IndexSet(q, n, std::vector<unsigned>(degs.begin(), degs.end()));
}

namespace {

// Least degree in 1..n where the two orbits' s-values differ; 0 when equal.
unsigned first_differing_degree(const OrbitMultiplicity& a, const OrbitMultiplicity& b) {
  TruncatedSeries ga = gen_poly(a), gb = gen_poly(b);
  for (unsigned d = 1; d <= a.ambient(); ++d)
    if (ga.coeff(d) != gb.coeff(d)) return d;
  return 0;
}

WitnessPair make_pair_witness(const Field& field, unsigned n, const detail::Slot& earlier,
                              const detail::Slot& later, unsigned k, WitnessPair::Kind kind) {
  OrbitMultiplicity v(field, n, later.counts);
  OrbitMultiplicity w(field, n, earlier.counts);
  return WitnessPair{std::move(v), std::move(w), k, kind};
}

}  // namespace

SeparatingOutcome is_separating(const Field& field, unsigned n, const IndexSet& A,
                                const EnumOptions& opt) {
  if (A.q() != field.q())
    throw Error(ErrorKind::InvalidArgument, "index set built for a different field");
  std::uint64_t total = checked_orbit_count(field, n, opt.cap);

  const std::vector<unsigned>& degrees = A.degrees();
  auto make_stream = [&](std::uint32_t first) { return OrbitStream(field, n, first); };
  auto make_key_fn = [&]() {
    return [&field, &degrees, n, out = std::vector<Fe>{},
            scratch = std::vector<Fe>{}](const std::vector<std::uint32_t>& counts,
                                         std::string& key) mutable -> std::uint32_t {
      detail::gen_poly_into(field, counts, n, out, scratch);
      for (unsigned d : degrees) detail::append_element(key, d <= n ? out[d].v : 0);
      return 0;
    };
  };

  auto conflict =
      detail::find_first_conflict<detail::PairBucket>(n, opt.workers, make_stream, make_key_fn);
  if (!conflict) return SeparatingOutcome{std::nullopt, total};

  WitnessPair witness = make_pair_witness(field, n, conflict->first, conflict->second, 0,
                                          WitnessPair::Kind::Collision);
  witness.k = first_differing_degree(witness.v, witness.w);
  return SeparatingOutcome{std::move(witness), total};
}

std::optional<WitnessPair> irreplaceable_witness(const Field& field, unsigned n, unsigned k,
                                                 const EnumOptions& opt) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "k must lie in [1, n]");
  checked_orbit_count(field, n, opt.cap);

  std::vector<unsigned> degrees;
  degrees.reserve(n - 1);
  for (unsigned d = 1; d <= n; ++d)
    if (d != k) degrees.push_back(d);

  auto make_stream = [&](std::uint32_t first) { return OrbitStream(field, n, first); };
  auto make_key_fn = [&]() {
    return [&field, &degrees, n, k, out = std::vector<Fe>{},
            scratch = std::vector<Fe>{}](const std::vector<std::uint32_t>& counts,
                                         std::string& key) mutable -> std::uint32_t {
      detail::gen_poly_into(field, counts, n, out, scratch);
      for (unsigned d : degrees) detail::append_element(key, out[d].v);
      return out[k].v;
    };
  };

  auto conflict =
      detail::find_first_conflict<detail::MarkedBucket>(n, opt.workers, make_stream, make_key_fn);
  if (!conflict) return std::nullopt;

  WitnessPair witness = make_pair_witness(field, n, conflict->first, conflict->second, k,
                                          WitnessPair::Kind::Irreplaceable);
  if (!witness_valid(witness))
    throw Error(ErrorKind::Falsified, "irreplaceability witness failed re-verification");
  return witness;
}

bool witness_valid(const WitnessPair& witness) {
  const OrbitMultiplicity& v = witness.v;
  const OrbitMultiplicity& w = witness.w;
  if (!(v.field() == w.field()) || v.ambient() != w.ambient()) return false;
  if (v == w) return false;
  TruncatedSeries gv = gen_poly(v), gw = gen_poly(w);
  if (witness.kind == WitnessPair::Kind::Irreplaceable) {
    for (unsigned d = 1; d <= v.ambient(); ++d) {
      bool same = gv.coeff(d) == gw.coeff(d);
      if (d == witness.k ? same : !same) return false;
    }
    return true;
  }
  // collision: k is the least differing degree
  for (unsigned d = 1; d < witness.k; ++d)
    if (gv.coeff(d) != gw.coeff(d)) return false;
  return witness.k >= 1 && witness.k <= v.ambient() && gv.coeff(witness.k) != gw.coeff(witness.k);
}

namespace {

class SeparatingMemo {
 public:
  SeparatingMemo(const Field& field, unsigned n, const IndexSet& A, const EnumOptions& opt)
      : field_(field), n_(n), base_(A), opt_(opt) {}

  bool separating(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    bool r = is_separating(field_, n_, subset(mask), opt_).separating();
    memo_.emplace(mask, r);
    return r;
  }

  IndexSet subset(std::uint32_t mask) const {
    std::vector<unsigned> degs;
    for (std::size_t i = 0; i < base_.degrees().size(); ++i)
      if (mask & (1u << i)) degs.push_back(base_.degrees()[i]);
    return IndexSet(base_.q(), base_.n(), std::move(degs));
  }

 private:
  const Field& field_;
  unsigned n_;
  const IndexSet& base_;
  EnumOptions opt_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

}  // namespace

std::vector<IndexSet> minimal_subsets(const Field& field, unsigned n, const IndexSet& A,
                                      MinimalMode mode, const EnumOptions& opt) {
  std::size_t width = A.degrees().size();
  if (width > 20 && mode == MinimalMode::All)
    throw Error(ErrorKind::TooMany, "all-minimal search limited to 20 degrees");
  if (width > 31) throw Error(ErrorKind::TooMany, "index set too wide");

  SeparatingMemo memo(field, n, A, opt);
  std::uint32_t full = width == 0 ? 0 : (1u << width) - 1;
  if (!memo.separating(full))
    throw Error(ErrorKind::NotSeparating, "the given set does not separate");

  if (mode == MinimalMode::OneGreedy) {
    std::uint32_t current = full;
    bool removed = true;
    while (removed) {
      removed = false;
      // largest removable degree first
      for (std::size_t i = width; i-- > 0;) {
        std::uint32_t bit = 1u << i;
        if (!(current & bit)) continue;
        if (memo.separating(current & ~bit)) {
          current &= ~bit;
          removed = true;
          break;
        }
      }
    }
    return {memo.subset(current)};
  }

  std::set<std::uint32_t> visited, minimal;
  std::vector<std::uint32_t> stack{full};
  while (!stack.empty()) {
    std::uint32_t s = stack.back();
    stack.pop_back();
    if (!visited.insert(s).second) continue;
    bool any_removable = false;
    for (std::size_t i = 0; i < width; ++i) {
      std::uint32_t bit = 1u << i;
      if (!(s & bit)) continue;
      if (memo.separating(s & ~bit)) {
        any_removable = true;
        stack.push_back(s & ~bit);
      }
    }
    if (!any_removable) minimal.insert(s);
  }

  std::vector<IndexSet> result;
  std::vector<std::vector<unsigned>> degree_lists;
  for (std::uint32_t mask : minimal) degree_lists.push_back(memo.subset(mask).degrees());
  std::sort(degree_lists.begin(), degree_lists.end());
  result.reserve(degree_lists.size());
  for (auto& degs : degree_lists) result.emplace_back(A.q(), A.n(), std::move(degs));
  return result;
}

BoundsReport bounds_report(unsigned q, unsigned n) {
  auto [p, e] = factor_prime_power(q);
  BoundsReport report;
  report.q = q;
  report.n = n;
  report.set_size = index_set(q, n).size();
  report.orbit_count = binomial(std::uint64_t{n} + q - 1, q - 1);
  report.klr_bound = ceil_log(q, report.orbit_count);
  if (e == 1)
    report.defect = static_cast<int>(report.set_size) - static_cast<int>(report.klr_bound);
  return report;
}

WitnessPair roots_of_unity_witness(const Field& field, unsigned k) {
  if (k == 0 || (field.q() - 1) % k != 0)
    throw Error(ErrorKind::NotDivisor, "k must divide q - 1");

  std::vector<std::uint32_t> counts(field.q() - 1, 0);
  unsigned found = 0;
  for (std::uint32_t a = 1; a < field.q(); ++a) {
    if (field.pow(Fe{a}, k) == fe_one) {
      counts[a - 1] = 1;
      ++found;
    }
  }
  if (found != k) throw Error(ErrorKind::Falsified, "x^k - 1 did not have k roots");

  WitnessPair witness{OrbitMultiplicity(field, k, std::move(counts)), OrbitMultiplicity(field, k),
                      k, WitnessPair::Kind::Irreplaceable};
  Fe expected = (k % 2 == 0) ? field.neg(fe_one) : fe_one;  // (-1)^(k+1)
  if (!witness_valid(witness) || s_value(witness.v, k) != expected)
    throw Error(ErrorKind::Falsified, "roots-of-unity witness failed verification");
  return witness;
}

namespace {

// Divides the monic polynomial by (x - a) as long as a stays a root.
// Returns false if a nonzero remainder ever survives to the end (cannot
// happen; the division is only applied while poly(a) == 0).
void strip_root(const Field& field, std::vector<Fe>& poly, Fe a) {
  while (poly.size() > 1) {
    // Horner evaluation at a with the quotient produced on the fly
    std::vector<Fe> quotient(poly.size() - 1, fe_zero);
    Fe acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
      quotient[i] = acc;
      acc = field.add(field.mul(acc, a), poly[i]);
    }
    if (acc.v != 0) break;  // a no longer a root
    poly = std::move(quotient);
  }
}

bool splits_over_field(const Field& field, std::vector<Fe> poly) {
  for (std::uint32_t a = 0; a < field.q() && poly.size() > 1; ++a)
    strip_root(field, poly, Fe{a});
  return poly.size() == 1;
}

}  // namespace

LacunaryResult lacunary_check(const Field& field, std::span<const Fe> f, std::span<const Fe> g) {
  if (f.size() != g.size() || f.empty())
    throw Error(ErrorKind::DegreeMismatch, "polynomials must share a degree");
  if (f.back() != fe_one || g.back() != fe_one)
    throw Error(ErrorKind::NotMonic, "polynomials must be monic");
  for (Fe c : f)
    if (c.v >= field.q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of field");
  for (Fe c : g)
    if (c.v >= field.q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of field");

  unsigned n = static_cast<unsigned>(f.size()) - 1;
  if (!splits_over_field(field, std::vector<Fe>(f.begin(), f.end())))
    return LacunaryResult{LacunaryResult::Status::NotSplit, 0, 0};
  if (!splits_over_field(field, std::vector<Fe>(g.begin(), g.end())))
    return LacunaryResult{LacunaryResult::Status::NotSplit, 0, 1};

  IndexSet lacunary = index_set(field.q(), n);
  for (unsigned j : lacunary.degrees())
    if (f[n - j] != g[n - j]) return LacunaryResult{LacunaryResult::Status::DifferAt, n - j, 0};

  for (unsigned i = 0; i <= n; ++i)
    if (f[i] != g[i])
      throw Error(ErrorKind::Falsified,
                  "split polynomials agree on the lacunary positions but differ at degree " +
                      std::to_string(i));
  return LacunaryResult{LacunaryResult::Status::Equal, 0, 0};
}

bool monotonicity_check(const Field& field, unsigned n, unsigned m, const IndexSet& A,
                        const EnumOptions& opt) {
  if (m > n) throw Error(ErrorKind::InvalidArgument, "m must not exceed n");
  if (!is_separating(field, n, A, opt).separating()) return true;  // vacuous
  return is_separating(field, m, A.restricted(m), opt).separating();
}

// ---------------------------------------------------------------------------
// digit recovery and reconstruction

namespace {

struct RecoverTables {
  struct ASide {
    std::vector<unsigned> digits;  // per element of the A half, lex order
    std::vector<Fe> inv_series;    // inverse of the partial product mod x^q
  };
  std::vector<std::uint32_t> a_elems, b_elems;  // element indices
  std::vector<ASide> a_side;
  std::unordered_map<std::uint64_t, std::vector<unsigned>> b_side;  // packed poly -> digits
};

std::uint64_t pack_series_tail(std::span<const Fe> series) {
  // coefficients 1..q-1, 4 bits each (q <= 9 within the recovery limit)
  std::uint64_t key = 0;
  for (std::size_t i = series.size(); i-- > 1;) key = (key << 4) | series[i].v;
  return key;
}

std::vector<Fe> series_inverse(const Field& field, std::span<const Fe> s) {
  // s[0] == 1
  std::vector<Fe> inv(s.size(), fe_zero);
  inv[0] = fe_one;
  for (std::size_t d = 1; d < s.size(); ++d) {
    Fe acc = fe_zero;
    for (std::size_t i = 1; i <= d; ++i)
      if (s[i].v != 0 && inv[d - i].v != 0) acc = field.add(acc, field.mul(s[i], inv[d - i]));
    inv[d] = field.neg(acc);
  }
  return inv;
}

// Enumerates digit assignments over the given elements in lex order and hands
// each (digits, product series mod x^q) to the sink.
template <class Sink>
void for_each_assignment(const Field& field, const std::vector<std::uint32_t>& elems, Sink&& sink) {
  unsigned q = field.q();
  std::vector<unsigned> digits(elems.size(), 0);
  std::vector<std::uint32_t> counts(q - 1, 0);
  std::vector<Fe> series, scratch;
  while (true) {
    for (std::size_t i = 0; i < elems.size(); ++i) counts[elems[i] - 1] = digits[i];
    detail::gen_poly_into(field, counts, q - 1, series, scratch);
    sink(digits, series);
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
}

const RecoverTables& recover_tables(const Field& field) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::unique_ptr<RecoverTables>> cache;

  std::string key = std::to_string(field.q());
  for (unsigned c : field.modulus()) key += "," + std::to_string(c);

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto tables = std::make_unique<RecoverTables>();
  unsigned q = field.q();
  unsigned half = (q - 1) / 2;
  for (std::uint32_t a = 1; a < q; ++a)
    (a <= half ? tables->a_elems : tables->b_elems).push_back(a);

  for_each_assignment(field, tables->a_elems,
                      [&](const std::vector<unsigned>& digits, std::span<const Fe> series) {
                        tables->a_side.push_back(
                            RecoverTables::ASide{digits, series_inverse(field, series)});
                      });
  for_each_assignment(field, tables->b_elems,
                      [&](const std::vector<unsigned>& digits, std::span<const Fe> series) {
                        tables->b_side.try_emplace(pack_series_tail(series), digits);
                      });

  auto [pos, inserted] = cache.emplace(key, std::move(tables));
  return *pos->second;
}

}  // namespace

std::optional<std::vector<unsigned>> base_digit_recover(const Field& field, std::span<const Fe> c,
                                                        const RecoverOptions& opt) {
  unsigned q = field.q();
  if (q > 9 || (q == 9 && !opt.allow_q9))
    throw Error(ErrorKind::UnsupportedScale,
                q > 9 ? "digit recovery supports q <= 9" : "q = 9 recovery requires opting in");
  if (c.size() != std::size_t{q} - 1)
    throw Error(ErrorKind::InvalidArgument, "need q-1 coefficients");
  for (Fe x : c)
    if (x.v >= q) throw Error(ErrorKind::InvalidArgument, "coefficient out of field");

  const RecoverTables& tables = recover_tables(field);

  std::vector<Fe> target(q, fe_zero);
  target[0] = fe_one;
  for (unsigned i = 1; i < q; ++i) target[i] = c[i - 1];

  std::vector<Fe> rem(q, fe_zero);
  for (const auto& a : tables.a_side) {
    // required B-side product = target * inverse(A-side product)
    for (unsigned d = 0; d < q; ++d) {
      Fe acc = fe_zero;
      for (unsigned i = 0; i <= d; ++i)
        if (target[i].v != 0 && a.inv_series[d - i].v != 0)
          acc = field.add(acc, field.mul(target[i], a.inv_series[d - i]));
      rem[d] = acc;
    }
    auto hit = tables.b_side.find(pack_series_tail(rem));
    if (hit == tables.b_side.end()) continue;

    std::vector<unsigned> residues(q - 1, 0);
    for (std::size_t i = 0; i < tables.a_elems.size(); ++i)
      residues[tables.a_elems[i] - 1] = a.digits[i] % field.p();
    for (std::size_t i = 0; i < tables.b_elems.size(); ++i)
      residues[tables.b_elems[i] - 1] = hit->second[i] % field.p();
    return residues;
  }
  return std::nullopt;
}

std::optional<OrbitMultiplicity> reconstruct(const Field& field, unsigned n,
                                             const std::map<unsigned, Fe>& values,
                                             const RecoverOptions& opt) {
  IndexSet expected = index_set(field.q(), n);
  if (values.size() != expected.size())
    throw Error(ErrorKind::InvalidArgument, "values must be keyed exactly by [n]_q");
  for (unsigned d : expected.degrees())
    if (!values.count(d))
      throw Error(ErrorKind::InvalidArgument, "missing value at degree " + std::to_string(d));

  unsigned q = field.q();
  unsigned p = field.p();
  if (n == 0) return OrbitMultiplicity(field, 0);

  auto input = [&](std::uint64_t degree) -> Fe {
    if (degree == 0) return fe_one;
    if (degree > n) return fe_zero;
    return values.at(static_cast<unsigned>(degree));
  };

  unsigned levels = floor_log(p, n) + 1;  // digits 0 .. floor(log_p n)
  std::vector<std::vector<unsigned>> digits;

  // level 0 straight from the low coefficients
  {
    std::vector<Fe> c(q - 1);
    for (unsigned j = 1; j < q; ++j) c[j - 1] = input(j);
    auto d0 = base_digit_recover(field, c, opt);
    if (!d0) return std::nullopt;
    digits.push_back(std::move(*d0));
  }

  std::vector<Fe> low_series, scratch;
  for (unsigned k = 0; k + 1 < levels; ++k) {
    // assemble the truncation O_{{k}} known so far
    std::vector<std::uint32_t> low_counts(q - 1, 0);
    std::uint64_t weight = 0, pj = 1;
    for (unsigned lvl = 0; lvl <= k; ++lvl) {
      for (unsigned i = 0; i < q - 1; ++i)
        low_counts[i] += static_cast<std::uint32_t>(digits[lvl][i] * pj);
      pj *= p;
    }
    for (unsigned i = 0; i < q - 1; ++i) weight += low_counts[i];
    if (weight > n) return std::nullopt;

    detail::gen_poly_into(field, low_counts, n, low_series, scratch);
    auto low_value = [&](std::uint64_t degree) -> Fe {
      return degree <= n ? low_series[static_cast<std::size_t>(degree)] : fe_zero;
    };

    // forward-substitute the triangular system for y_j = s_{j p^{k+1}} of the
    // high part, then pull p^{k+1}-th roots to land on the shifted orbit
    std::uint64_t pk1 = pj;
    std::vector<Fe> y(q - 1, fe_zero), shifted(q - 1, fe_zero);
    for (unsigned j = 1; j < q; ++j) {
      Fe acc = field.sub(input(j * pk1), low_value(std::uint64_t{j} * pk1));
      for (unsigned i = 1; i < j; ++i) {
        Fe coeff = low_value(std::uint64_t{j - i} * pk1);
        if (coeff.v != 0 && y[i - 1].v != 0) acc = field.sub(acc, field.mul(coeff, y[i - 1]));
      }
      y[j - 1] = acc;
      shifted[j - 1] = field.pth_root(acc, k + 1);
    }

    auto dk = base_digit_recover(field, shifted, opt);
    if (!dk) return std::nullopt;
    digits.push_back(std::move(*dk));
  }

  std::vector<std::uint32_t> counts(q - 1, 0);
  std::uint64_t weight = 0, pj = 1;
  for (unsigned lvl = 0; lvl < levels; ++lvl) {
    for (unsigned i = 0; i < q - 1; ++i)
      counts[i] += static_cast<std::uint32_t>(digits[lvl][i] * pj);
    pj *= p;
  }
  for (unsigned i = 0; i < q - 1; ++i) weight += counts[i];
  if (weight > n) return std::nullopt;

  OrbitMultiplicity orbit(field, n, std::move(counts));
  Signature sig = signature(orbit, expected.degrees());
  std::size_t idx = 0;
  for (unsigned d : expected.degrees())
    if (sig[idx++] != values.at(d)) return std::nullopt;
  return orbit;
}

}  // namespace sepsym
