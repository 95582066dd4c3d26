#ifndef SEPSYM_SERIES_HPP
#define SEPSYM_SERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sepsym/gf.hpp"
#include "sepsym/orbits.hpp"

namespace sepsym {

/// A polynomial over GF(q) truncated at degree n; coefficient j of the
/// generating polynomial of an orbit equals s_j on that orbit.
class TruncatedSeries {
 public:
  TruncatedSeries(Field field, unsigned n, std::vector<Fe> coeffs);

  static TruncatedSeries one(Field field, unsigned n);

  const Field& field() const noexcept { return field_; }
  unsigned truncation() const noexcept { return n_; }
  const std::vector<Fe>& coeffs() const noexcept { return coeffs_; }

  Fe coeff(std::uint64_t j) const { return j <= n_ ? coeffs_[j] : fe_zero; }

  /// The same polynomial re-truncated at degree m (zero padded or cut).
  TruncatedSeries with_truncation(unsigned m) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  unsigned n_;
  std::vector<Fe> coeffs_;
};

/// prod_{a != 0} (1 + a x)^{counts(a)} mod x^{n+1}. Each factor is expanded
/// through Lucas-reduced binomial coefficients rather than repeated
/// multiplication.
TruncatedSeries gen_poly(const OrbitMultiplicity& orbit);

/// s_k on the orbit: coefficient k of gen_poly for k <= n, 0 beyond, 1 at 0.
Fe s_value(const OrbitMultiplicity& orbit, std::uint64_t k);

using Signature = std::vector<Fe>;

/// The tuple of s-values at the given degrees (sorted ascending by caller);
/// degrees above n evaluate to 0.
Signature signature(const OrbitMultiplicity& orbit, std::span<const unsigned> degrees);

/// Product truncated at the common bound. Throws FieldMismatch or
/// TruncationMismatch.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// f^(p^k) by the characteristic-p rule: coefficient c_j lands at degree
/// j p^k as c_j^(p^k); degrees beyond the truncation are dropped.
TruncatedSeries series_pow_ppow(const TruncatedSeries& f, unsigned k);

namespace detail {

/// Hot-path form of gen_poly writing into a caller-owned buffer.
void gen_poly_into(const Field& field, std::span<const std::uint32_t> counts, unsigned n,
                   std::vector<Fe>& out, std::vector<Fe>& factor_scratch);

}  // namespace detail

}  // namespace sepsym

#endif
