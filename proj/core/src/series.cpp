#include "sepsym/series.hpp"

#include <algorithm>

namespace sepsym {

TruncatedSeries::TruncatedSeries(Field field, unsigned n, std::vector<Fe> coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != std::size_t{n_} + 1)
    throw Error(ErrorKind::InvalidArgument, "coefficient vector must have n+1 entries");
  for (Fe c : coeffs_)
    if (c.v >= field_.q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of field");
}

TruncatedSeries TruncatedSeries::one(Field field, unsigned n) {
  std::vector<Fe> c(std::size_t{n} + 1, fe_zero);
  c[0] = fe_one;
  return TruncatedSeries(std::move(field), n, std::move(c));
}

TruncatedSeries TruncatedSeries::with_truncation(unsigned m) const {
  std::vector<Fe> c(std::size_t{m} + 1, fe_zero);
  std::copy_n(coeffs_.begin(), std::min<std::size_t>(m, n_) + 1, c.begin());
  return TruncatedSeries(field_, m, std::move(c));
}

namespace detail {

void gen_poly_into(const Field& field, std::span<const std::uint32_t> counts, unsigned n,
                   std::vector<Fe>& out, std::vector<Fe>& factor_scratch) {
  out.assign(std::size_t{n} + 1, fe_zero);
  out[0] = fe_one;
  unsigned deg = 0;
  for (std::uint32_t i = 0; i < counts.size(); ++i) {
    std::uint32_t c = counts[i];
    if (c == 0) continue;
    Fe a{i + 1};

    // (1 + a x)^c mod x^{n+1}: coefficient j is binom(c, j) a^j with the
    // binomial Lucas-reduced mod p
    unsigned fd = static_cast<unsigned>(std::min<std::uint64_t>(c, n));
    factor_scratch.assign(std::size_t{fd} + 1, fe_zero);
    Fe apow = fe_one;
    for (unsigned j = 1; j <= fd; ++j) {
      apow = field.mul(apow, a);
      Fe b = field.binom_mod_p(c, j);
      if (b.v != 0) factor_scratch[j] = field.mul(b, apow);
    }

    unsigned new_deg = std::min(deg + fd, n);
    for (unsigned d = new_deg; d >= 1; --d) {
      Fe acc = out[d];
      unsigned jmax = std::min(fd, d);
      for (unsigned j = 1; j <= jmax; ++j) {
        Fe f = factor_scratch[j];
        if (f.v == 0) continue;
        Fe o = out[d - j];
        if (o.v == 0) continue;
        acc = field.add(acc, field.mul(f, o));
      }
      out[d] = acc;
    }
    deg = new_deg;
  }
}

}  // namespace detail

TruncatedSeries gen_poly(const OrbitMultiplicity& orbit) {
  std::vector<Fe> out, scratch;
  detail::gen_poly_into(orbit.field(), orbit.counts(), orbit.ambient(), out, scratch);
  return TruncatedSeries(orbit.field(), orbit.ambient(), std::move(out));
}

Fe s_value(const OrbitMultiplicity& orbit, std::uint64_t k) {
  if (k == 0) return fe_one;
  if (k > orbit.ambient()) return fe_zero;
  return gen_poly(orbit).coeff(k);
}

Signature signature(const OrbitMultiplicity& orbit, std::span<const unsigned> degrees) {
  TruncatedSeries g = gen_poly(orbit);
  Signature sig;
  sig.reserve(degrees.size());
  for (unsigned d : degrees) sig.push_back(d == 0 ? fe_one : g.coeff(d));
  return sig;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!(f.field() == g.field()))
    throw Error(ErrorKind::FieldMismatch, "series over different fields");
  if (f.truncation() != g.truncation())
    throw Error(ErrorKind::TruncationMismatch, "series with different truncation bounds");
  const Field& F = f.field();
  unsigned n = f.truncation();
  std::vector<Fe> out(std::size_t{n} + 1, fe_zero);
  for (unsigned i = 0; i <= n; ++i) {
    Fe fi = f.coeffs()[i];
    if (fi.v == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      Fe gj = g.coeffs()[j];
      if (gj.v == 0) continue;
      out[i + j] = F.add(out[i + j], F.mul(fi, gj));
    }
  }
  return TruncatedSeries(F, n, std::move(out));
}

TruncatedSeries series_pow_ppow(const TruncatedSeries& f, unsigned k) {
  const Field& F = f.field();
  unsigned n = f.truncation();
  std::vector<Fe> out(std::size_t{n} + 1, fe_zero);
  std::uint64_t pk = 1;
  bool overflow = false;
  for (unsigned i = 0; i < k; ++i) {
    pk *= F.p();
    if (pk > n) {
      overflow = true;
      break;
    }
  }
  if (overflow) {
    out[0] = F.frobenius_pow(f.coeffs()[0], k);
  } else {
    for (std::uint64_t j = 0; j * pk <= n; ++j)
      out[static_cast<std::size_t>(j * pk)] = F.frobenius_pow(f.coeffs()[static_cast<std::size_t>(j)], k);
  }
  return TruncatedSeries(F, n, std::move(out));
}

}  // namespace sepsym
