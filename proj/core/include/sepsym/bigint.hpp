#ifndef SEPSYM_BIGINT_HPP
#define SEPSYM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace sepsym {

using BigInt = boost::multiprecision::cpp_int;

/// binom(n, k) computed exactly.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Smallest b >= 0 with base^b >= value. Requires base >= 2, value >= 1.
unsigned ceil_log(unsigned base, const BigInt& value);

/// Largest k >= 0 with base^k <= value, or 0 when value < base. Requires base >= 2, value >= 1.
unsigned floor_log(unsigned base, std::uint64_t value);

}  // namespace sepsym

#endif
