#include "sepsym/bigint.hpp"

#include <stdexcept>

namespace sepsym {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

unsigned ceil_log(unsigned base, const BigInt& value) {
  if (base < 2 || value < 1) throw std::invalid_argument("ceil_log: base >= 2, value >= 1");
  BigInt power = 1;
  unsigned b = 0;
  while (power < value) {
    power *= base;
    ++b;
  }
  return b;
}

unsigned floor_log(unsigned base, std::uint64_t value) {
  if (base < 2 || value < 1) throw std::invalid_argument("floor_log: base >= 2, value >= 1");
  unsigned k = 0;
  std::uint64_t power = 1;
  while (power <= value / base) {
    power *= base;
    ++k;
  }
  return k;
}

}  // namespace sepsym
