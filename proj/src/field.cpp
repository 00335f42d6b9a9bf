#include "utsolve/field.hpp"

#include <stdexcept>
#include <string>

namespace utsolve {

Residue pow_mod(Residue base, std::uint64_t exponent, Residue p) {
  Residue result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

Residue inverse_mod(Residue a, Residue p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse in F_p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<int> prime_power_exponent(std::uint64_t q, std::uint64_t p) {
  if (p < 2 || q == 0) return std::nullopt;
  int s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return s;
}

std::uint64_t int_pow(std::uint64_t p, int s) {
  std::uint64_t r = 1;
  for (int i = 0; i < s; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) throw std::overflow_error("p^s overflows");
    r *= p;
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a supported prime");
  }
}

}  // namespace utsolve
