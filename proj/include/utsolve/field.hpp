#pragma once

// Arithmetic in the prime field F_p on canonical residues 0..p-1.

#include <cstdint>
#include <optional>

namespace utsolve {

using Residue = std::uint32_t;

/// Canonical residue of an arbitrary signed integer.
inline Residue reduce(long long value, Residue p) {
  long long r = value % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

inline Residue add_mod(Residue a, Residue b, Residue p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}

inline Residue sub_mod(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p - b);
}

inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(std::uint64_t{a} * b % p);
}

inline Residue neg_mod(Residue a, Residue p) { return a == 0 ? 0 : p - a; }

Residue pow_mod(Residue base, std::uint64_t exponent, Residue p);

/// Multiplicative inverse by Fermat, a^(p-2). Throws std::domain_error for a = 0.
Residue inverse_mod(Residue a, Residue p);

bool is_prime(std::uint64_t n);

/// Returns s when q = p^s (s >= 0), nothing otherwise.
std::optional<int> prime_power_exponent(std::uint64_t q, std::uint64_t p);

/// p^s as an integer; throws std::overflow_error past 2^62.
std::uint64_t int_pow(std::uint64_t p, int s);

/// Throws std::invalid_argument unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

}  // namespace utsolve
