#pragma once

// Landau's function and the small amount of modular arithmetic the
// constructions need.

#include <cstdint>
#include <vector>

namespace fla {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Product of prime powers with strictly increasing primes.
struct PrimePowerDecomposition {
  std::vector<PrimePower> factors;

  std::uint64_t value() const;   // product of the powers
  std::uint64_t weight() const;  // sum of the powers
  std::vector<std::uint64_t> powers() const;
  friend bool operator==(const PrimePowerDecomposition&, const PrimePowerDecomposition&) = default;
};

struct LandauValue {
  std::uint64_t value;
  PrimePowerDecomposition witness;
};

/// F(n): the largest product of prime powers (distinct primes) whose sum is
/// at most n, with a decomposition attaining it. Among decompositions of the
/// maximal value the one of least weight is returned.
/// Throws std::invalid_argument for n == 0 and std::overflow_error when F(n)
/// does not fit in 64 bits.
LandauValue landau(unsigned n);

/// max lcm over all partitions of n by direct enumeration. Limited to
/// n <= 30; throws std::invalid_argument above that.
std::uint64_t landau_bruteforce(unsigned n);

/// Prime-power factorization of ell >= 1 (empty for 1).
PrimePowerDecomposition factorize(std::uint64_t ell);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// The unique x in [0, n*ell) with x = i (mod n) and x = j (mod ell).
/// Throws std::invalid_argument unless gcd(n, ell) == 1, i < n and j < ell.
std::uint64_t crt_witness(std::uint64_t i, std::uint64_t j, std::uint64_t n, std::uint64_t ell);

/// gcd(n, F(n)) == 1.
bool coprime_landau_check(unsigned n);

bool is_prime(std::uint64_t n);

}  // namespace fla
