#include "fla/numtheory.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace fla {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < exponent; ++k) v *= prime;
  return v;
}

std::uint64_t PrimePowerDecomposition::value() const {
  std::uint64_t v = 1;
  for (const auto& f : factors) v *= f.value();
  return v;
}

std::uint64_t PrimePowerDecomposition::weight() const {
  std::uint64_t w = 0;
  for (const auto& f : factors) w += f.value();
  return w;
}

std::vector<std::uint64_t> PrimePowerDecomposition::powers() const {
  std::vector<std::uint64_t> out;
  for (const auto& f : factors) out.push_back(f.value());
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePowerDecomposition factorize(std::uint64_t ell) {
  if (ell == 0) throw std::invalid_argument("cannot factorize 0");
  PrimePowerDecomposition out;
  for (std::uint64_t p = 2; p * p <= ell; ++p) {
    unsigned k = 0;
    while (ell % p == 0) {
      ell /= p;
      ++k;
    }
    if (k) out.factors.push_back({p, k});
  }
  if (ell > 1) out.factors.push_back({ell, 1});
  return out;
}

LandauValue landau(unsigned n) {
  if (n == 0) throw std::invalid_argument("landau: n must be positive");
  using wide = unsigned __int128;
  constexpr wide limit = std::numeric_limits<std::uint64_t>::max();

  // best[b]: largest product of powers of the primes processed so far with
  // weight at most b. Every candidate is itself attainable within weight n,
  // so nothing exceeds F(n); overflow past 64 bits therefore means F(n) does.
  struct Cell {
    wide value = 1;
    unsigned weight = 0;
  };
  std::vector<Cell> best(n + 1);
  // choice[i][b]: exponent of the i-th prime used by best[b] after step i.
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<unsigned>> choice;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    primes.push_back(p);
    std::vector<Cell> next = best;
    std::vector<unsigned> chosen(n + 1, 0);
    for (unsigned b = 0; b <= n; ++b) {
      std::uint64_t pk = p;
      for (unsigned k = 1; pk <= b; ++k, pk *= p) {
        const Cell& base = best[b - pk];
        wide v = base.value * pk;
        unsigned w = base.weight + static_cast<unsigned>(pk);
        if (v > next[b].value || (v == next[b].value && w < next[b].weight)) {
          next[b] = {v, w};
          chosen[b] = k;
        }
      }
    }
    best = std::move(next);
    choice.push_back(std::move(chosen));
  }
  if (best[n].value > limit)
    throw std::overflow_error("landau(" + std::to_string(n) + ") exceeds 64 bits");

  LandauValue out{static_cast<std::uint64_t>(best[n].value), {}};
  unsigned budget = n;
  for (std::size_t i = primes.size(); i-- > 0;) {
    unsigned k = choice[i][budget];
    if (k == 0) continue;
    PrimePower pp{primes[i], k};
    out.witness.factors.insert(out.witness.factors.begin(), pp);
    budget -= static_cast<unsigned>(pp.value());
  }
  return out;
}

namespace {

void partitions_max_lcm(unsigned remaining, unsigned max_part, std::uint64_t current,
                        std::uint64_t& best) {
  if (remaining == 0) {
    if (current > best) best = current;
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
    partitions_max_lcm(remaining - part, part, lcm(current, part), best);
}

}  // namespace

std::uint64_t landau_bruteforce(unsigned n) {
  if (n == 0 || n > 30) throw std::invalid_argument("landau_bruteforce: n must be in 1..30");
  std::uint64_t best = 0;
  partitions_max_lcm(n, n, 1, best);
  return best;
}

std::uint64_t crt_witness(std::uint64_t i, std::uint64_t j, std::uint64_t n, std::uint64_t ell) {
  if (n == 0 || ell == 0 || gcd(n, ell) != 1)
    throw std::invalid_argument("crt_witness: moduli must be coprime");
  if (i >= n || j >= ell) throw std::invalid_argument("crt_witness: residue out of range");
  // Step through the residues j, j+ell, ... until one is i mod n; at most n steps.
  for (std::uint64_t x = j; x < n * ell; x += ell)
    if (x % n == i) return x;
  throw std::logic_error("crt_witness: no solution despite coprime moduli");
}

bool coprime_landau_check(unsigned n) { return gcd(n, landau(n).value) == 1; }

}  // namespace fla
