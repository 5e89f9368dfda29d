#include "fla/predicates.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "fla/families.hpp"
#include "fla/simulator.hpp"

namespace fla {

namespace {

void require_positive(int n, std::uint64_t ell) {
  if (n < 1 || ell < 1) throw std::invalid_argument("n and ell must be positive");
}

}  // namespace

bool predicate_L(int n, std::uint64_t ell, std::string_view w) {
  require_positive(n, ell);
  return w.size() % ell == 0 && accepts(build_mf(n), w);
}

bool predicate_J(int n, std::uint64_t ell, std::string_view w) {
  require_positive(n, ell);
  const auto as = static_cast<std::uint64_t>(std::count(w.begin(), w.end(), 'a'));
  return as % static_cast<std::uint64_t>(n) == 0 && w.size() % ell == 0;
}

bool predicate_H(int n, std::uint64_t ell, std::string_view w) {
  require_positive(n, ell);
  const std::size_t need = static_cast<std::size_t>(n);
  std::uint64_t as = 0;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w[p - 1] != 'a') continue;
    ++as;
    if (as % static_cast<std::uint64_t>(n) != 0 || p % ell != 0) continue;
    if (p + need > w.size()) continue;
    const auto run = w.substr(p, need);
    if (std::all_of(run.begin(), run.end(), [](char c) { return c == 'b'; })) return true;
  }
  return false;
}

bool predicate_E(int n, std::string_view w) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::size_t k = static_cast<std::size_t>(n);
  return w.size() >= k && w.substr(0, k) == w.substr(w.size() - k);
}

Oracle oracle_L(int n, std::uint64_t ell) {
  require_positive(n, ell);
  auto mf = std::make_shared<const OneWayFA>(build_mf(n));
  return [mf, ell](std::string_view w) { return w.size() % ell == 0 && accepts(*mf, w); };
}

Oracle oracle_J(int n, std::uint64_t ell) {
  require_positive(n, ell);
  return [n, ell](std::string_view w) { return predicate_J(n, ell, w); };
}

Oracle oracle_H(int n, std::uint64_t ell) {
  require_positive(n, ell);
  return [n, ell](std::string_view w) { return predicate_H(n, ell, w); };
}

Oracle oracle_E(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return [n](std::string_view w) { return predicate_E(n, w); };
}

}  // namespace fla
