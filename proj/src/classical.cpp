#include "fla/classical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace fla {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull + (h >> 29);
    return h;
  }
};

bool is_complete_dfa(const OneWayFA& m) {
  const auto k = m.alphabet().size();
  for (State q = 0; q < m.num_states(); ++q)
    for (std::size_t a = 0; a < k; ++a)
      if (m.targets(q, a).size() != 1) return false;
  return true;
}

void require_complete_dfa(const OneWayFA& m, const char* who) {
  if (!is_complete_dfa(m))
    throw std::invalid_argument(std::string(who) + ": machine is not a complete DFA");
}

}  // namespace

OneWayFA determinize(const OneWayFA& m) {
  const int n = m.num_states();
  const std::size_t k = m.alphabet().size();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;

  std::unordered_map<Bits, State, BitsHash> index;
  std::vector<Bits> subsets;
  auto intern = [&](Bits s) {
    auto [it, fresh] = index.emplace(s, static_cast<State>(subsets.size()));
    if (fresh) subsets.push_back(std::move(s));
    return it->second;
  };

  Bits start(words, 0);
  start[m.initial() / 64] |= std::uint64_t{1} << (m.initial() % 64);
  intern(start);

  std::vector<std::vector<State>> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    delta.emplace_back(k);
    for (std::size_t a = 0; a < k; ++a) {
      Bits next(words, 0);
      const Bits& cur = subsets[i];
      for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t bits = cur[w]; bits; bits &= bits - 1) {
          State q = static_cast<State>(w * 64 + std::countr_zero(bits));
          for (State t : m.targets(q, a)) next[t / 64] |= std::uint64_t{1} << (t % 64);
        }
      }
      delta[i][a] = intern(std::move(next));
    }
  }

  OneWayFA out(static_cast<int>(subsets.size()), m.alphabet(), true);
  out.set_initial(0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t w = 0; w < words; ++w) {
      bool hit = false;
      for (std::uint64_t bits = subsets[i][w]; bits; bits &= bits - 1) {
        if (m.is_final(static_cast<State>(w * 64 + std::countr_zero(bits)))) {
          hit = true;
          break;
        }
      }
      if (hit) {
        out.set_final(static_cast<State>(i));
        break;
      }
    }
    for (std::size_t a = 0; a < k; ++a) out.add_transition_index(static_cast<State>(i), a, delta[i][a]);
  }
  return out;
}

OneWayFA product(const OneWayFA& a, const OneWayFA& b, ProductMode mode) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("product: alphabets differ (\"" + a.alphabet().symbols() +
                                "\" vs \"" + b.alphabet().symbols() + "\")");
  const int n2 = b.num_states();
  const std::size_t k = a.alphabet().size();
  OneWayFA out(a.num_states() * n2, a.alphabet(), a.deterministic() && b.deterministic());
  out.set_initial(a.initial() * n2 + b.initial());
  for (State p = 0; p < a.num_states(); ++p) {
    for (State q = 0; q < n2; ++q) {
      const State s = p * n2 + q;
      const bool fa = a.is_final(p), fb = b.is_final(q);
      if (mode == ProductMode::intersect ? (fa && fb) : (fa || fb)) out.set_final(s);
      for (std::size_t x = 0; x < k; ++x)
        for (State tp : a.targets(p, x))
          for (State tq : b.targets(q, x)) out.add_transition_index(s, x, tp * n2 + tq);
    }
  }
  return out;
}

OneWayFA complete(const OneWayFA& dfa) {
  const std::size_t k = dfa.alphabet().size();
  bool needs_sink = false;
  for (State q = 0; q < dfa.num_states(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      const auto n = dfa.targets(q, a).size();
      if (n > 1) throw std::invalid_argument("complete: machine is not deterministic");
      if (n == 0) needs_sink = true;
    }
  }
  OneWayFA out = dfa;
  out.set_deterministic(true);
  if (!needs_sink) return out;
  const State sink = out.add_state();
  for (State q = 0; q < out.num_states(); ++q)
    for (std::size_t a = 0; a < k; ++a)
      if (out.targets(q, a).empty()) out.add_transition_index(q, a, sink);
  return out;
}

OneWayFA reachable_part(const OneWayFA& m) {
  const std::size_t k = m.alphabet().size();
  std::vector<State> order;
  std::vector<State> rename(m.num_states(), -1);
  rename[m.initial()] = 0;
  order.push_back(m.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      for (State t : m.targets(order[i], a)) {
        if (rename[t] < 0) {
          rename[t] = static_cast<State>(order.size());
          order.push_back(t);
        }
      }
    }
  }
  OneWayFA out(static_cast<int>(order.size()), m.alphabet(), m.deterministic());
  out.set_initial(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State q = order[i];
    if (m.is_final(q)) out.set_final(static_cast<State>(i));
    for (std::size_t a = 0; a < k; ++a)
      for (State t : m.targets(q, a)) out.add_transition_index(static_cast<State>(i), a, rename[t]);
  }
  return out;
}

Partition moore_partition(const OneWayFA& dfa) {
  require_complete_dfa(dfa, "moore_partition");
  const int n = dfa.num_states();
  const std::size_t k = dfa.alphabet().size();
  Partition p;
  p.block.assign(n, 0);
  bool has_final = false, has_nonfinal = false;
  for (State q = 0; q < n; ++q) {
    p.block[q] = dfa.is_final(q) ? 1 : 0;
    (dfa.is_final(q) ? has_final : has_nonfinal) = true;
  }
  if (!(has_final && has_nonfinal))
    std::fill(p.block.begin(), p.block.end(), 0);
  p.count = (has_final && has_nonfinal) ? 2 : (n > 0 ? 1 : 0);

  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    std::vector<int> sig(k + 1);
    for (State q = 0; q < n; ++q) {
      sig[0] = p.block[q];
      for (std::size_t a = 0; a < k; ++a) sig[a + 1] = p.block[dfa.targets(q, a)[0]];
      auto [it, fresh] = ids.emplace(sig, static_cast<int>(ids.size()));
      next[q] = it->second;
    }
    const int count = static_cast<int>(ids.size());
    p.block = std::move(next);
    if (count == p.count) break;
    p.count = count;
  }
  return p;
}

OneWayFA minimize(const OneWayFA& dfa) {
  if (!dfa.deterministic()) {
    for (State q = 0; q < dfa.num_states(); ++q)
      for (std::size_t a = 0; a < dfa.alphabet().size(); ++a)
        if (dfa.targets(q, a).size() > 1)
          throw std::invalid_argument("minimize: machine is not deterministic");
  }
  const OneWayFA full = reachable_part(complete(dfa));
  const Partition p = moore_partition(full);
  const std::size_t k = full.alphabet().size();
  OneWayFA quotient(p.count, full.alphabet(), true);
  quotient.set_initial(p.block[full.initial()]);
  std::vector<char> done(p.count, 0);
  for (State q = 0; q < full.num_states(); ++q) {
    const int b = p.block[q];
    if (done[b]) continue;
    done[b] = 1;
    if (full.is_final(q)) quotient.set_final(b);
    for (std::size_t a = 0; a < k; ++a) quotient.add_transition_index(b, a, p.block[full.targets(q, a)[0]]);
  }
  return reachable_part(quotient);
}

OneWayFA reverse(const OneWayFA& m) {
  const int n = m.num_states();
  const std::size_t k = m.alphabet().size();
  const auto finals = m.finals();
  const bool fresh = finals.size() != 1;
  OneWayFA out(n + (fresh ? 1 : 0), m.alphabet(), false);
  out.set_final(m.initial());
  for (State p = 0; p < n; ++p)
    for (std::size_t a = 0; a < k; ++a)
      for (State q : m.targets(p, a)) out.add_transition_index(q, a, p);
  if (!fresh) {
    out.set_initial(finals[0]);
    return out;
  }
  const State init = n;
  out.set_initial(init);
  if (m.is_final(m.initial())) out.set_final(init);
  for (State f : finals)
    for (std::size_t a = 0; a < k; ++a)
      for (State p = 0; p < n; ++p)
        for (State q : m.targets(p, a))
          if (q == f) out.add_transition_index(init, a, p);
  return out;
}

namespace {

// Breadth-first search over pairs of states of two complete DFAs for the
// first pair whose finality differs; returns the word leading there.
std::optional<std::string> shortest_difference(const OneWayFA& a, const OneWayFA& b) {
  const int nb = b.num_states();
  const std::size_t k = a.alphabet().size();
  const std::size_t total = static_cast<std::size_t>(a.num_states()) * nb;
  std::vector<std::int64_t> parent(total, -2);
  std::vector<char> via(total, 0);
  std::queue<std::size_t> queue;
  const std::size_t start = static_cast<std::size_t>(a.initial()) * nb + b.initial();
  parent[start] = -1;
  queue.push(start);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop();
    const State p = static_cast<State>(cur / nb), q = static_cast<State>(cur % nb);
    if (a.is_final(p) != b.is_final(q)) {
      std::string word;
      for (std::size_t at = cur; parent[at] >= 0; at = static_cast<std::size_t>(parent[at]))
        word.push_back(via[at]);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t nxt =
          static_cast<std::size_t>(a.targets(p, x)[0]) * nb + b.targets(q, x)[0];
      if (parent[nxt] != -2) continue;
      parent[nxt] = static_cast<std::int64_t>(cur);
      via[nxt] = a.alphabet().symbol(x);
      queue.push(nxt);
    }
  }
  return std::nullopt;
}

}  // namespace

EquivalenceResult equivalent(const OneWayFA& a, const OneWayFA& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("equivalent: alphabets differ");
  const OneWayFA ma = minimize(determinize(a));
  const OneWayFA mb = minimize(determinize(b));
  if (isomorphic(ma, mb)) return {true, std::nullopt};
  auto word = shortest_difference(ma, mb);
  if (!word) throw std::logic_error("equivalent: minimal DFAs differ but no distinguishing word");
  return {false, std::move(word)};
}

bool isomorphic(const OneWayFA& a, const OneWayFA& b) {
  require_complete_dfa(a, "isomorphic");
  require_complete_dfa(b, "isomorphic");
  if (a.alphabet() != b.alphabet()) return false;
  const OneWayFA ca = reachable_part(a);
  const OneWayFA cb = reachable_part(b);
  if (ca.num_states() != cb.num_states()) return false;
  const std::size_t k = ca.alphabet().size();
  for (State q = 0; q < ca.num_states(); ++q) {
    if (ca.is_final(q) != cb.is_final(q)) return false;
    for (std::size_t x = 0; x < k; ++x)
      if (ca.targets(q, x)[0] != cb.targets(q, x)[0]) return false;
  }
  return true;
}

OneWayFA universal_dfa(const Alphabet& al) {
  OneWayFA m(1, al, true);
  m.set_final(0);
  for (std::size_t a = 0; a < al.size(); ++a) m.add_transition_index(0, a, 0);
  return m;
}

OneWayFA empty_dfa(const Alphabet& al) {
  OneWayFA m(1, al, true);
  for (std::size_t a = 0; a < al.size(); ++a) m.add_transition_index(0, a, 0);
  return m;
}

OneWayFA length_mod_dfa(const Alphabet& al, int modulus, int residue) {
  if (modulus < 1 || residue < 0 || residue >= modulus)
    throw std::invalid_argument("length_mod_dfa: need modulus >= 1 and 0 <= residue < modulus");
  OneWayFA m(modulus, al, true);
  m.set_final(residue);
  for (State q = 0; q < modulus; ++q)
    for (std::size_t a = 0; a < al.size(); ++a) m.add_transition_index(q, a, (q + 1) % modulus);
  return m;
}

}  // namespace fla
