#include "fla/bounds.hpp"

#include <stdexcept>

#include "fla/numtheory.hpp"

namespace fla {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string show(const std::string& w) { return w.empty() ? "eps" : "\"" + w + "\""; }

std::string a(std::uint64_t k) { return std::string(k, 'a'); }
std::string b(std::uint64_t k) { return std::string(k, 'b'); }

}  // namespace

const char* to_string(FoolingKind kind) {
  switch (kind) {
    case FoolingKind::standard: return "standard";
    case FoolingKind::extended: return "extended";
    case FoolingKind::fla: return "fla";
  }
  return "?";
}

FoolingCheck check_fooling(const FoolingSet& fs) {
  FoolingCheck out;
  if (!fs.oracle) {
    out.violation = "no membership oracle";
    return out;
  }
  const auto& P = fs.pairs;
  const std::size_t k = P.size();
  if (fs.kind == FoolingKind::fla) {
    for (std::size_t i = 1; i < k; ++i) {
      if (P[i].first.size() != P[0].first.size()) {
        out.violation = "left parts " + show(P[0].first) + " and " + show(P[i].first) +
                        " differ in length";
        return out;
      }
    }
  }
  std::vector<char> own(k);
  for (std::size_t i = 0; i < k; ++i) {
    own[i] = fs.oracle(P[i].first + P[i].second);
    if (!own[i]) {
      out.violation = "pair " + std::to_string(i) + ": " + show(P[i].first + P[i].second) + " is not in L";
      return out;
    }
  }
  // cross[i][j] = x_i y_j in L
  std::vector<std::vector<char>> cross(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) cross[i][j] = fs.oracle(P[i].first + P[j].second);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool bad = fs.kind == FoolingKind::standard ? cross[i][j] : (cross[i][j] && cross[j][i]);
      if (bad) {
        out.violation = "pairs " + std::to_string(i) + " and " + std::to_string(j) + ": " +
                        show(P[i].first + P[j].second) +
                        (fs.kind == FoolingKind::standard ? " is in L"
                                                          : " and " + show(P[j].first + P[i].second) +
                                                                " are both in L");
        return out;
      }
    }
  }
  out.valid = true;
  out.bound = k;
  return out;
}

FoolingSet build_thm5_set(int n, std::uint64_t ell) {
  require(n >= 2 && ell >= 1, "need n >= 2 and ell >= 1");
  require(gcd(static_cast<std::uint64_t>(n), ell) == 1, "n and ell must be coprime");
  FoolingSet fs;
  fs.kind = FoolingKind::standard;
  fs.oracle = oracle_L(n, ell);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * ell;
  for (std::uint64_t i = 0; i < total; ++i) fs.pairs.emplace_back(a(i), a(total - i));
  return fs;
}

namespace {

std::vector<std::pair<std::string, std::string>> thm8_pairs(int n, std::uint64_t ell, std::uint64_t H,
                                                            std::uint64_t tail) {
  require(n >= 1 && ell >= 1, "need n >= 1 and ell >= 1");
  require(H > ell + static_cast<std::uint64_t>(n) && H % ell == 0, "H must be a multiple of ell above ell + n");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::uint64_t i = 1; i <= ell; ++i)
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(n); ++j)
      out.emplace_back(a(j) + b(H + i - j), b(H - i - n + j) + a(n - j) + b(tail));
  return out;
}

}  // namespace

FoolingSet build_thm8_set(int n, std::uint64_t ell, std::uint64_t H) {
  FoolingSet fs;
  fs.pairs = thm8_pairs(n, ell, H, 0);
  fs.kind = FoolingKind::extended;
  fs.oracle = oracle_J(n, ell);
  return fs;
}

FoolingSet build_thm13_set(int n) {
  require(n >= 1 && n <= 20, "n must be in 1..20");
  FoolingSet fs;
  fs.kind = FoolingKind::fla;
  fs.oracle = oracle_E(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::string x;
    for (int i = n - 1; i >= 0; --i) x.push_back((bits >> i) & 1 ? 'b' : 'a');
    fs.pairs.emplace_back(x, x);
  }
  return fs;
}

FoolingSet build_H_footnote_set(int n, std::uint64_t ell, std::uint64_t H) {
  FoolingSet fs;
  fs.pairs = thm8_pairs(n, ell, H, static_cast<std::uint64_t>(n));
  fs.kind = FoolingKind::extended;
  fs.oracle = oracle_H(n, ell);
  return fs;
}

std::size_t distinguishability_count(const std::vector<std::string>& strings, const Oracle& oracle,
                                     int depth, const std::vector<std::string>& hints,
                                     const std::string& alphabet) {
  auto separated_by = [&](const std::string& u, const std::string& v, const std::string& z) {
    return oracle(u + z) != oracle(v + z);
  };
  auto distinguishable = [&](const std::string& u, const std::string& v) {
    for (const auto& z : hints)
      if (separated_by(u, v, z)) return true;
    std::vector<std::string> layer{""};
    for (int len = 0; len <= depth; ++len) {
      std::vector<std::string> next;
      for (const auto& z : layer) {
        if (separated_by(u, v, z)) return true;
        if (len < depth)
          for (char c : alphabet) next.push_back(z + c);
      }
      layer = std::move(next);
    }
    return false;
  };
  std::vector<const std::string*> chosen;
  for (const auto& s : strings) {
    bool fresh = true;
    for (const auto* c : chosen) {
      if (!distinguishable(*c, s)) {
        fresh = false;
        break;
      }
    }
    if (fresh) chosen.push_back(&s);
  }
  return chosen.size();
}

std::vector<std::string> Lnl_separators(int n, std::uint64_t ell) {
  std::vector<std::string> out;
  const auto un = static_cast<std::uint64_t>(n);
  for (std::uint64_t s = 0; s < un; ++s)
    for (std::uint64_t j = 0; j < ell; ++j) out.push_back(a(crt_witness((un - s) % un, (ell - j) % ell, un, ell)));
  return out;
}

}  // namespace fla
