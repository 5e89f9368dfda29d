#include "fla/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fla/bounds.hpp"
#include "fla/classical.hpp"
#include "fla/families.hpp"
#include "fla/json_reader.hpp"
#include "fla/numtheory.hpp"
#include "fla/predicates.hpp"
#include "fla/simulator.hpp"
#include "fla/tables.hpp"

namespace fla {

ExperimentConfig parse_experiment_config(std::string_view text) {
  JsonDocument doc(text);
  const auto& root = doc.root();
  if (!root.contains("format-version")) throw ParseError("format-version", "missing format-version");
  const int version = doc.get_int(root, "format-version", "format-version");
  if (version != kFormatVersion)
    throw ParseError("format-version", "unsupported version " + std::to_string(version));
  const std::string kind = doc.get_string(root, "kind", "kind");
  if (kind != "experiment") throw ParseError("kind", "expected \"experiment\", got \"" + kind + "\"");

  ExperimentConfig cfg;
  if (root.contains("l-test")) {
    cfg.l_test = doc.as_int(root["l-test"], "l-test");
    if (cfg.l_test < 0 || cfg.l_test > 24) throw ParseError("l-test", "must be in 0..24");
  }
  if (root.contains("budget")) {
    const int budget = doc.as_int(root["budget"], "budget");
    if (budget < 1) throw ParseError("budget", "must be positive");
    cfg.budget = static_cast<std::uint64_t>(budget);
  }
  const auto& list = doc.get_array(root, "instances", "instances");
  static const std::set<std::string> families{"MF", "L", "J", "H", "E"};
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "instances[" + std::to_string(i) + "]";
    ExperimentInstance inst;
    inst.family = doc.get_string(list[i], "family", where + ".family");
    if (!families.contains(inst.family))
      throw ParseError(where + ".family", "unknown family \"" + inst.family + "\"");
    inst.n = doc.get_int(list[i], "n", where + ".n");
    if (inst.n < 1) throw ParseError(where + ".n", "must be positive");
    if (list[i].contains("ell")) {
      const int ell = doc.as_int(list[i]["ell"], where + ".ell");
      if (ell < 1) throw ParseError(where + ".ell", "must be positive");
      inst.ell = static_cast<std::uint64_t>(ell);
    } else if (inst.family == "L" || inst.family == "J") {
      throw ParseError(where + ".ell", "missing field");
    } else if (inst.family == "H") {
      inst.ell = landau(static_cast<unsigned>(inst.n)).value;
    }
    cfg.instances.push_back(inst);
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_experiment_config(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

bool ExperimentReport::all_pass() const {
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.outcome == Outcome::fail; });
}

namespace {

// First word of length <= max_len on which the machine and the oracle
// disagree.
template <typename M>
std::optional<std::string> disagreement(const M& m, const Oracle& oracle, int max_len) {
  std::string w;
  for (int len = 0; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      w.assign(static_cast<std::size_t>(len), 'a');
      for (int i = 0; i < len; ++i)
        if ((bits >> (len - 1 - i)) & 1) w[i] = 'b';
      if (accepts(m, w) != oracle(w)) return w;
    }
  }
  return std::nullopt;
}

class RowSink {
 public:
  RowSink(ExperimentReport& report, const ExperimentInstance& inst, int l_test)
      : report_(report), inst_(inst), l_test_(l_test) {}

  ReportRow& add(std::string model, std::string formula) {
    ReportRow row;
    row.family = inst_.family;
    row.n = inst_.n;
    row.ell = inst_.ell;
    row.model = std::move(model);
    row.formula = std::move(formula);
    report_.rows.push_back(std::move(row));
    return report_.rows.back();
  }

  // Marks the row passed iff `ok` and the machine agrees with the oracle.
  template <typename M>
  void settle(ReportRow& row, bool ok, const M& m, const Oracle& oracle) {
    if (!ok) {
      row.outcome = Outcome::fail;
      row.note = "count assertion failed";
      return;
    }
    if (auto w = disagreement(m, oracle, l_test_)) {
      row.outcome = Outcome::fail;
      row.note = "disagrees with the predicate on \"" + *w + "\"";
      return;
    }
    row.outcome = Outcome::pass;
  }

  void settle(ReportRow& row, bool ok, const std::string& why = "count assertion failed") {
    row.outcome = ok ? Outcome::pass : Outcome::fail;
    if (!ok) row.note = why;
  }

 private:
  ExperimentReport& report_;
  const ExperimentInstance& inst_;
  int l_test_;
};

std::uint64_t u(int x) { return static_cast<std::uint64_t>(x); }

void skip(ExperimentReport& report, const ExperimentInstance& inst, const std::string& why) {
  ReportRow row;
  row.family = inst.family;
  row.n = inst.n;
  row.ell = inst.ell;
  row.model = "-";
  row.formula = "-";
  row.outcome = Outcome::skip;
  row.note = why;
  report.rows.push_back(std::move(row));
}

void conversion_rows(RowSink& sink, const ForgettingLA& m, const OneWayFA& reference,
                     const Oracle& oracle) {
  const int n = m.num_states();
  const OneWayFA nfa = fla_to_nfa(m);
  const OneWayFA reference_min = minimize(determinize(reference));
  {
    auto& row = sink.add("fla->nfa", "s(5s^2+F(s))+1");
    row.built = u(nfa.num_states());
    row.minimized = u(minimize(determinize(nfa)).num_states());
    row.formula_value = nfa_conversion_bound(n);
    const bool same = equivalent(nfa, reference).equivalent;
    sink.settle(row, *row.built <= *row.formula_value && same, nfa, oracle);
    if (!same) row.note = "not equivalent to the reference automaton";
  }
  if (m.deterministic()) {
    const OneWayFA dfa = dfla_to_dfa(m);
    auto& row = sink.add("dfla->dfa", "s(s+F(s))+2");
    row.built = u(dfa.num_states());
    row.minimized = u(minimize(dfa).num_states());
    row.formula_value = dfla_conversion_bound(n);
    sink.settle(row, *row.built <= *row.formula_value && isomorphic(minimize(dfa), reference_min), dfa,
                oracle);
  } else {
    const OneWayFA dfa = fla_to_dfa(m);
    auto& row = sink.add("fla->dfa", "(2^s-1)(5s^2+F(s))+2");
    row.built = u(dfa.num_states());
    row.minimized = u(minimize(dfa).num_states());
    row.formula_value = dfa_conversion_bound(n);
    sink.settle(row, *row.built <= *row.formula_value && isomorphic(minimize(dfa), reference_min), dfa,
                oracle);
  }
}

void run_mf(ExperimentReport& report, const ExperimentInstance& inst, const ExperimentConfig& cfg) {
  const int n = inst.n;
  if (n < 2) return skip(report, inst, "needs n >= 2");
  if (n >= 30 || (std::uint64_t{1} << n) > cfg.budget) return skip(report, inst, "2^n exceeds the budget");
  RowSink sink(report, inst, cfg.l_test);
  const OneWayFA mf = build_mf(n);
  const Oracle lang = oracle_L(n, 1);
  {
    auto& row = sink.add("nfa", "2^n");
    row.built = u(mf.num_states());
    row.minimized = u(minimize(determinize(mf)).num_states());
    row.formula_value = std::uint64_t{1} << n;
    sink.settle(row, *row.minimized == *row.formula_value, mf, lang);
  }
  {
    const OneWayFA rev = mf_reversal_dfa(n);
    auto& row = sink.add("reverse-dfa", "2n");
    row.built = u(reverse(mf).num_states());
    row.minimized = u(rev.num_states());
    row.formula_value = u(2 * n);
    sink.settle(row, *row.minimized <= *row.formula_value);
  }
}

void run_L(ExperimentReport& report, const ExperimentInstance& inst, const ExperimentConfig& cfg) {
  const int n = inst.n;
  const std::uint64_t ell = inst.ell;
  if (n < 2) return skip(report, inst, "needs n >= 2");
  if (n > 20 || Lnl_dfa_states(n, ell) > cfg.budget)
    return skip(report, inst, "(2^n-1)ell+1 exceeds the budget");
  RowSink sink(report, inst, cfg.l_test);
  const Oracle lang = oracle_L(n, ell);
  const bool coprime = gcd(u(n), ell) == 1;
  const OneWayFA nfa = build_Lnl_nfa(n, ell);
  {
    const OneWayFA dfa = build_Lnl_dfa(n, ell);
    auto& row = sink.add("dfa", "(2^n-1)ell+1");
    row.built = u(dfa.num_states());
    row.minimized = u(minimize(dfa).num_states());
    row.formula_value = Lnl_dfa_states(n, ell);
    const bool exact = *row.built == *row.formula_value &&
                       (coprime ? *row.minimized == *row.formula_value : *row.minimized <= *row.formula_value);
    sink.settle(row, exact && equivalent(dfa, nfa).equivalent, dfa, lang);
  }
  {
    auto& row = sink.add("nfa", "n*ell");
    row.built = u(nfa.num_states());
    row.formula_value = Lnl_nfa_states(n, ell);
    sink.settle(row, *row.built == *row.formula_value, nfa, lang);
  }
  if (coprime) {
    const auto check = check_fooling(build_thm5_set(n, ell));
    auto& row = sink.add("nfa-fooling", "n*ell");
    row.built = u(check.bound);
    row.formula_value = Lnl_nfa_states(n, ell);
    sink.settle(row, check.valid && check.bound == *row.formula_value, check.violation.value_or(""));
  }
  {
    const TwoWayFA m = build_Lnl_2nfa(n, ell);
    auto& row = sink.add("2nfa", "n+sum+o");
    row.built = u(m.num_states());
    row.formula_value = Lnl_2nfa_states(n, ell);
    sink.settle(row, *row.built == *row.formula_value && validate(m).empty(), m, lang);
  }
  {
    const TwoWayFA m = build_Lnl_2dfa(n, ell);
    auto& row = sink.add("2dfa", "2n+sum+o");
    row.built = u(m.num_states());
    const auto r = factorize(ell).factors.size();
    row.formula_value = u(2 * n) + factorize(ell).weight() + (r == 0 ? 2 : r % 2);
    sink.settle(row, *row.built <= *row.formula_value && validate(m).empty(), m, lang);
  }
  const ForgettingLA fla = build_Lnl_fla(n, ell);
  {
    auto& row = sink.add("fla", "max(sum+o;n+r/2+o)");
    row.built = u(fla.num_states());
    row.formula_value = sweep_fla_states(n, ell);
    sink.settle(row, *row.built == *row.formula_value && validate(fla).empty(), fla, lang);
  }
  if (ell == landau(static_cast<unsigned>(n)).value) {
    auto& row = sink.add("fla", "n+1");
    row.built = u(fla.num_states());
    row.formula_value = u(n + 1);
    sink.settle(row, *row.built <= *row.formula_value);
  }
  conversion_rows(sink, fla, nfa, lang);
}

void run_J(ExperimentReport& report, const ExperimentInstance& inst, const ExperimentConfig& cfg) {
  const int n = inst.n;
  const std::uint64_t ell = inst.ell;
  if (u(n) * ell > cfg.budget) return skip(report, inst, "n*ell exceeds the budget");
  RowSink sink(report, inst, cfg.l_test);
  const Oracle lang = oracle_J(n, ell);
  const OneWayFA dfa = build_J_dfa(n, ell);
  {
    auto& row = sink.add("dfa", "n*ell");
    row.built = u(dfa.num_states());
    row.minimized = u(minimize(dfa).num_states());
    row.formula_value = u(n) * ell;
    sink.settle(row, *row.built == *row.formula_value && *row.minimized == *row.formula_value, dfa, lang);
  }
  {
    const auto check = check_fooling(build_thm8_set(n, ell, default_H(n, ell)));
    auto& row = sink.add("nfa-fooling", "n*ell");
    row.built = u(check.bound);
    row.formula_value = u(n) * ell;
    sink.settle(row, check.valid && check.bound == *row.formula_value, check.violation.value_or(""));
  }
  {
    const TwoWayFA m = build_J_2dfa(n, ell);
    auto& row = sink.add("2dfa", "n+sum+o");
    row.built = u(m.num_states());
    row.formula_value = J_2dfa_states(n, ell);
    sink.settle(row, *row.built == *row.formula_value && validate(m).empty(), m, lang);
  }
  const ForgettingLA fla = build_J_dfla(n, ell);
  {
    auto& row = sink.add("dfla", "max(sum+o;n+r/2+o)");
    row.built = u(fla.num_states());
    row.formula_value = sweep_fla_states(n, ell);
    sink.settle(row, *row.built == *row.formula_value && validate(fla).empty(), fla, lang);
  }
  if (ell == landau(static_cast<unsigned>(n)).value) {
    auto& row = sink.add("dfla", "n+1");
    row.built = u(fla.num_states());
    row.formula_value = u(n + 1);
    sink.settle(row, *row.built <= *row.formula_value);
  }
  conversion_rows(sink, fla, dfa, lang);
}

void run_H(ExperimentReport& report, const ExperimentInstance& inst, const ExperimentConfig& cfg) {
  const int n = inst.n;
  const std::uint64_t ell = inst.ell;
  if (n < 2 || ell < 2) return skip(report, inst, "needs n >= 2 and ell >= 2");
  if (u(n) * ell > cfg.budget) return skip(report, inst, "n*ell exceeds the budget");
  RowSink sink(report, inst, cfg.l_test);
  const Oracle lang = oracle_H(n, ell);
  const ForgettingLA m = build_H_dfla(n, ell);
  {
    auto& row = sink.add("dfla", std::to_string(kHStateFactor) + "n");
    row.built = u(m.num_states());
    row.formula_value = u(kHStateFactor * n);
    sink.settle(row, *row.built <= *row.formula_value && validate(m).empty(), m, lang);
  }
  {
    const OneWayFA dfa = dfla_to_dfa(m);
    auto& row = sink.add("dfla->dfa", "s(s+F(s))+2");
    row.built = u(dfa.num_states());
    row.minimized = u(minimize(dfa).num_states());
    row.formula_value = dfla_conversion_bound(m.num_states());
    sink.settle(row, *row.built <= *row.formula_value, dfa, lang);
  }
  {
    const auto check = check_fooling(build_H_footnote_set(n, ell, default_H(n, ell)));
    auto& row = sink.add("nfa-fooling", "n*ell");
    row.built = u(check.bound);
    row.formula_value = u(n) * ell;
    sink.settle(row, check.valid && check.bound == *row.formula_value, check.violation.value_or(""));
  }
}

void run_E(ExperimentReport& report, const ExperimentInstance& inst, const ExperimentConfig& cfg) {
  const int n = inst.n;
  if (n > 16 || (std::uint64_t{1} << n) > cfg.budget) return skip(report, inst, "2^n exceeds the budget");
  RowSink sink(report, inst, cfg.l_test);
  const Oracle lang = oracle_E(n);
  {
    const TwoWayFA m = build_en_2dfa(n);
    auto& row = sink.add("2dfa", std::to_string(kEnStateFactor) + "n-1");
    row.built = u(m.num_states());
    row.formula_value = en_2dfa_states(n);
    sink.settle(row, *row.built == *row.formula_value && validate(m).empty(), m, lang);
  }
  {
    const auto check = check_fooling(build_thm13_set(n));
    auto& row = sink.add("fla-fooling", "2^n");
    row.built = u(check.bound);
    row.formula_value = std::uint64_t{1} << n;
    sink.settle(row, check.valid && check.bound == *row.formula_value, check.violation.value_or(""));
  }
}

}  // namespace

ExperimentReport experiment_bounds(const ExperimentConfig& config) {
  ExperimentReport report;
  for (const auto& inst : config.instances) {
    if (inst.family == "MF")
      run_mf(report, inst, config);
    else if (inst.family == "L")
      run_L(report, inst, config);
    else if (inst.family == "J")
      run_J(report, inst, config);
    else if (inst.family == "H")
      run_H(report, inst, config);
    else if (inst.family == "E")
      run_E(report, inst, config);
    else
      throw std::invalid_argument("unknown family \"" + inst.family + "\"");
  }
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format \"" + std::string(name) + "\" (expected text or csv)");
}

namespace {

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "?";
}

std::vector<std::string> cells(const ReportRow& r) {
  return {r.family, std::to_string(r.n), std::to_string(r.ell), r.model, opt(r.built), opt(r.minimized),
          r.formula, opt(r.formula_value), outcome_name(r.outcome)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

const std::vector<std::string> kHeader{"family", "n", "ell", "model", "built-states", "minimized-states",
                                       "formula", "formula-value", "pass"};

}  // namespace

std::string report_emit(const ExperimentReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << csv_field(v[i]);
      out << '\n';
    };
    line(kHeader);
    for (const auto& r : report.rows) line(cells(r));
    return out.str();
  }
  std::vector<std::size_t> width(kHeader.size());
  for (std::size_t i = 0; i < kHeader.size(); ++i) width[i] = kHeader[i].size();
  for (const auto& r : report.rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
  }
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << v[i];
      if (i + 1 < v.size()) out << std::string(width[i] - v[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(kHeader);
  for (const auto& r : report.rows) {
    line(cells(r));
    if (!r.note.empty()) out << "    note: " << r.note << '\n';
  }
  return out.str();
}

}  // namespace fla
