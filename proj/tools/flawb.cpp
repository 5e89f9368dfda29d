// flawb: command-line front end for the forgetting-automata workbench.
//
// Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fla/bounds.hpp"
#include "fla/classical.hpp"
#include "fla/experiment.hpp"
#include "fla/families.hpp"
#include "fla/machine_io.hpp"
#include "fla/numtheory.hpp"
#include "fla/simulator.hpp"
#include "fla/tables.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

fla::OneWayFA load_oneway(const std::string& path) {
  auto m = fla::load_machine(path);
  if (auto* one = std::get_if<fla::OneWayFA>(&m)) return *one;
  throw UsageError(path + ": expected a one-way automaton (nfa or dfa), got " + fla::kind_of(m));
}

fla::ForgettingLA load_forgetting(const std::string& path) {
  auto m = fla::load_machine(path);
  if (auto* f = std::get_if<fla::ForgettingLA>(&m)) return *f;
  throw UsageError(path + ": expected a forgetting automaton (fla or dfla), got " + fla::kind_of(m));
}

fla::Machine build(const std::string& family, int n, std::optional<std::uint64_t> ell, const std::string& model) {
  auto need_ell = [&]() {
    if (!ell) throw UsageError("family " + family + " needs --ell");
    return *ell;
  };
  auto bad_model = [&]() -> fla::Machine {
    throw UsageError("family " + family + " has no model " + model);
  };
  if (family == "mf") {
    if (model == "nfa") return fla::build_mf(n);
    if (model == "dfa") return fla::minimize(fla::determinize(fla::build_mf(n)));
    return bad_model();
  }
  if (family == "L") {
    const auto l = need_ell();
    if (model == "dfa") return fla::build_Lnl_dfa(n, l);
    if (model == "nfa") return fla::build_Lnl_nfa(n, l);
    if (model == "2nfa") return fla::build_Lnl_2nfa(n, l);
    if (model == "2dfa") return fla::build_Lnl_2dfa(n, l);
    if (model == "fla") return fla::build_Lnl_fla(n, l);
    return bad_model();
  }
  if (family == "J") {
    const auto l = need_ell();
    if (model == "dfa") return fla::build_J_dfa(n, l);
    if (model == "2dfa") return fla::build_J_2dfa(n, l);
    if (model == "dfla") return fla::build_J_dfla(n, l);
    return bad_model();
  }
  if (family == "H") {
    if (model != "dfla") return bad_model();
    return ell ? fla::build_H_dfla(n, *ell) : fla::build_H_dfla(n);
  }
  if (family == "E") {
    if (model != "2dfa") return bad_model();
    return fla::build_en_2dfa(n);
  }
  throw UsageError("unknown family " + family);
}

std::string decomposition(const fla::PrimePowerDecomposition& d) {
  if (d.factors.empty()) return "1";
  std::string out;
  for (const auto& f : d.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for forgetting 1-limited automata and their witness languages"};
  app.require_subcommand(1);

  // run
  std::string run_path, run_word;
  auto* run = app.add_subcommand("run", "decide membership of a word");
  run->add_option("machine", run_path, "machine file")->required();
  run->add_option("word", run_word, "input word (omit for the empty word)");

  // build
  std::string family, model, output;
  int n = 0;
  std::optional<std::uint64_t> ell;
  auto* build_cmd = app.add_subcommand("build", "build a witness machine");
  build_cmd->add_option("family", family, "mf, L, J, H or E")->required()->check(CLI::IsMember({"mf", "L", "J", "H", "E"}));
  build_cmd->add_option("--n", n, "size parameter")->required()->check(CLI::PositiveNumber);
  build_cmd->add_option("--ell", ell, "length modulus")->check(CLI::PositiveNumber);
  build_cmd->add_option("--model", model, "nfa, dfa, 2nfa, 2dfa, fla or dfla")
      ->required()
      ->check(CLI::IsMember({"nfa", "dfa", "2nfa", "2dfa", "fla", "dfla"}));
  build_cmd->add_option("-o,--output", output, "output file (default: stdout)");

  // convert
  std::string convert_path, convert_to;
  auto* convert = app.add_subcommand("convert", "convert a forgetting automaton to a one-way automaton");
  convert->add_option("machine", convert_path, "machine file")->required();
  convert->add_option("--to", convert_to, "nfa or dfa")->required()->check(CLI::IsMember({"nfa", "dfa"}));
  convert->add_option("-o,--output", output, "output file (default: none)");

  // determinize / minimize
  std::string one_path;
  auto* det = app.add_subcommand("determinize", "subset construction");
  det->add_option("machine", one_path, "machine file")->required();
  det->add_option("-o,--output", output, "output file (default: none)");
  auto* min = app.add_subcommand("minimize", "minimal complete DFA");
  min->add_option("machine", one_path, "machine file")->required();
  min->add_option("-o,--output", output, "output file (default: none)");

  // equiv
  std::string left_path, right_path;
  auto* equiv = app.add_subcommand("equiv", "language equivalence of two one-way automata");
  equiv->add_option("first", left_path, "machine file")->required();
  equiv->add_option("second", right_path, "machine file")->required();

  // landau
  unsigned landau_n = 0;
  auto* landau = app.add_subcommand("landau", "Landau's function");
  landau->add_option("n", landau_n, "argument")->required()->check(CLI::PositiveNumber);

  // certify
  std::string which;
  std::optional<std::uint64_t> H;
  auto* certify = app.add_subcommand("certify", "check a fooling-set certificate");
  certify->add_option("set", which, "thm5, thm8, thm13 or hfootnote")
      ->required()
      ->check(CLI::IsMember({"thm5", "thm8", "thm13", "hfootnote"}));
  certify->add_option("--n", n, "size parameter")->required()->check(CLI::PositiveNumber);
  certify->add_option("--ell", ell, "length modulus")->check(CLI::PositiveNumber);
  certify->add_option("--H", H, "padding length, a multiple of ell above ell + n")->check(CLI::PositiveNumber);

  // experiment
  std::string config_path, format = "text";
  auto* experiment = app.add_subcommand("experiment", "run a batch of state-count checks");
  experiment->add_option("config", config_path, "experiment config file")->required();
  experiment->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  experiment->add_option("-o,--output", output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      const bool yes = fla::accepts(fla::load_machine(run_path), run_word);
      std::cout << (yes ? "accept" : "reject") << '\n';
      return kOk;
    }
    if (*build_cmd) {
      const auto m = build(family, n, ell, model);
      write_output(fla::serialize(m), output);
      if (!output.empty() && output != "-")
        std::cerr << fla::kind_of(m) << " with " << fla::state_count(m) << " states written to " << output << '\n';
      return kOk;
    }
    if (*convert) {
      const auto m = load_forgetting(convert_path);
      const auto seq = fla::detect_period(m);
      const fla::OneWayFA out = convert_to == "nfa" ? fla::fla_to_nfa(m)
                                : m.deterministic() ? fla::dfla_to_dfa(m)
                                                    : fla::fla_to_dfa(m);
      std::cout << "rho " << seq.rho << "\nlambda " << seq.lambda << "\nsource-states " << m.num_states()
                << "\nstates " << out.num_states() << '\n';
      if (!output.empty()) write_output(fla::serialize(out), output);
      return kOk;
    }
    if (*det || *min) {
      const auto m = load_oneway(one_path);
      const fla::OneWayFA out = *det ? fla::determinize(m) : fla::minimize(fla::determinize(m));
      std::cout << "states " << out.num_states() << '\n';
      if (!output.empty()) write_output(fla::serialize(out), output);
      return kOk;
    }
    if (*equiv) {
      const auto r = fla::equivalent(load_oneway(left_path), load_oneway(right_path));
      if (r.equivalent) {
        std::cout << "equivalent\n";
        return kOk;
      }
      std::cout << "not equivalent; counterexample \"" << *r.counterexample << "\"\n";
      return kFailure;
    }
    if (*landau) {
      const auto v = fla::landau(landau_n);
      std::cout << "F(" << landau_n << ") = " << v.value << " = " << decomposition(v.witness) << '\n';
      return kOk;
    }
    if (*certify) {
      fla::FoolingSet fs;
      auto need_ell = [&]() {
        if (!ell) throw UsageError(which + " needs --ell");
        return *ell;
      };
      if (which == "thm5") {
        fs = fla::build_thm5_set(n, need_ell());
      } else if (which == "thm8") {
        const auto l = need_ell();
        fs = fla::build_thm8_set(n, l, H.value_or(fla::default_H(n, l)));
      } else if (which == "thm13") {
        fs = fla::build_thm13_set(n);
      } else {
        const auto l = ell.value_or(fla::landau(static_cast<unsigned>(n)).value);
        fs = fla::build_H_footnote_set(n, l, H.value_or(fla::default_H(n, l)));
      }
      const auto check = fla::check_fooling(fs);
      if (!check.valid) {
        std::cout << "invalid " << fla::to_string(fs.kind) << " fooling set: " << *check.violation << '\n';
        return kFailure;
      }
      std::cout << "valid " << fla::to_string(fs.kind) << " fooling set of size " << check.bound
                << "; lower bound " << check.bound << " states\n";
      return kOk;
    }
    if (*experiment) {
      const auto cfg = fla::load_experiment_config(config_path);
      const auto report = fla::experiment_bounds(cfg);
      write_output(fla::report_emit(report, fla::parse_report_format(format)), output);
      return report.all_pass() ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "flawb: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "flawb: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "flawb: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
