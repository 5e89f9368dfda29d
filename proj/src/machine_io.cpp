#include "fla/machine_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fla/json_reader.hpp"
#include <json.hpp>

namespace fla {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string symbol_string(char c) { return std::string(1, c); }

std::string join_states(const std::vector<State>& states) {
  std::string out = "[";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(states[i]);
  }
  return out + "]";
}

std::string alphabet_line(const Alphabet& al) {
  ordered_json arr = ordered_json::array();
  for (char c : al.symbols()) arr.push_back(symbol_string(c));
  return arr.dump();
}

std::string state_list(int n) {
  std::vector<State> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return join_states(all);
}

void emit_header(std::ostringstream& os, const std::string& kind, const Alphabet& al, int n,
                 State initial, const std::vector<State>& finals) {
  os << "{\n";
  os << "  \"format-version\": " << kFormatVersion << ",\n";
  os << "  \"kind\": \"" << kind << "\",\n";
  os << "  \"alphabet\": " << alphabet_line(al) << ",\n";
  os << "  \"states\": " << state_list(n) << ",\n";
  os << "  \"initial\": " << initial << ",\n";
  os << "  \"finals\": " << join_states(finals) << ",\n";
}

void emit_transitions(std::ostringstream& os, const std::vector<ordered_json>& records) {
  if (records.empty()) {
    os << "  \"transitions\": []\n}\n";
    return;
  }
  os << "  \"transitions\": [\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    os << "    " << records[i].dump() << (i + 1 < records.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
}

std::string serialize_one_way(const OneWayFA& m) {
  std::ostringstream os;
  emit_header(os, kind_of(m), m.alphabet(), m.num_states(), m.initial(), m.finals());
  std::vector<ordered_json> records;
  for (State p = 0; p < m.num_states(); ++p)
    for (std::size_t a = 0; a < m.alphabet().size(); ++a)
      for (State q : m.targets(p, a))
        records.push_back({{"from", p}, {"read", symbol_string(m.alphabet().symbol(a))}, {"to", q}});
  emit_transitions(os, records);
  return os.str();
}

std::string serialize_two_way(const TwoWayFA& m) {
  std::ostringstream os;
  emit_header(os, kind_of(m), m.alphabet(), m.num_states(), m.initial(), m.finals());
  os << "  \"sweeping\": " << (m.sweeping() ? "true" : "false") << ",\n";
  std::vector<ordered_json> records;
  for (State p = 0; p < m.num_states(); ++p)
    for (std::size_t t = 0; t < m.alphabet().tape_size(); ++t)
      for (const auto& mv : m.moves(p, t))
        records.push_back({{"from", p},
                           {"read", symbol_string(m.alphabet().tape_symbol(t))},
                           {"to", mv.to},
                           {"move", mv.move}});
  emit_transitions(os, records);
  return os.str();
}

std::string serialize_fla(const ForgettingLA& m) {
  std::ostringstream os;
  emit_header(os, kind_of(m), m.alphabet(), m.num_states(), m.initial(), m.finals());
  std::vector<ordered_json> records;
  for (State p = 0; p < m.num_states(); ++p)
    for (std::size_t t = 0; t < m.alphabet().tape_size(); ++t)
      for (const auto& mv : m.moves(p, t))
        records.push_back({{"from", p},
                           {"read", symbol_string(m.alphabet().tape_symbol(t))},
                           {"to", mv.to},
                           {"write", symbol_string(mv.write)},
                           {"move", mv.move}});
  emit_transitions(os, records);
  return os.str();
}

// ------------------------------------------------------------------ parse

struct Header {
  std::string kind;
  Alphabet alphabet;
  int num_states = 0;
  State initial = 0;
  std::vector<State> finals;
};

Header read_header(const JsonDocument& doc) {
  Header h;
  const auto& root = doc.root();
  h.kind = doc.get_string(root, "kind", "kind");
  static const std::set<std::string> kinds = {"nfa", "dfa", "2nfa", "2dfa", "fla", "dfla"};
  if (!kinds.count(h.kind)) throw ParseError("kind", "unknown machine kind \"" + h.kind + "\"");

  const auto& alpha = doc.get_array(root, "alphabet", "alphabet");
  std::string symbols;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    symbols += doc.as_symbol(alpha[i], "alphabet[" + std::to_string(i) + "]");
  }
  h.alphabet = Alphabet(symbols);
  if (auto v = validate(h.alphabet); !v.empty()) throw ParseError("alphabet", v.front().message);

  const auto& states = doc.get_array(root, "states", "states");
  std::set<int> seen;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    int s = doc.as_int(states[i], where);
    if (s < 0) throw ParseError(where, "state index must be non-negative");
    if (!seen.insert(s).second)
      throw ParseError(where, "duplicate state index " + std::to_string(s));
  }
  h.num_states = static_cast<int>(seen.size());
  if (!seen.empty() && *seen.rbegin() != h.num_states - 1)
    throw ParseError("states", "state indices must be exactly 0.." + std::to_string(h.num_states - 1));

  auto check_state = [&](int s, const std::string& where) {
    if (s < 0 || s >= h.num_states)
      throw ParseError(where, "unknown state " + std::to_string(s));
    return s;
  };
  h.initial = check_state(doc.get_int(root, "initial", "initial"), "initial");
  const auto& finals = doc.get_array(root, "finals", "finals");
  for (std::size_t i = 0; i < finals.size(); ++i) {
    const std::string where = "finals[" + std::to_string(i) + "]";
    h.finals.push_back(check_state(doc.as_int(finals[i], where), where));
  }
  return h;
}

int read_move(const JsonDocument& doc, const nlohmann::json& rec, const std::string& where) {
  int move = doc.get_int(rec, "move", where + ".move");
  if (move != kLeft && move != kRight)
    throw ParseError(where + ".move", "direction " + std::to_string(move) +
                                          " is not -1 or +1 in transition " + rec.dump());
  return move;
}

}  // namespace

std::string serialize(const Machine& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OneWayFA>) return serialize_one_way(x);
        else if constexpr (std::is_same_v<T, TwoWayFA>) return serialize_two_way(x);
        else return serialize_fla(x);
      },
      m);
}

Machine parse_machine(std::string_view text) {
  JsonDocument doc(text);
  const auto& root = doc.root();
  if (!root.contains("format-version")) throw ParseError("format-version", "missing format-version");
  int version = doc.get_int(root, "format-version", "format-version");
  if (version != kFormatVersion)
    throw ParseError("format-version", "unsupported format-version " + std::to_string(version));

  Header h = read_header(doc);
  const auto& transitions = doc.get_array(root, "transitions", "transitions");
  auto state_field = [&](const nlohmann::json& rec, const char* key, const std::string& where) {
    int s = doc.get_int(rec, key, where + "." + key);
    if (s < 0 || s >= h.num_states)
      throw ParseError(where + "." + key, "unknown state " + std::to_string(s) +
                                              " in transition " + rec.dump());
    return s;
  };
  auto symbol_field = [&](const nlohmann::json& rec, const char* key, const std::string& where) {
    return doc.as_symbol(doc.get(rec, key, where + "." + key), where + "." + key);
  };

  const bool det = h.kind[0] == 'd' || h.kind == "2dfa";
  if (h.kind == "nfa" || h.kind == "dfa") {
    OneWayFA m(h.num_states, h.alphabet, det);
    m.set_initial(h.initial);
    for (State q : h.finals) m.set_final(q);
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      const std::string where = "transitions[" + std::to_string(i) + "]";
      const auto& rec = transitions[i];
      State from = state_field(rec, "from", where);
      State to = state_field(rec, "to", where);
      char read = symbol_field(rec, "read", where);
      if (!h.alphabet.contains(read))
        throw ParseError(where + ".read", "symbol '" + std::string(1, read) + "' is not in the alphabet");
      m.add_transition(from, read, to);
    }
    return m;
  }
  if (h.kind == "2nfa" || h.kind == "2dfa") {
    bool sweeping = false;
    if (root.contains("sweeping")) {
      if (!root["sweeping"].is_boolean()) throw ParseError("sweeping", "expected true or false");
      sweeping = root["sweeping"].get<bool>();
    }
    TwoWayFA m(h.num_states, h.alphabet, det, sweeping);
    m.set_initial(h.initial);
    for (State q : h.finals) m.set_final(q);
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      const std::string where = "transitions[" + std::to_string(i) + "]";
      const auto& rec = transitions[i];
      State from = state_field(rec, "from", where);
      State to = state_field(rec, "to", where);
      char read = symbol_field(rec, "read", where);
      if (read == kForget || (!h.alphabet.contains(read) && !is_reserved(read)))
        throw ParseError(where + ".read", "symbol '" + std::string(1, read) + "' cannot be read by a two-way automaton");
      m.add_transition(from, read, to, read_move(doc, rec, where));
    }
    return m;
  }
  ForgettingLA m(h.num_states, h.alphabet, det);
  m.set_initial(h.initial);
  for (State q : h.finals) m.set_final(q);
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string where = "transitions[" + std::to_string(i) + "]";
    const auto& rec = transitions[i];
    State from = state_field(rec, "from", where);
    State to = state_field(rec, "to", where);
    char read = symbol_field(rec, "read", where);
    char write = symbol_field(rec, "write", where);
    if (!h.alphabet.contains(read) && !is_reserved(read))
      throw ParseError(where + ".read", "symbol '" + std::string(1, read) + "' is not a tape symbol");
    if (!h.alphabet.contains(write) && !is_reserved(write))
      throw ParseError(where + ".write", "symbol '" + std::string(1, write) + "' is not a tape symbol");
    m.add_transition(from, read, to, write, read_move(doc, rec, where));
  }
  return m;
}

Machine load_machine(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_machine(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

void save_machine(const Machine& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(m);
}

}  // namespace fla
