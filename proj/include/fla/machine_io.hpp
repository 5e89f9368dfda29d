#pragma once

// Text interchange format for machines (".mach" files).
//
// A machine file is a JSON object:
//
//   {
//     "format-version": 1,
//     "kind": "fla",
//     "alphabet": ["a", "b"],
//     "states": [0, 1, 2],
//     "initial": 0,
//     "finals": [0],
//     "transitions": [
//       {"from": 0, "read": "a", "to": 1, "write": "Z", "move": 1},
//       ...
//     ]
//   }
//
// One-way kinds (nfa, dfa) omit "write" and "move"; two-way kinds (2nfa,
// 2dfa) omit "write" and carry an extra top-level "sweeping" flag.
// serialize() emits a canonical layout with one transition per line, so
// parse(serialize(m)) == m and re-serializing is byte-stable.

#include <stdexcept>
#include <string>
#include <string_view>

#include "fla/model.hpp"

namespace fla {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

std::string serialize(const Machine& m);
Machine parse_machine(std::string_view text);

Machine load_machine(const std::string& path);
void save_machine(const Machine& m, const std::string& path);

}  // namespace fla
