#include "fla/json_reader.hpp"

#include <algorithm>
#include <limits>

namespace fla {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

JsonDocument::JsonDocument(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    throw ParseError("format-version", "missing format-version");
  try {
    root_ = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_column(text, e.byte), "malformed JSON");
  }
  if (!root_.is_object()) throw ParseError("", "top-level value must be an object");
}

const nlohmann::json& JsonDocument::get(const nlohmann::json& obj, const char* key,
                                        const std::string& where) const {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where, "missing field");
  return obj[key];
}

const nlohmann::json& JsonDocument::get_array(const nlohmann::json& obj, const char* key,
                                              const std::string& where) const {
  const auto& v = get(obj, key, where);
  if (!v.is_array()) throw ParseError(where, "expected an array");
  return v;
}

int JsonDocument::get_int(const nlohmann::json& obj, const char* key,
                          const std::string& where) const {
  return as_int(get(obj, key, where), where);
}

std::string JsonDocument::get_string(const nlohmann::json& obj, const char* key,
                                     const std::string& where) const {
  const auto& v = get(obj, key, where);
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

int JsonDocument::as_int(const nlohmann::json& v, const std::string& where) const {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ParseError(where, "integer out of range");
  return static_cast<int>(x);
}

char JsonDocument::as_symbol(const nlohmann::json& v, const std::string& where) const {
  if (!v.is_string()) throw ParseError(where, "expected a one-character string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.size() != 1) throw ParseError(where, "expected a one-character string, got \"" + s + "\"");
  return s[0];
}

}  // namespace fla
