#pragma once

// Thin checked accessors over nlohmann::json shared by the machine-file and
// experiment-config readers. Every failure is a ParseError carrying the
// field path (or line/column for syntax errors).

#include <string>
#include <string_view>

#include <json.hpp>

#include "fla/machine_io.hpp"

namespace fla {

class JsonDocument {
 public:
  explicit JsonDocument(std::string_view text);

  const nlohmann::json& root() const { return root_; }

  const nlohmann::json& get(const nlohmann::json& obj, const char* key,
                            const std::string& where) const;
  const nlohmann::json& get_array(const nlohmann::json& obj, const char* key,
                                  const std::string& where) const;
  int get_int(const nlohmann::json& obj, const char* key, const std::string& where) const;
  std::string get_string(const nlohmann::json& obj, const char* key,
                         const std::string& where) const;

  int as_int(const nlohmann::json& v, const std::string& where) const;
  char as_symbol(const nlohmann::json& v, const std::string& where) const;

 private:
  nlohmann::json root_;
};

}  // namespace fla
