#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flagtutte/bivariate.hpp"
#include "flagtutte/equivariant.hpp"
#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/laurent.hpp"
#include "flagtutte/matroid.hpp"
#include "flagtutte/polymatroid.hpp"
#include "flagtutte/polytope.hpp"
#include "json.hpp"

namespace flagtutte::cli {

using nlohmann::json;

/// ParseError or SchemaError; `where` is a JSON pointer into the input.
class InputError : public std::runtime_error {
 public:
  InputError(std::string kind, std::string where, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)), where_(std::move(where)) {}
  const std::string& kind() const { return kind_; }
  const std::string& where() const { return where_; }

 private:
  std::string kind_;
  std::string where_;
};

json load_json_file(const std::string& path);
json parse_json_text(const std::string& text, const std::string& origin);

/// Value of the top-level "type" key.
std::string input_type(const json& doc);

Matroid matroid_from_json(const json& doc);
Polymatroid polymatroid_from_json(const json& doc);
FlagMatroid flag_matroid_from_json(const json& doc);
std::vector<Matroid> matroid_list_from_json(const json& doc);

/// "0|01" style; elements are single digits when n <= 10, otherwise comma separated.
std::string flag_string(const Flag& f, int n);
Flag parse_flag_string(const std::string& text, int n, int offset);

json to_json(const BivarPoly& p, const std::string& vx = "x", const std::string& vy = "y");
json to_json(const UnivarPoly& p, const std::string& var = "lambda");
json to_json(const LaurentPoly& p);
json subset_json(Subset s);
json subsets_json(const std::vector<Subset>& ss);
json intvecs_json(const std::vector<IntVec>& vs);

}  // namespace flagtutte::cli
