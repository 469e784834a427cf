#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallcross/classes.hpp"
#include "wallcross/lie.hpp"

namespace wallcross {

// Configuration / input validation failure; `where` is a JSON path or a
// line:column location inside the config document.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

struct Config {
  int lattice_rank = 1;
  DTTable dt;
  std::optional<EulerPairing> pairing;
  std::optional<ChernClass> target_beta;
  std::vector<ChernClass> selector;
};

// Parses and validates {"lattice_rank", "dt_table", "pairing", "targets"}.
Config parse_config(const nlohmann::ordered_json& doc);
// Reads the file; parse errors carry line:column positions.
Config load_config(const std::string& path);

// NumClass from {"beta": [...], "d": n}; rank must match when rank > 0.
NumClass numclass_from_json(const nlohmann::ordered_json& j, int rank, const std::string& where);
ChernClass chernclass_from_json(const nlohmann::ordered_json& j, int rank,
                                const std::string& where);

// Compact CLI grammar. A sequence is "[(0,2),(1;0)]": parenthesized integer
// lists, ',' and ';' interchangeable, last integer is d, the rest are beta
// coordinates; a lone 0 beta expands to the zero class at the configured
// rank. A JSON array of {"beta":...,"d":...} objects is accepted too.
std::vector<NumClass> parse_class_sequence(const std::string& text, int rank);

// Parts / selector grammar: "[1,2]" (rank-1 classes) or "[(1;0),(0;1)]";
// JSON arrays of coordinate arrays are accepted too.
std::vector<ChernClass> parse_parts_list(const std::string& text, int rank);

// Single beta: "2", "(2)", "(1;1)" or a JSON coordinate array.
ChernClass parse_beta(const std::string& text, int rank);

}  // namespace wallcross
