#include "wallcross/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wallcross {

namespace {

using Json = nlohmann::ordered_json;

std::string line_col_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t int_field(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ConfigError(where, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where, e.what());
    }
  }
  throw ConfigError(where, "expected an integer or a \"p/q\" string, got " + j.dump());
}

}  // namespace

ChernClass chernclass_from_json(const Json& j, int rank, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ConfigError(where, "expected a nonempty coordinate array, got " + j.dump());
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < j.size(); ++i)
    coords.push_back(int_field(j[i], where + "[" + std::to_string(i) + "]"));
  if (rank > 0 && static_cast<int>(coords.size()) != rank) {
    // a lone 0 means the zero class at the configured rank
    if (coords.size() == 1 && coords[0] == 0)
      return ChernClass::zero(rank);
    throw ConfigError(where, "lattice rank mismatch: got " + std::to_string(coords.size()) +
                                 " coordinates, configured rank is " + std::to_string(rank));
  }
  return ChernClass(std::move(coords));
}

NumClass numclass_from_json(const Json& j, int rank, const std::string& where) {
  if (!j.is_object() || !j.contains("beta") || !j.contains("d"))
    throw ConfigError(where, "expected {\"beta\": [...], \"d\": n}, got " + j.dump());
  ChernClass beta = chernclass_from_json(j["beta"], rank, where + ".beta");
  const std::int64_t d = int_field(j["d"], where + ".d");
  if (d < 0) throw ConfigError(where + ".d", "d must be >= 0");
  return NumClass(std::move(beta), d);
}

Config parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "config must be a JSON object");
  Config cfg;

  if (doc.contains("lattice_rank")) {
    const std::int64_t rank = int_field(doc["lattice_rank"], "$.lattice_rank");
    if (rank < 1) throw ConfigError("$.lattice_rank", "lattice rank must be >= 1");
    cfg.lattice_rank = static_cast<int>(rank);
  }

  if (doc.contains("dt_table")) {
    const Json& table = doc["dt_table"];
    if (!table.is_array()) throw ConfigError("$.dt_table", "expected an array");
    std::map<ChernClass, Rational> entries;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string where = "$.dt_table[" + std::to_string(i) + "]";
      const Json& row = table[i];
      if (!row.is_object() || !row.contains("class") || !row.contains("value"))
        throw ConfigError(where, "expected {\"class\": [...], \"value\": ...}");
      ChernClass cls = chernclass_from_json(row["class"], cfg.lattice_rank, where + ".class");
      if (!cls.effective())
        throw ConfigError(where + ".class",
                          "DT table key " + cls.to_string() + " must be nonzero effective");
      if (entries.count(cls)) throw ConfigError(where + ".class", "duplicate DT table key");
      entries.emplace(std::move(cls), rational_field(row["value"], where + ".value"));
    }
    cfg.dt = DTTable(std::move(entries));
  }

  if (doc.contains("pairing")) {
    const Json& pairing = doc["pairing"];
    const std::string where = "$.pairing";
    if (!pairing.is_object() || !pairing.contains("mode"))
      throw ConfigError(where, "expected {\"mode\": ...}");
    const std::string mode = pairing["mode"].get<std::string>();
    if (mode == "geometric_linear") {
      if (!pairing.contains("L") || !pairing["L"].is_array())
        throw ConfigError(where + ".L", "geometric_linear pairing needs an L array");
      std::vector<std::int64_t> L;
      for (std::size_t i = 0; i < pairing["L"].size(); ++i)
        L.push_back(int_field(pairing["L"][i], where + ".L[" + std::to_string(i) + "]"));
      if (static_cast<int>(L.size()) != cfg.lattice_rank)
        throw ConfigError(where + ".L", "L length must equal the lattice rank");
      cfg.pairing = EulerPairing::geometric_linear(std::move(L));
    } else if (mode == "explicit_table") {
      if (!pairing.contains("entries") || !pairing["entries"].is_array())
        throw ConfigError(where + ".entries", "explicit_table pairing needs an entries array");
      std::vector<std::tuple<NumClass, NumClass, std::int64_t>> entries;
      const Json& rows = pairing["entries"];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rw = where + ".entries[" + std::to_string(i) + "]";
        const Json& row = rows[i];
        if (!row.is_object() || !row.contains("x") || !row.contains("y") || !row.contains("value"))
          throw ConfigError(rw, "expected {\"x\": ..., \"y\": ..., \"value\": n}");
        entries.emplace_back(numclass_from_json(row["x"], cfg.lattice_rank, rw + ".x"),
                             numclass_from_json(row["y"], cfg.lattice_rank, rw + ".y"),
                             int_field(row["value"], rw + ".value"));
      }
      try {
        cfg.pairing = EulerPairing::explicit_table(entries);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(where, e.what());
      }
    } else {
      throw ConfigError(where + ".mode",
                        "unknown pairing mode '" + mode +
                            "' (expected geometric_linear or explicit_table)");
    }
  }

  if (doc.contains("targets")) {
    const Json& targets = doc["targets"];
    if (!targets.is_object()) throw ConfigError("$.targets", "expected an object");
    if (targets.contains("beta"))
      cfg.target_beta = chernclass_from_json(targets["beta"], cfg.lattice_rank, "$.targets.beta");
    if (targets.contains("selector")) {
      const Json& sel = targets["selector"];
      if (!sel.is_array()) throw ConfigError("$.targets.selector", "expected an array");
      for (std::size_t i = 0; i < sel.size(); ++i)
        cfg.selector.push_back(chernclass_from_json(
            sel[i], cfg.lattice_rank, "$.targets.selector[" + std::to_string(i) + "]"));
    }
  }

  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ", " + line_col_of_offset(text, e.byte), e.what());
  }
  return parse_config(doc);
}

namespace {

std::vector<std::string> split_top_level(const std::string& inner) {
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::int64_t> parse_int_tuple(const std::string& text, const std::string& where) {
  std::vector<std::int64_t> out;
  std::string cur;
  auto flush = [&] {
    const std::string tok = strip(cur);
    cur.clear();
    if (tok.empty()) throw ConfigError(where, "empty integer in '" + text + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError(where, "malformed integer '" + tok + "'");
    }
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';')
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

ChernClass beta_from_coords(std::vector<std::int64_t> coords, int rank,
                            const std::string& where) {
  if (rank > 0 && static_cast<int>(coords.size()) != rank) {
    if (coords.size() == 1 && coords[0] == 0) return ChernClass::zero(rank);
    throw ConfigError(where, "lattice rank mismatch: got " + std::to_string(coords.size()) +
                                 " coordinates, configured rank is " + std::to_string(rank));
  }
  return ChernClass(std::move(coords));
}

}  // namespace

std::vector<NumClass> parse_class_sequence(const std::string& text, int rank) {
  const std::string t = strip(text);
  if (t.empty()) throw ConfigError("sequence", "empty sequence");
  if (t[0] == '[' && t.find('{') != std::string::npos) {
    Json doc;
    try {
      doc = Json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("sequence", e.what());
    }
    std::vector<NumClass> out;
    for (std::size_t i = 0; i < doc.size(); ++i)
      out.push_back(numclass_from_json(doc[i], rank, "sequence[" + std::to_string(i) + "]"));
    return out;
  }
  if (t.front() != '[' || t.back() != ']')
    throw ConfigError("sequence", "expected [...], got '" + text + "'");
  std::vector<NumClass> out;
  for (const std::string& raw : split_top_level(t.substr(1, t.size() - 2))) {
    const std::string item = strip(raw);
    const std::string where = "sequence letter '" + item + "'";
    if (item.size() < 2 || item.front() != '(' || item.back() != ')')
      throw ConfigError(where, "expected (beta,d)");
    std::vector<std::int64_t> ints = parse_int_tuple(item.substr(1, item.size() - 2), where);
    if (ints.size() < 2) throw ConfigError(where, "need at least beta and d");
    const std::int64_t d = ints.back();
    ints.pop_back();
    if (d < 0) throw ConfigError(where, "d must be >= 0");
    out.push_back(NumClass(beta_from_coords(std::move(ints), rank, where), d));
  }
  if (out.empty()) throw ConfigError("sequence", "empty sequence");
  return out;
}

std::vector<ChernClass> parse_parts_list(const std::string& text, int rank) {
  const std::string t = strip(text);
  if (t.empty()) return {};
  if (t == "[]") return {};
  if (t.front() != '[' || t.back() != ']')
    throw ConfigError("parts", "expected [...], got '" + text + "'");
  const std::string inner = strip(t.substr(1, t.size() - 2));
  if (inner.empty()) return {};
  if (inner.front() == '[') {  // JSON array of coordinate arrays
    Json doc;
    try {
      doc = Json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("parts", e.what());
    }
    std::vector<ChernClass> out;
    for (std::size_t i = 0; i < doc.size(); ++i)
      out.push_back(chernclass_from_json(doc[i], rank, "parts[" + std::to_string(i) + "]"));
    return out;
  }
  std::vector<ChernClass> out;
  for (const std::string& raw : split_top_level(inner)) {
    const std::string item = strip(raw);
    const std::string where = "parts item '" + item + "'";
    if (!item.empty() && item.front() == '(') {
      if (item.back() != ')') throw ConfigError(where, "unbalanced parentheses");
      out.push_back(
          beta_from_coords(parse_int_tuple(item.substr(1, item.size() - 2), where), rank, where));
    } else {
      out.push_back(beta_from_coords(parse_int_tuple(item, where), rank, where));
    }
  }
  return out;
}

ChernClass parse_beta(const std::string& text, int rank) {
  const std::string t = strip(text);
  if (t.empty()) throw ConfigError("beta", "empty class");
  if (t.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("beta", e.what());
    }
    return chernclass_from_json(doc, rank, "beta");
  }
  if (t.front() == '(') {
    if (t.back() != ')') throw ConfigError("beta", "unbalanced parentheses");
    return beta_from_coords(parse_int_tuple(t.substr(1, t.size() - 2), "beta"), rank, "beta");
  }
  return beta_from_coords(parse_int_tuple(t, "beta"), rank, "beta");
}

}  // namespace wallcross
