#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "wallcross/config.hpp"
#include "wallcross/report.hpp"

using namespace wallcross;

namespace {

Json parse(const char* text) { return Json::parse(text); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/wallcross_test_XXXXXX";
    const int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("minimal config defaults to rank 1") {
  const Config cfg = parse_config(parse("{}"));
  CHECK(cfg.lattice_rank == 1);
  CHECK(cfg.dt.empty());
  CHECK(!cfg.pairing.has_value());
  CHECK(!cfg.target_beta.has_value());
}

TEST_CASE("full config parses") {
  const Config cfg = parse_config(parse(R"({
    "lattice_rank": 2,
    "dt_table": [
      {"class": [1, 0], "value": "1/2"},
      {"class": [0, 1], "value": -3}
    ],
    "pairing": {"mode": "geometric_linear", "L": [1, -2]},
    "targets": {"beta": [1, 1], "selector": [[1, 0], [0, 1]]}
  })"));
  CHECK(cfg.lattice_rank == 2);
  CHECK(cfg.dt.value(ChernClass({1, 0})) == Rational(BigInt(1), BigInt(2)));
  CHECK(cfg.dt.value(ChernClass({0, 1})) == Rational(-3));
  REQUIRE(cfg.pairing.has_value());
  CHECK((*cfg.pairing)(NumClass::point(2, 2), NumClass::sheaf(ChernClass({0, 1}))) == -4);
  REQUIRE(cfg.target_beta.has_value());
  CHECK(*cfg.target_beta == ChernClass({1, 1}));
  CHECK(cfg.selector.size() == 2);
}

TEST_CASE("explicit table pairing in config") {
  const Config cfg = parse_config(parse(R"({
    "lattice_rank": 1,
    "pairing": {"mode": "explicit_table", "entries": [
      {"x": {"beta": [0], "d": 2}, "y": {"beta": [1], "d": 0}, "value": 3}
    ]}
  })"));
  REQUIRE(cfg.pairing.has_value());
  CHECK((*cfg.pairing)(NumClass::point(1, 2), NumClass::sheaf(ChernClass({1}))) == 3);
  CHECK((*cfg.pairing)(NumClass::sheaf(ChernClass({1})), NumClass::point(1, 2)) == -3);
}

TEST_CASE("config validation errors carry the JSON path") {
  CHECK_THROWS_WITH_AS(parse_config(parse(R"({"lattice_rank": 0})")),
                       doctest::Contains("$.lattice_rank"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(parse(R"({"dt_table": [{"class": [0], "value": 1}]})")),
                       doctest::Contains("nonzero effective"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(parse(
          R"({"dt_table": [{"class": [1], "value": 1}, {"class": [1], "value": 2}]})")),
      doctest::Contains("duplicate"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(parse(R"({"lattice_rank": 2, "pairing": {"mode": "geometric_linear", "L": [1]}})")),
      doctest::Contains("$.pairing.L"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(parse(R"({"pairing": {"mode": "frobnicate"}})")),
                       doctest::Contains("unknown pairing mode"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(parse(R"({"dt_table": [{"class": [1], "value": "0.5"}]})")),
                       doctest::Contains("$.dt_table[0].value"), ConfigError);
  // rank mismatch inside a class
  CHECK_THROWS_WITH_AS(
      parse_config(parse(R"({"lattice_rank": 2, "dt_table": [{"class": [1], "value": 1}]})")),
      doctest::Contains("rank mismatch"), ConfigError);
}

TEST_CASE("non-antisymmetric pairing is rejected with the offending pair") {
  CHECK_THROWS_WITH_AS(parse_config(parse(R"({
    "pairing": {"mode": "explicit_table", "entries": [
      {"x": {"beta": [0], "d": 2}, "y": {"beta": [1], "d": 0}, "value": 3},
      {"x": {"beta": [1], "d": 0}, "y": {"beta": [0], "d": 2}, "value": 3}
    ]}
  })")),
                       doctest::Contains("pairing antisymmetry violated at"), ConfigError);
}

TEST_CASE("load_config reports parse errors with line and column") {
  const TempFile bad("{\n  \"lattice_rank\": 1,\n  oops\n}\n");
  try {
    load_config(bad.path);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("load_config round-trips a valid file") {
  const TempFile good(R"({"lattice_rank": 1, "dt_table": [{"class": [2], "value": "2/3"}]})");
  const Config cfg = load_config(good.path);
  CHECK(cfg.dt.value(ChernClass({2})) == Rational(BigInt(2), BigInt(3)));
}

TEST_CASE("compact sequence grammar") {
  // the documented compact form at rank 1
  const auto seq = parse_class_sequence("[(0,2),(1;0)]", 1);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0] == NumClass::point(1, 2));
  CHECK(seq[1] == NumClass::sheaf(ChernClass({1})));
  // ',' and ';' interchangeable, whitespace tolerated
  CHECK(parse_class_sequence("[ (1, 0) , (0; 1) ]", 1) ==
        std::vector<NumClass>{NumClass::sheaf(ChernClass({1})), NumClass::point(1, 1)});
  // rank-2 letters; a lone 0 beta expands to the zero class
  const auto r2 = parse_class_sequence("[(0,2),(1;1;0)]", 2);
  CHECK(r2[0] == NumClass::point(2, 2));
  CHECK(r2[1] == NumClass::sheaf(ChernClass({1, 1})));
  // JSON form
  CHECK(parse_class_sequence(R"([{"beta": [0], "d": 2}])", 1) ==
        std::vector<NumClass>{NumClass::point(1, 2)});

  CHECK_THROWS_AS(parse_class_sequence("", 1), ConfigError);
  CHECK_THROWS_AS(parse_class_sequence("[]", 1), ConfigError);
  CHECK_THROWS_AS(parse_class_sequence("[(1)]", 1), ConfigError);       // missing d
  CHECK_THROWS_AS(parse_class_sequence("[(1,-1)]", 1), ConfigError);    // negative d
  CHECK_THROWS_AS(parse_class_sequence("[(1;1,0)]", 1), ConfigError);   // rank mismatch
  CHECK_THROWS_AS(parse_class_sequence("[(a,1)]", 1), ConfigError);
}

TEST_CASE("parts and beta grammar") {
  CHECK(parse_parts_list("[1,2]", 1) ==
        std::vector<ChernClass>{ChernClass({1}), ChernClass({2})});
  CHECK(parse_parts_list("[(1;0),(0;1)]", 2) ==
        std::vector<ChernClass>{ChernClass({1, 0}), ChernClass({0, 1})});
  CHECK(parse_parts_list("[[1,0],[0,1]]", 2) ==
        std::vector<ChernClass>{ChernClass({1, 0}), ChernClass({0, 1})});
  CHECK(parse_parts_list("[]", 1).empty());
  CHECK(parse_beta("2", 1) == ChernClass({2}));
  CHECK(parse_beta("(1;1)", 2) == ChernClass({1, 1}));
  CHECK(parse_beta("[1,1]", 2) == ChernClass({1, 1}));
  CHECK_THROWS_AS(parse_beta("x", 1), ConfigError);
}

TEST_CASE("report json round-trips rationals exactly") {
  const Rational r(BigInt(-22), BigInt(7));
  const Json j = to_json(r);
  CHECK(j.is_string());
  CHECK(Rational::parse(j.get<std::string>()) == r);
  // never a decimal
  CHECK(j.get<std::string>().find('.') == std::string::npos);
}

TEST_CASE("numclass json round-trips") {
  const NumClass c(ChernClass({1, 2}), 1);
  const Json j = to_json(c);
  CHECK(numclass_from_json(j, 2, "test") == c);
}

TEST_CASE("report documents re-parse to the same bytes and values") {
  const DTTable dt({{ChernClass({1}), Rational(1)}, {ChernClass({2}), Rational(BigInt(-1), BigInt(2))}});
  const EulerPairing p = EulerPairing::geometric_linear({1});
  const InvariantResult result = bss_invariant(ChernClass({3}), dt, p);
  const Json doc = to_json(result);
  const std::string once = doc.dump(2);
  const Json reparsed = Json::parse(once);
  CHECK(reparsed.dump(2) == once);
  CHECK(Rational::parse(reparsed["closed_form"].get<std::string>()) == result.closed_form);
  CHECK(Rational::parse(reparsed["bracket_eval"].get<std::string>()) == result.bracket_eval);
  REQUIRE(reparsed["per_decomposition"].size() == result.per_decomposition.size());
  for (std::size_t i = 0; i < result.per_decomposition.size(); ++i)
    CHECK(Rational::parse(
              reparsed["per_decomposition"][i]["bracket_eval"].get<std::string>()) ==
          result.per_decomposition[i].bracket_eval);
}
