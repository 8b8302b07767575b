#pragma once

#include "sqv/rep.hpp"
#include "sqv/suites.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqv {

// Malformed or inconsistent input; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Rationals as "p/q" strings; integers are accepted on input.
Json q_to_json(const Q& x);
Q q_from_json(const Json& j);

// Row-major array of rows.
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// {"vertices": [ids], "edges": [[i, j], ...], "orientation": [eps per edge]}.
// "dynkin": "A3" is accepted in place of the three lists.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"graph", "v", "w", "x": {arrow: matrix}, "p": {vertex: matrix}, "q": {vertex: matrix}}.
// Missing matrices are zero.
Json point_to_json(const RepPoint& pt);
RepPoint point_from_json(const Json& j);

IntVec intvec_from_json(const Json& j, const std::string& field);

// A fixture file: a point or bare dimension data plus optional extras.
struct Fixture {
  Json raw;
  Graph graph;
  IntVec v, w;
  std::optional<RepPoint> point;     // when "x", "p" or "q" is present
  std::optional<std::vector<int>> delta;  // "delta": signs of the forms on W
  std::optional<Parameter> zeta;     // "zeta": {"xi": [...], "zeta_c": ["p/q", ...]}
};

Fixture fixture_from_json(const Json& j);
Fixture load_fixture(const std::string& path);
Json load_json(const std::string& path);

Json report_to_json(const SuiteReport& r, bool timings = true);

}  // namespace sqv
