#include "sqv/io.hpp"

#include <fstream>
#include <map>

namespace sqv {

namespace {

[[noreturn]] void fail(const std::string& m) { throw InputError(m); }

long as_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + ": expected an integer");
  return j.get<long>();
}

std::size_t index_key(const std::string& key, std::size_t bound, const std::string& what) {
  std::size_t used = 0;
  unsigned long k = 0;
  try {
    k = std::stoul(key, &used);
  } catch (const std::exception&) {
    fail(what + ": bad key '" + key + "'");
  }
  if (used != key.size() || k >= bound) fail(what + ": key '" + key + "' out of range");
  return k;
}

}  // namespace

Json q_to_json(const Q& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

Q q_from_json(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) fail("rational: expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    fail("rational: malformed '" + j.get<std::string>() + "'");
  }
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(q_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail("matrix: expected an array of rows");
  QMatrix m(rows, cols);
  if (rows == 0 || cols == 0) {
    // [] or rows of empty arrays
    for (const auto& row : j)
      if (!row.is_array() || !row.empty()) fail("matrix: expected an empty " + std::to_string(rows) + "x" +
                                                std::to_string(cols) + " matrix");
    if (rows == 0 && !j.empty()) fail("matrix: expected no rows");
    if (rows > 0 && !j.empty() && j.size() != rows) fail("matrix: wrong number of rows");
    return m;
  }
  if (j.size() != rows) fail("matrix: expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail("matrix: row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = q_from_json(j[r][c]);
  }
  return m;
}

Json graph_to_json(const Graph& g) {
  Json j;
  Json vs = Json::array();
  for (std::size_t i = 0; i < g.num_vertices(); ++i) vs.push_back(i);
  j["vertices"] = vs;
  Json es = Json::array();
  for (auto [a, b] : g.edges()) es.push_back(Json::array({a, b}));
  j["edges"] = es;
  j["orientation"] = g.edge_orientation();
  return j;
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Graph::dynkin(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(std::string("graph: ") + e.what());
    }
  }
  if (!j.is_object()) fail("graph: expected an object");
  if (j.contains("dynkin")) return graph_from_json(j["dynkin"]);
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail("graph: missing \"vertices\"");
  std::map<std::string, std::size_t> ids;
  for (const auto& v : j["vertices"]) {
    std::string key = v.is_string() ? v.get<std::string>() : v.dump();
    if (ids.count(key)) fail("graph: duplicate vertex id " + key);
    ids.emplace(key, ids.size());
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail("graph: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) fail("graph: each edge is a pair [i, j]");
      auto find = [&](const Json& v) {
        auto it = ids.find(v.is_string() ? v.get<std::string>() : v.dump());
        if (it == ids.end()) fail("graph: edge endpoint " + v.dump() + " is not a vertex");
        return it->second;
      };
      edges.push_back({find(e[0]), find(e[1])});
    }
  }
  std::vector<int> eps(edges.size(), -1);
  if (j.contains("orientation")) {
    if (!j["orientation"].is_array() || j["orientation"].size() != edges.size())
      fail("graph: \"orientation\" needs one sign per edge");
    for (std::size_t k = 0; k < edges.size(); ++k) eps[k] = static_cast<int>(as_long(j["orientation"][k], "orientation"));
  }
  try {
    return Graph(ids.size(), edges, eps);
  } catch (const std::invalid_argument& e) {
    fail(std::string("graph: ") + e.what());
  }
}

IntVec intvec_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field + ": expected an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(as_long(x, field));
  return out;
}

Json point_to_json(const RepPoint& pt) {
  Json j;
  j["graph"] = graph_to_json(pt.graph);
  j["v"] = pt.v;
  j["w"] = pt.w;
  Json x = Json::object(), p = Json::object(), q = Json::object();
  for (std::size_t h = 0; h < pt.x.size(); ++h) x[std::to_string(h)] = matrix_to_json(pt.x[h]);
  for (std::size_t i = 0; i < pt.p.size(); ++i) {
    p[std::to_string(i)] = matrix_to_json(pt.p[i]);
    q[std::to_string(i)] = matrix_to_json(pt.q[i]);
  }
  j["x"] = x;
  j["p"] = p;
  j["q"] = q;
  return j;
}

namespace {

void check_dims(const Graph& g, const IntVec& v, const IntVec& w) {
  if (v.size() != g.num_vertices() || w.size() != g.num_vertices())
    fail("dimension vectors need one entry per vertex");
  for (long x : v)
    if (x < 0) fail("negative dimension in v");
  for (long x : w)
    if (x < 0) fail("negative dimension in w");
}

}  // namespace

RepPoint point_from_json(const Json& j) {
  if (!j.is_object()) fail("point: expected an object");
  for (const char* k : {"graph", "v", "w"})
    if (!j.contains(k)) fail(std::string("point: missing \"") + k + "\"");
  Graph g = graph_from_json(j["graph"]);
  IntVec v = intvec_from_json(j["v"], "v"), w = intvec_from_json(j["w"], "w");
  check_dims(g, v, w);
  RepPoint pt = RepPoint::zero(g, v, w);
  auto read = [&](const char* field, std::size_t bound, auto&& dims, std::vector<QMatrix>& out) {
    if (!j.contains(field)) return;
    const Json& m = j[field];
    if (!m.is_object()) fail(std::string("point: \"") + field + "\" must map indices to matrices");
    for (const auto& [key, val] : m.items()) {
      std::size_t k = index_key(key, bound, field);
      auto [r, c] = dims(k);
      out[k] = matrix_from_json(val, r, c);
    }
  };
  read("x", g.num_arrows(), [&](std::size_t h) {
    const Arrow& a = g.arrow(h);
    return std::pair{pt.vdim(a.dst), pt.vdim(a.src)};
  }, pt.x);
  read("p", g.num_vertices(), [&](std::size_t i) { return std::pair{pt.vdim(i), pt.wdim(i)}; }, pt.p);
  read("q", g.num_vertices(), [&](std::size_t i) { return std::pair{pt.wdim(i), pt.vdim(i)}; }, pt.q);
  return pt;
}

Fixture fixture_from_json(const Json& j) {
  if (!j.is_object()) fail("fixture: expected an object");
  Fixture f;
  f.raw = j;
  if (!j.contains("graph")) fail("fixture: missing \"graph\"");
  f.graph = graph_from_json(j["graph"]);
  if (!j.contains("v") || !j.contains("w")) fail("fixture: missing \"v\" or \"w\"");
  f.v = intvec_from_json(j["v"], "v");
  f.w = intvec_from_json(j["w"], "w");
  check_dims(f.graph, f.v, f.w);
  if (j.contains("x") || j.contains("p") || j.contains("q")) f.point = point_from_json(j);
  if (j.contains("delta")) {
    IntVec d = intvec_from_json(j["delta"], "delta");
    if (d.size() != f.w.size()) fail("delta: one sign per vertex");
    std::vector<int> s;
    for (long x : d) {
      if (x != 1 && x != -1) fail("delta: entries must be +1 or -1");
      s.push_back(static_cast<int>(x));
    }
    f.delta = s;
  }
  if (j.contains("zeta")) {
    const Json& z = j["zeta"];
    if (!z.is_object() || !z.contains("xi") || !z.contains("zeta_c")) fail("zeta: expected {\"xi\", \"zeta_c\"}");
    Parameter p;
    p.xi = intvec_from_json(z["xi"], "zeta.xi");
    if (!z["zeta_c"].is_array()) fail("zeta.zeta_c: expected an array");
    for (const auto& c : z["zeta_c"]) p.zeta_c.push_back(q_from_json(c));
    if (p.xi.size() != f.v.size() || p.zeta_c.size() != f.v.size()) fail("zeta: one entry per vertex");
    f.zeta = p;
  }
  return f;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

Fixture load_fixture(const std::string& path) {
  try {
    return fixture_from_json(load_json(path));
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

Json report_to_json(const SuiteReport& r, bool timings) {
  Json j;
  j["suite"] = r.name;
  j["criterion"] = r.criterion;
  j["seed"] = r.seed;
  if (timings) j["seconds"] = r.seconds;
  j["time_limit"] = r.time_limit;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = c.informational ? "info" : (c.ok() ? "pass" : "fail");
    cj["passed"] = c.passed;
    cj["total"] = c.total;
    if (!c.ok() && !c.first_failure.empty()) cj["first_failure"] = c.first_failure;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  return j;
}

}  // namespace sqv
