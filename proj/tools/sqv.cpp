#include "sqv/io.hpp"
#include "sqv/kmatrix.hpp"
#include "sqv/maffei.hpp"
#include "sqv/partition_ops.hpp"
#include "sqv/reflection.hpp"
#include "sqv/suites.hpp"
#include "sqv/torus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sqv;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  std::string input;
  std::string output;
  unsigned long long seed = 7;
  std::string caps = "full";
  std::string format = "text";
  bool timings = false;
  std::string suite;
  std::string kind;
  long rows = 1;
  std::size_t vertex = 0;
};

// Collects one report as text lines or as a JSON object.
class Report {
 public:
  Report(const Options& o, const std::string& command, const Caps& caps) : json_(o.format == "json") {
    doc_["command"] = command;
    doc_["seed"] = o.seed;
    doc_["caps"] = caps.str();
    if (!o.input.empty()) doc_["input"] = o.input;
    text_ << "# sqv " << command << " seed=" << o.seed << " caps=" << caps.str();
    if (!o.input.empty()) text_ << " input=" << o.input;
    text_ << "\n";
  }

  void line(const std::string& key, const std::string& value) {
    doc_[key] = value;
    text_ << key << ": " << value << "\n";
  }
  void check(const std::string& name, bool ok) {
    Json c;
    c["name"] = name;
    c["status"] = ok ? "pass" : "fail";
    doc_["checks"].push_back(c);
    text_ << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    all_ok_ = all_ok_ && ok;
  }
  Json& doc() { return doc_; }
  std::ostringstream& text() { return text_; }
  bool ok() const { return all_ok_; }

  int emit() {
    doc_["passed"] = all_ok_;
    if (json_)
      std::cout << doc_.dump(2) << "\n";
    else
      std::cout << text_.str();
    return all_ok_ ? kPass : kFail;
  }

 private:
  bool json_;
  Json doc_;
  std::ostringstream text_;
  bool all_ok_ = true;
};

Fixture load_type_a(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  Fixture f = load_fixture(path);
  if (!is_type_a_path(f.graph)) throw InputError("expected a type A graph (a path 0 - 1 - ... - n-1)");
  return f;
}

std::string labels_str(const LabelPair& p) { return "mu' = " + p.mu_prime.str() + ", lambda = " + p.lambda.str(); }

Json labels_json(const LabelPair& p) {
  Json j;
  j["mu_prime"] = p.mu_prime.parts();
  j["lambda"] = p.lambda.parts();
  return j;
}

int cmd_slice(const Options& o, const Caps& caps) {
  Fixture f = load_type_a(o.input);
  SliceLabel lab;
  try {
    lab = slice_labels(f.v, f.w);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Report r(o, "slice", caps);
  long wsum = 0;
  for (long x : f.w) wsum += x;
  if (wsum == 0) r.line("note", "empty w: the slice is a point");
  r.line("mu'", lab.mu_prime.str());
  r.line("lambda", lab.lambda.str());
  if (f.delta) {
    try {
      r.line("classical type", to_string(classical_type(*f.delta, f.v.size())));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  r.line("ambient dim W~_1", std::to_string(lab.ambient_dim));
  return r.emit();
}

int cmd_symmetry(const Options& o, const Caps& caps) {
  Fixture f = load_type_a(o.input);
  Report r(o, "symmetry " + o.kind, caps);
  try {
    if (o.kind == "rect") {
      RectSymmetry s = rect_symmetry(f.v, f.w, caps.max_weight);
      r.line("labels", labels_str(s.labels));
      r.line("hat labels", labels_str(s.hat_labels));
      r.doc()["labels_json"] = labels_json(s.labels);
      r.doc()["hat_labels_json"] = labels_json(s.hat_labels);
      r.line("Kostka", "K(lambda, mu') = " + std::to_string(s.kostka) + ", K(lambda^, mu^') = " +
                           std::to_string(s.kostka_hat) + ", K(mu', lambda) = " + std::to_string(s.kostka_t) +
                           ", K(mu^', lambda^) = " + std::to_string(s.kostka_t_hat));
      r.check("mu_i + mu^_{n-i+2} = sum w", s.mu_hat_ok);
      r.check("mu^' from the exponents of mu'", s.mu_prime_hat_ok);
      r.check("labels fit the (n+1) x sum w rectangle", s.fits_rectangle);
      r.check("Kostka identity", s.kostka_ok);
    } else if (o.kind == "col") {
      ColumnRemoval c = column_removal(f.v, f.w);
      r.line("labels", labels_str(c.labels));
      r.line("with a full first column", labels_str(c.breve));
      r.line("embedded in A_{n+1}", labels_str(c.embedded));
      r.check("column removal", c.consistent);
    } else {
      if (o.rows < 0) throw InputError("--rows must be nonnegative");
      RowAddition a = row_addition(f.v, f.w, o.rows);
      r.line("labels", labels_str(a.labels));
      r.line("with " + std::to_string(o.rows) + " added rows", labels_str(a.ddot));
      r.line("embedded in A_{n+1}", labels_str(a.embedded));
      r.check("row addition", a.consistent);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::length_error& e) {
    throw InputError(std::string(e.what()) + " (raise --caps weight=...)");
  }
  return r.emit();
}

int cmd_verify(const Options& o, const Caps& caps) {
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else if (is_suite(o.suite))
    names = {o.suite};
  else
    throw InputError("unknown suite '" + o.suite + "'");
  auto reports = run_suites(names, o.seed, caps);
  Report r(o, "verify " + o.suite, caps);
  std::size_t passed = 0;
  for (const auto& rep : reports) {
    r.doc()["suites"].push_back(report_to_json(rep, o.timings));
    r.text() << format_text(rep, o.timings);
    passed += rep.passed() ? 1 : 0;
  }
  r.check("suites passed: " + std::to_string(passed) + "/" + std::to_string(reports.size()),
          passed == reports.size());
  return r.emit();
}

int cmd_reflect(const Options& o, const Caps& caps) {
  if (o.input.empty()) throw InputError("--input is required");
  Fixture f = load_fixture(o.input);
  if (!f.point) throw InputError("reflect needs a point (x, p, q)");
  if (!f.zeta) throw InputError("reflect needs a parameter \"zeta\"");
  if (o.vertex < 1 || o.vertex > f.v.size()) throw InputError("--vertex must lie in 1.." + std::to_string(f.v.size()));
  const std::size_t i = o.vertex - 1;
  ReflectionResult res;
  try {
    res = reflect_point(*f.point, i, *f.zeta);
  } catch (const ReflectionError& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  CertificateReport cert = check_reflection(*f.point, i, *f.zeta, res);
  Report r(o, "reflect", caps);
  r.line("vertex", std::to_string(o.vertex));
  r.line("branch", res.forward ? "kernel" : "cokernel");
  std::ostringstream v;
  v << "(";
  for (std::size_t k = 0; k < res.point.v.size(); ++k) v << (k ? "," : "") << res.point.v[k];
  v << ")";
  r.line("v'", v.str());
  r.check("certificates R1-R4", cert.ok());
  r.check("v' = s_i * v", res.point.v == weyl_star(f.graph, i, f.v, f.w));
  Json out = point_to_json(res.point);
  Json z;
  z["xi"] = res.zeta.xi;
  z["zeta_c"] = Json::array();
  for (const Q& c : res.zeta.zeta_c) z["zeta_c"].push_back(q_to_json(c));
  out["zeta"] = z;
  if (!o.output.empty()) {
    std::ofstream os(o.output);
    if (!os) throw InputError("cannot write " + o.output);
    os << out.dump(2) << "\n";
    r.line("output", o.output);
  } else {
    r.doc()["point"] = out;
  }
  return r.emit();
}

int cmd_fixed_points(const Options& o, const Caps& caps) {
  if (o.input.empty()) throw InputError("--input is required");
  Fixture f = load_fixture(o.input);
  const Json& j = f.raw;
  const std::size_t n = f.v.size();
  IntVec w1 = j.contains("w1") ? intvec_from_json(j["w1"], "w1") : IntVec(n, 0);
  std::vector<IntVec> blocks;
  if (j.contains("blocks")) {
    if (!j["blocks"].is_array()) throw InputError("blocks: expected an array of dimension vectors");
    for (const auto& b : j["blocks"]) blocks.push_back(intvec_from_json(b, "blocks"));
  }
  IntVec total = w1;
  if (total.size() != n) throw InputError("w1: one entry per vertex");
  for (const auto& b : blocks) {
    if (b.size() != n) throw InputError("blocks: one entry per vertex");
    for (std::size_t k = 0; k < n; ++k) total[k] += 2 * b[k];
  }
  if (total != f.w) throw InputError("w must equal w1 + 2 (w^2 + ... + w^m)");
  DiagramAuto a = DiagramAuto::identity(f.graph);
  if (j.contains("automorphism")) {
    IntVec p = intvec_from_json(j["automorphism"], "automorphism");
    std::vector<std::size_t> perm;
    for (long x : p) {
      if (x < 1 || static_cast<std::size_t>(x) > n) throw InputError("automorphism: 1-based vertex permutation");
      perm.push_back(static_cast<std::size_t>(x - 1));
    }
    try {
      a = DiagramAuto::from_vertex_perm(f.graph, perm);
    } catch (const std::exception& e) {
      throw InputError(std::string("automorphism: ") + e.what());
    }
  }
  WeylWord omega;
  try {
    omega = longest_element(f.graph).word;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (j.contains("omega")) {
    omega.clear();
    for (long x : intvec_from_json(j["omega"], "omega")) {
      if (x < 1 || static_cast<std::size_t>(x) > n) throw InputError("omega: 1-based letters");
      omega.push_back(static_cast<std::size_t>(x - 1));
    }
  }
  std::vector<ModelDecomp> models;
  try {
    models = enumerate_models_multi(f.graph, a, omega, f.v, w1, blocks);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Report r(o, "fixed-points", caps);
  r.line("count", std::to_string(models.size()));
  for (const auto& d : models) {
    r.doc()["decompositions"].push_back(d.parts);
    r.text() << "  " << to_string(d) << "\n";
  }
  bool all_models = true;
  for (const auto& d : models) all_models = all_models && is_model(f.graph, a, omega, f.v, w1, blocks, d);
  r.check("every decomposition satisfies the defining equations", all_models);
  return r.emit();
}

int cmd_kmatrix(const Options& o, const Caps& caps) {
  Report r(o, "kmatrix", caps);
  for (const IdentityCheck& c : kmatrix_battery()) {
    if (c.informational) {
      Json j;
      j["name"] = c.name;
      j["status"] = "info";
      j["holds"] = c.ok;
      r.doc()["checks"].push_back(j);
      r.text() << "INFO  " << c.name << (c.ok ? " (holds)" : " (fails)") << "\n";
    } else {
      r.check(c.name, c.ok);
    }
  }
  return r.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on symmetric quiver varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "Fixture file (JSON)");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--caps", o.caps, "Size caps: full, small, or key=value list")->capture_default_str();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timings", o.timings, "Include wall-clock times in verify reports");

  auto* slice = app.add_subcommand("slice", "Slice labels (mu', lambda) of a type A fixture");
  auto* sym = app.add_subcommand("symmetry", "Rectangular symmetry, column removal or row addition");
  sym->add_option("kind", o.kind, "rect, col or row")->required()->check(CLI::IsMember({"rect", "col", "row"}));
  sym->add_option("--rows", o.rows, "Rows added by 'row'")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", o.suite, "Suite name or 'all'")->required();
  auto* reflect = app.add_subcommand("reflect", "Reflection functor at a vertex");
  reflect->add_option("--vertex", o.vertex, "1-based vertex")->required();
  reflect->add_option("--output", o.output, "Write the reflected point here");
  auto* fixed = app.add_subcommand("fixed-points", "Torus fixed-point decompositions");
  auto* kmat = app.add_subcommand("kmatrix", "K-matrix identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    Caps caps = Caps::parse(o.caps);
    if (*slice) return cmd_slice(o, caps);
    if (*sym) return cmd_symmetry(o, caps);
    if (*verify) return cmd_verify(o, caps);
    if (*reflect) return cmd_reflect(o, caps);
    if (*fixed) return cmd_fixed_points(o, caps);
    if (*kmat) return cmd_kmatrix(o, caps);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
