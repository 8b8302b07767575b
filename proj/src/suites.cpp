#include "sqv/suites.hpp"

#include "sqv/forms.hpp"
#include "sqv/invariants.hpp"
#include "sqv/involutions.hpp"
#include "sqv/kmatrix.hpp"
#include "sqv/maffei.hpp"
#include "sqv/partition_ops.hpp"
#include "sqv/reflection.hpp"
#include "sqv/torus.hpp"
#include "sqv/zw.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sqv {

namespace {

using Clock = std::chrono::steady_clock;

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

class Battery {
 public:
  Battery(std::string name, int criterion, double limit, unsigned long long seed)
      : start_(Clock::now()), rng_(seed * 1000003ULL + static_cast<unsigned long long>(criterion)) {
    rep_.name = std::move(name);
    rep_.criterion = criterion;
    rep_.seed = seed;
    rep_.time_limit = limit;
  }

  Rng& rng() { return rng_; }

  void expect(const std::string& check, bool ok, const std::string& what = {}) { record(check, ok, what, false); }
  void info(const std::string& check, bool ok, const std::string& what = {}) { record(check, ok, what, true); }

  // Runs f; an exception counts as one failed instance of `check`.
  void guard(const std::string& check, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(check, false, std::string("exception: ") + e.what());
    }
  }

  SuiteReport finish() {
    rep_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(rep_);
  }

 private:
  void record(const std::string& check, bool ok, const std::string& what, bool informational) {
    auto it = index_.find(check);
    if (it == index_.end()) {
      it = index_.emplace(check, rep_.checks.size()).first;
      rep_.checks.push_back(CheckResult{check, 0, 0, informational, {}});
    }
    CheckResult& c = rep_.checks[it->second];
    ++c.total;
    if (ok)
      ++c.passed;
    else if (c.first_failure.empty())
      c.first_failure = what.empty() ? "instance " + std::to_string(c.total) : what;
  }

  SuiteReport rep_;
  std::map<std::string, std::size_t> index_;
  Clock::time_point start_;
  Rng rng_;
};

// Calls f on every vector in [lo, hi]^n.
void for_each_box(std::size_t n, long lo, long hi, const std::function<void(const IntVec&)>& f) {
  IntVec x(n, lo);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi) x[k++] = lo;
    if (k == n) return;
    ++x[k];
  }
}

std::vector<int> alternating(std::size_t n, int first) {
  std::vector<int> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = k % 2 == 0 ? first : -first;
  return d;
}

// Even dimension wherever the sign is -1.
IntVec w_for(const std::vector<int>& delta, long base) {
  IntVec w;
  for (int d : delta) w.push_back(d == -1 ? 2 * base : base);
  return w;
}

Form random_form(Rng& rng, std::size_t dim, int delta) {
  return random_equivalent_grading({Form::standard(dim, delta)}, rng)[0];
}

// (Te, e')_dst = (e, T*e')_src on all basis pairs.
bool right_adjoint_property(const QMatrix& t, const Form& src, const Form& dst) {
  QMatrix ts = right_adjoint(t, src, dst);
  for (std::size_t a = 0; a < src.dim(); ++a)
    for (std::size_t b = 0; b < dst.dim(); ++b) {
      QMatrix e(src.dim(), 1), f(dst.dim(), 1);
      e(a, 0) = 1;
      f(b, 0) = 1;
      if (dst.pair(t * e, f) != src.pair(e, ts * f)) return false;
    }
  return true;
}

bool exact_intertwiner(const RepPoint& a, const RepPoint& b) {
  auto g = intertwiner(a, b);
  return g && act_gv(*g, a) == b;
}

std::optional<RepPoint> stable_zero_point(const IntVec& v, const IntVec& w, Rng& rng) {
  return random_stable_point(Graph::type_a(v.size()), v, w, QVec(v.size(), 0), 1, rng);
}

InvolutionConfig alternating_config(const IntVec& v, const IntVec& w, Rng& rng) {
  InvolutionConfig cfg;
  std::vector<int> dv = alternating(v.size(), 1), dw = alternating(v.size(), -1);
  cfg.forms_v = random_equivalent_grading(standard_grading(v, dv), rng);
  cfg.forms_w = random_equivalent_grading(standard_grading(w, dw), rng);
  return cfg;
}

bool both_sides_valid(const IntVec& v, const IntVec& w) {
  try {
    slice_labels(v, w);
    slice_labels(IntVec(v.rbegin(), v.rend()), IntVec(w.rbegin(), w.rend()));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Independent scan over v^2 for two-block models.
std::set<ModelDecomp> brute_force_models(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& v,
                                         const IntVec& w1, const IntVec& w2) {
  std::set<ModelDecomp> out;
  const std::size_t n = v.size();
  IntVec v2(n, 0);
  while (true) {
    IntVec d2 = permute(a, weyl_star_word(g, omega, v2, w2));
    IntVec v1(n);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      v1[k] = v[k] - v2[k] - d2[k];
      if (v1[k] < 0 || d2[k] < 0) ok = false;
    }
    if (ok && permute(a, weyl_star_word(g, omega, v1, w1)) == v1) out.insert(ModelDecomp{{v1, v2}});
    std::size_t k = 0;
    while (k < n && v2[k] == v[k]) v2[k++] = 0;
    if (k == n) break;
    ++v2[k];
  }
  return out;
}

}  // namespace

Caps Caps::small() {
  Caps c;
  c.max_rank = 3;
  c.max_dim = 2;
  c.partition_rank = 3;
  c.max_weight = 40;
  c.samples = 20;
  c.adjoint_instances = 100;
  return c;
}

Caps Caps::parse(const std::string& spec) {
  if (spec.empty() || spec == "full") return full();
  if (spec == "small") return small();
  Caps c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("caps: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    long val = 0;
    try {
      std::size_t used = 0;
      val = std::stol(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("caps: bad value in '" + item + "'");
    }
    if (val <= 0) throw std::invalid_argument("caps: values must be positive, got '" + item + "'");
    auto u = static_cast<std::size_t>(val);
    if (key == "rank")
      c.max_rank = u;
    else if (key == "dim")
      c.max_dim = val;
    else if (key == "prank")
      c.partition_rank = u;
    else if (key == "weight")
      c.max_weight = val;
    else if (key == "samples")
      c.samples = u;
    else if (key == "adjoint")
      c.adjoint_instances = u;
    else
      throw std::invalid_argument("caps: unknown key '" + key + "'");
  }
  return c;
}

std::string Caps::str() const {
  std::ostringstream os;
  os << "rank=" << max_rank << ",dim=" << max_dim << ",prank=" << partition_rank << ",weight=" << max_weight
     << ",samples=" << samples << ",adjoint=" << adjoint_instances;
  return os.str();
}

bool SuiteReport::checks_ok() const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.informational) continue;
    if (!c.ok()) return false;
    any = true;
  }
  return any;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weyl",   "adjoint",    "tau",    "reflection", "zw",
                                              "maffei", "partitions", "models", "kmatrix",    "invariance"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteReport run_weyl(unsigned long long seed, const Caps& caps) {
  Battery b("weyl", 1, 5.0, seed);
  const long e = caps.max_dim;
  for (std::size_t n = 1; n <= caps.max_rank; ++n) {
    b.guard("setup", [&] {
      Graph g = Graph::type_a(n);
      const IntMatrix& c = g.cartan();
      const WeylWord w0 = longest_element(g).word;
      const std::string tag = "A" + std::to_string(n) + " ";

      for_each_box(n, -e, e, [&](const IntVec& xi) {
        for (std::size_t i = 0; i < n; ++i)
          b.expect("linear: s_i^2 = 1", weyl_reflect(g, i, weyl_reflect(g, i, xi)) == xi, tag + vec_str(xi));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            if (c[i][j] == -1)
              b.expect("linear: braid", weyl_word(g, {i, j, i}, xi) == weyl_word(g, {j, i, j}, xi), tag + vec_str(xi));
            else if (c[i][j] == 0)
              b.expect("linear: commutation", weyl_word(g, {i, j}, xi) == weyl_word(g, {j, i}, xi), tag + vec_str(xi));
          }
      });

      for_each_box(n, 0, e, [&](const IntVec& w) {
        bool at_one = true;
        for (std::size_t k = 1; k < n; ++k) at_one = at_one && w[k] == 0;
        const IntVec cw = w;
        for_each_box(n, 0, e, [&](const IntVec& v) {
          const std::string where = tag + "v=" + vec_str(v) + " w=" + vec_str(w);
          const IntVec cv = cartan_apply(g, v);
          for (std::size_t i = 0; i < n; ++i) {
            IntVec s = weyl_star(g, i, v, w);
            b.expect("star: s_i^2 = 1", weyl_star(g, i, s, w) == v, where);
            IntVec lhs = cartan_apply(g, s);
            IntVec rhs = cv;
            for (std::size_t k = 0; k < n; ++k) rhs[k] -= cw[k];
            rhs = weyl_reflect(g, i, rhs);
            for (std::size_t k = 0; k < n; ++k) rhs[k] += cw[k];
            b.expect("C(s_i * v) = s_i(Cv - w) + w", lhs == rhs, where);
          }
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
              if (c[i][j] == -1)
                b.expect("star: braid", weyl_star_word(g, {i, j, i}, v, w) == weyl_star_word(g, {j, i, j}, v, w), where);
              else if (c[i][j] == 0)
                b.expect("star: commutation", weyl_star_word(g, {i, j}, v, w) == weyl_star_word(g, {j, i}, v, w), where);
            }
          if (at_one) {
            IntVec expect(n);
            for (std::size_t i = 0; i < n; ++i) expect[i] = w[0] - v[n - 1 - i];
            b.expect("w0 * v = w_1 - v_{n+1-i}", weyl_star_word(g, w0, v, w) == expect, where);
          }
        });
      });
    });
  }
  return b.finish();
}

SuiteReport run_adjoint(unsigned long long seed, const Caps& caps) {
  Battery b("adjoint", 2, 5.0, seed);
  Rng& rng = b.rng();
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t t = 0; t < caps.adjoint_instances; ++t) {
    b.guard("instance", [&] {
      auto sign = [&] { return coin(rng) ? 1 : -1; };
      auto dim = [&] { return std::size_t{2} + 2 * static_cast<std::size_t>(coin(rng)); };
      int d1 = sign(), d2 = sign(), d3 = sign();
      Form f1 = random_form(rng, dim(), d1), f2 = random_form(rng, dim(), d2), f3 = random_form(rng, dim(), d3);
      QMatrix a = random_matrix(rng, f2.dim(), f1.dim()), c = random_matrix(rng, f3.dim(), f2.dim());
      const std::string where = "instance " + std::to_string(t);
      b.expect("(Te, e') = (e, T*e')", right_adjoint_property(a, f1, f2), where);
      b.expect("(T'T)* = T* T'*", right_adjoint(c * a, f1, f3) == right_adjoint(a, f1, f2) * right_adjoint(c, f2, f3),
               where);
      b.expect("(T*)* = delta delta' T", right_adjoint(right_adjoint(a, f1, f2), f2, f1) == Q(d1 * d2) * a, where);
      b.expect("left(right(T)) = T", left_adjoint(right_adjoint(a, f1, f2), f2, f1) == a, where);
      b.expect("right(left(T)) = T", right_adjoint(left_adjoint(a, f1, f2), f2, f1) == a, where);
    });
  }
  return b.finish();
}

SuiteReport run_tau(unsigned long long seed, const Caps& caps) {
  Battery b("tau", 3, 10.0, seed);
  Rng& rng = b.rng();
  const std::size_t reps = std::max<std::size_t>(1, caps.samples / 20);
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = Graph::type_a(n);
    const std::string tag = "A" + std::to_string(n);
    b.guard("moment map and symplectic form", [&] {
      auto delta = alternating(n, -1);
      IntVec w = w_for(delta, 1), v(n, 2);
      for (std::size_t t = 0; t < reps; ++t) {
        RepPoint pt = random_point(g, v, w, rng);
        InvolutionConfig cfg = default_config(pt, delta);
        cfg.forms_v = random_equivalent_grading(cfg.forms_v, rng);
        auto mu = moment_map(pt);
        auto mt = moment_map(tau(pt, cfg.forms_v, cfg.forms_w));
        auto mh = moment_map(tau_hat(pt, cfg.forms_v, cfg.forms_w));
        for (std::size_t i = 0; i < n; ++i) {
          QMatrix star = right_adjoint(mu[i], cfg.forms_v[i], cfg.forms_v[i]);
          b.expect("mu(tau x) = -mu(x)*", mt[i] == -star, tag);
          b.expect("mu(tau-hat x) = mu(x)*", mh[i] == star, tag);
        }
        RepPoint other = random_point(g, v, w, rng);
        Q om = symplectic_pair(pt, other);
        b.expect("omega invariant under tau",
                 symplectic_pair(tau(pt, cfg.forms_v, cfg.forms_w), tau(other, cfg.forms_v, cfg.forms_w)) == om, tag);
        b.expect("omega anti-invariant under tau-hat",
                 symplectic_pair(tau_hat(pt, cfg.forms_v, cfg.forms_w), tau_hat(other, cfg.forms_v, cfg.forms_w)) ==
                     -om,
                 tag);
      }
    });
    b.guard("tau^2 = 1 on orbits (alternating signs)", [&] {
      auto delta = alternating(n, 1);
      IntVec w = w_for(delta, 1), v(n, 1);
      for (std::size_t t = 0; t < reps; ++t) {
        auto pt = random_stable_point(g, v, w, QVec(n, 0), 1, rng);
        if (!pt) {
          b.expect("tau^2 = 1 on orbits (alternating signs)", false, tag + ": no stable point sampled");
          continue;
        }
        InvolutionConfig cfg = default_config(*pt, delta);
        RepPoint tt = tau(tau(*pt, cfg.forms_v, cfg.forms_w), cfg.forms_v, cfg.forms_w);
        b.expect("tau^2 = 1 on orbits (alternating signs)", exact_intertwiner(tt, *pt), tag);
      }
    });
    b.guard("tau-hat^2 = 1 on orbits (uniform signs)", [&] {
      std::vector<int> uniform(n, -1);
      IntVec wu(n, 2), v(n, 1);
      for (std::size_t t = 0; t < reps; ++t) {
        auto pu = random_stable_point(g, v, wu, QVec(n, 0), 1, rng);
        if (!pu) {
          b.expect("tau-hat^2 = 1 on orbits (uniform signs)", false, tag + ": no stable point sampled");
          continue;
        }
        InvolutionConfig cu = default_config(*pu, uniform, TauMode::tau_hat);
        RepPoint tt = tau_hat(tau_hat(*pu, cu.forms_v, cu.forms_w), cu.forms_v, cu.forms_w);
        b.expect("tau-hat^2 = 1 on orbits (uniform signs)", exact_intertwiner(tt, *pu), tag);
      }
    });
    b.guard("form independence", [&] {
      auto delta = alternating(n, -1);
      IntVec w = w_for(delta, 1), v(n, 1);
      v[0] = 2;
      for (std::size_t t = 0; t < reps; ++t) {
        auto pt = random_stable_point(g, v, w, QVec(n, 0), 1, rng);
        if (!pt) {
          b.expect("form independence", false, tag + ": no stable point sampled");
          continue;
        }
        InvolutionConfig cfg = default_config(*pt, delta);
        FormedGrading other = random_equivalent_grading(cfg.forms_v, rng);
        for (std::size_t i = 0; i < n; ++i) other[i] = Form(other[i].gram());
        b.expect("form independence",
                 exact_intertwiner(tau(*pt, cfg.forms_v, cfg.forms_w), tau(*pt, other, cfg.forms_w)), tag);
      }
    });
  }
  return b.finish();
}

SuiteReport run_reflection(unsigned long long seed, const Caps& caps) {
  Battery b("reflection", 4, 20.0, seed);
  Rng& rng = b.rng();
  const std::size_t reps = std::max<std::size_t>(1, caps.samples / 25);
  for (std::size_t n = 1; n <= 3; ++n) {
    b.guard("certificates", [&] {
      Graph g = Graph::type_a(n);
      const std::string tag = "A" + std::to_string(n);
      IntVec v(n, 1), w(n, 1);
      v[0] = 2;
      w[0] = 2;
      QVec zc(n);
      for (std::size_t i = 0; i < n; ++i) zc[i] = Q(static_cast<long>(i + 1)) / 2;
      Parameter zeta{IntVec(n, 1), zc};
      for (std::size_t t = 0; t < reps; ++t) {
        auto pt = random_lambda_point(g, v, w, zc, rng);
        if (!pt) {
          b.expect("certificates", false, tag + ": no point sampled");
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          auto r = reflect_point(*pt, i, zeta);
          auto rep = check_reflection(*pt, i, zeta, r);
          b.expect("certificates", rep.ok(), tag + " " + rep.str());
          b.expect("dims = s_i * v", r.point.v == weyl_star(g, i, v, w), tag);
          auto back = reflect_point(r.point, i, r.zeta);
          b.expect("certificates", check_reflection(r.point, i, r.zeta, back).ok(), tag);
          b.expect("S_i^2 = 1 on orbits", exact_intertwiner(back.point, *pt), tag);
        }
      }
      for (int sign : {1, -1}) {
        IntVec vs(n, 1), ws(n, 1);
        ws[0] = 2;
        auto pt = random_stable_point(g, vs, ws, QVec(n, 0), sign, rng);
        if (!pt) {
          b.expect("certificates", false, tag + ": no stable point sampled");
          continue;
        }
        Parameter z0{IntVec(n, sign), QVec(n, 0)};
        for (std::size_t i = 0; i < n; ++i) {
          auto r = reflect_point(*pt, i, z0);
          b.expect("certificates", check_reflection(*pt, i, z0, r).ok(), tag + " zeta_c = 0");
          b.expect("dims = s_i * v", r.point.v == weyl_star(g, i, vs, ws), tag);
          b.expect("S_i^2 = 1 on orbits", exact_intertwiner(reflect_point(r.point, i, r.zeta).point, *pt), tag);
        }
      }
    });
  }
  b.guard("tau commutes with reflection", [&] {
    Graph a3 = Graph::type_a(3);
    IntVec v{1, 2, 1}, w{2, 1, 2};
    QVec zc{1, 2, -1};
    Parameter zeta{IntVec{1, 1, 1}, zc};
    for (std::size_t t = 0; t < reps; ++t) {
      auto pt = random_lambda_point(a3, v, w, zc, rng);
      if (!pt) {
        b.expect("tau commutes with reflection", false, "no point sampled");
        continue;
      }
      InvolutionConfig cfg = default_config(*pt, {-1, 1, -1});
      for (std::size_t i = 0; i < 3; ++i) {
        auto r = reflect_point(*pt, i, zeta);
        b.expect("certificates", check_reflection(*pt, i, zeta, r).ok(), "A3 tau square");
        RepPoint lhs = tau(r.point, standard_grading(r.point.v, {1, 1, 1}), cfg.forms_w);
        RepPoint rhs = reflect_point(tau(*pt, cfg.forms_v, cfg.forms_w), i, tau_parameter(zeta, TauMode::tau)).point;
        b.expect("tau commutes with reflection", exact_intertwiner(lhs, rhs), "vertex " + std::to_string(i));
      }
    }
  });
  b.guard("diagram automorphism commutes with reflection", [&] {
    Graph a3 = Graph::type_a(3);
    DiagramAuto flip = DiagramAuto::from_vertex_perm(a3, {2, 1, 0});
    IntVec v{1, 2, 1}, w{1, 1, 1};
    QVec zc{2, 1, -3};
    Parameter zeta{IntVec{1, 1, 1}, zc};
    for (std::size_t t = 0; t < reps; ++t) {
      auto pt = random_lambda_point(a3, v, w, zc, rng);
      if (!pt) {
        b.expect("diagram automorphism commutes with reflection", false, "no point sampled");
        continue;
      }
      for (std::size_t i = 0; i < 3; ++i) {
        RepPoint lhs = diagram_apply(flip, reflect_point(*pt, i, zeta).point);
        RepPoint rhs =
            reflect_point(diagram_apply(flip, *pt), flip.vertex_perm[i], permute_parameter(flip, zeta)).point;
        b.expect("diagram automorphism commutes with reflection", exact_intertwiner(lhs, rhs),
                 "vertex " + std::to_string(i));
      }
    }
  });
  b.guard("braid relation on orbits", [&] {
    Graph a2 = Graph::type_a(2);
    QVec zc{1, 3};
    Parameter zeta{IntVec{1, 1}, zc};
    for (std::size_t t = 0; t < reps; ++t) {
      auto pt = random_lambda_point(a2, {1, 2}, {2, 1}, zc, rng);
      if (!pt) {
        b.expect("braid relation on orbits", false, "no point sampled");
        continue;
      }
      auto x = reflect_word(*pt, {0, 1, 0}, zeta), y = reflect_word(*pt, {1, 0, 1}, zeta);
      b.expect("braid relation on orbits", parameter_equal(x.zeta, y.zeta) && exact_intertwiner(x.point, y.point));
    }
  });
  return b.finish();
}

SuiteReport run_zw(unsigned long long seed, const Caps& caps) {
  Battery b("zw", 5, 20.0, seed);
  Rng& rng = b.rng();
  const std::size_t reps = std::max<std::size_t>(1, caps.samples / 50);
  const std::string rel = "relations after every transform";
  b.guard(rel, [&] {
    Graph a2 = Graph::type_a(2);
    QVec zc{Q(1), Q(-2)};
    for (std::size_t t = 0; t < reps; ++t) {
      auto pt = random_lambda_point(a2, {2, 1}, {2, 2}, zc, rng);
      if (!pt) {
        b.expect(rel, false, "no point sampled");
        continue;
      }
      auto pe = eval_from_point(*pt, zc, 6);
      b.expect(rel, satisfies_relations(pe), "eval");
      for (int delta : {1, -1}) {
        FormedGrading fw = random_equivalent_grading(standard_grading(pt->w, {delta, delta}), rng);
        b.expect(rel, satisfies_relations(tau0(pe, fw)), "tau0");
      }
      for (std::size_t i = 0; i < 2; ++i) b.expect(rel, satisfies_relations(lusztig_reflect(pe, i)), "reflect");
      b.expect(rel, satisfies_relations(lusztig_reflect_word(pe, longest_element(a2).word)), "w0");
      b.expect(rel, satisfies_relations(act_gw(random_group_elem(pt->w, rng), pe)), "G_w");
      DiagramAuto swap = DiagramAuto::from_vertex_perm(a2, {1, 0});
      b.expect(rel, satisfies_relations(theta_a(pe, swap)), "theta_a");
    }
    Graph a3 = Graph::type_a(3);
    QVec z3{Q(1), Q(2), Q(1)};
    auto p3 = random_lambda_point(a3, {1, 1, 1}, {1, 0, 1}, z3, rng);
    if (!p3) {
      b.expect(rel, false, "no A3 point sampled");
      return;
    }
    auto pe3 = eval_from_point(*p3, z3, 6);
    DiagramAuto flip = DiagramAuto::from_vertex_perm(a3, {2, 1, 0});
    b.expect(rel, satisfies_relations(theta_a(pe3, flip)), "theta_a A3");
    b.expect("theta_a matches the point-level automorphism",
             theta_a(pe3, flip) == eval_from_point(diagram_apply(flip, *p3), permute(flip, z3), 6));
    for (std::size_t i = 0; i < 3; ++i) b.expect(rel, satisfies_relations(lusztig_reflect(pe3, i)), "reflect A3");
  });
  b.guard("zeta = 0 Lusztig functor is the identity", [&] {
    for (std::size_t n : {2, 3}) {
      IntVec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<long>(n - k);
      RepPoint pt = random_flag_point(n, v, static_cast<long>(n) + 1, rng);
      auto pe = eval_from_point(pt, QVec(n, 0), 6);
      for (std::size_t i = 0; i < n; ++i)
        b.expect("zeta = 0 Lusztig functor is the identity", lusztig_reflect(pe, i) == pe, "A" + std::to_string(n));
      b.expect("zeta = 0 Lusztig functor is the identity",
               lusztig_reflect_word(pe, longest_element(pt.graph).word) == pe);
    }
  });
  b.guard("point and path reflections agree", [&] {
    Graph a2 = Graph::type_a(2);
    QVec zc{Q(1, 3), Q(2, 3)};
    for (std::size_t t = 0; t < 2 * reps; ++t) {
      auto pt = random_lambda_point(a2, {2, 1}, {2, 1}, zc, rng);
      if (!pt) {
        b.expect("point and path reflections agree", false, "no point sampled");
        continue;
      }
      auto pe = eval_from_point(*pt, zc, 6);
      for (std::size_t i = 0; i < 2; ++i) {
        auto r = reflect_point(*pt, i, Parameter{IntVec{1, 1}, zc});
        auto lhs = lusztig_reflect(pe, i);
        b.expect("point and path reflections agree",
                 lhs.zeta_c == r.zeta.zeta_c && lhs == eval_from_point(r.point, r.zeta.zeta_c, 6),
                 "vertex " + std::to_string(i));
      }
      b.expect("Lusztig braid relation", lusztig_reflect_word(pe, {0, 1, 0}) == lusztig_reflect_word(pe, {1, 0, 1}));
    }
  });
  b.guard("tau0 matches tau on points", [&] {
    Graph a2 = Graph::type_a(2);
    QVec zc{Q(1, 2), Q(3)};
    for (int delta : {1, -1}) {
      auto pt = random_lambda_point(a2, {2, 1}, {2, 2}, zc, rng);
      if (!pt) {
        b.expect("tau0 matches tau on points", false, "no point sampled");
        continue;
      }
      InvolutionConfig cfg = default_config(*pt, {delta, delta});
      cfg.forms_w = random_equivalent_grading(cfg.forms_w, rng);
      auto lhs = tau0(eval_from_point(*pt, zc, 6), cfg.forms_w);
      auto rhs = eval_from_point(apply_tau(*pt, cfg), QVec{-zc[0], -zc[1]}, 6);
      b.expect("tau0 matches tau on points", lhs == rhs, "delta " + std::to_string(delta));
    }
  });
  return b.finish();
}

SuiteReport run_maffei(unsigned long long seed, const Caps& caps) {
  Battery b("maffei", 6, 30.0, seed);
  Rng& rng = b.rng();
  const std::size_t reps = std::max<std::size_t>(1, caps.samples / 35);
  struct Case {
    IntVec v, w;
  };
  for (const Case& c : {Case{{1, 2, 1}, {1, 1, 1}}, Case{{1, 1}, {1, 1}}, Case{{1, 1, 1}, {0, 1, 1}},
                        Case{{2, 2}, {1, 2}}}) {
    b.guard("transversality certificate", [&] {
      const std::string tag = "v=" + vec_str(c.v) + " w=" + vec_str(c.w);
      SliceLabel lab = slice_labels(c.v, c.w);
      Sl2Pair s = maffei_sl2(c.w, 0);
      for (std::size_t t = 0; t < reps; ++t) {
        auto pt = stable_zero_point(c.v, c.w, rng);
        if (!pt) {
          b.expect("transversality certificate", false, tag + ": no stable point sampled");
          continue;
        }
        BigPoint bp = phi_embed(*pt);
        auto tr = is_transversal(bp);
        b.expect("transversality certificate", tr.ok(), tag + " " + tr.str());
        b.expect("mu(Phi(x)) = 0", in_lambda(bp.point, QVec(c.v.size(), 0)), tag);
        QMatrix x = bp.flag_nilpotent();
        b.expect("flag matrix lies on the slice", slice_membership(x, s.e, s.f), tag);
        Partition jt = jordan_type(x);
        b.expect("lambda <= type <= mu'", dominates(lab.mu_prime, jt) && dominates(jt, lab.lambda), tag);
      }
    });
  }
  b.guard("Phi = id for w at vertex 1", [&] {
    for (const Case& c : {Case{{2, 1}, {3, 0}}, Case{{1}, {2}}, Case{{2, 1, 1}, {3, 0, 0}}}) {
      auto pt = stable_zero_point(c.v, c.w, rng);
      if (!pt) {
        b.expect("Phi = id for w at vertex 1", false, "no stable point sampled");
        continue;
      }
      b.expect("Phi = id for w at vertex 1", phi_embed(*pt).point == *pt, "v=" + vec_str(c.v));
    }
  });
  b.guard("Jordan type of Phi(0)", [&] {
    struct Fixture {
      IntVec v, w;
      Partition lambda;
    };
    for (const Fixture& f : {Fixture{{1, 2, 2, 3, 2, 1}, {0, 1, 0, 1, 0, 0}, Partition({4, 2})},
                             Fixture{{1, 1}, {0, 1}, Partition({2})},
                             Fixture{{0, 0, 0}, {1, 1, 1}, Partition({3, 2, 1})}}) {
      BigPoint bp = phi_embed(RepPoint::zero(Graph::type_a(f.v.size()), f.v, f.w));
      Partition jt = jordan_type(bp.flag_nilpotent());
      b.expect("Jordan type of Phi(0)", jt == f.lambda && jt == slice_labels(f.v, f.w).lambda,
               "v=" + vec_str(f.v) + " got " + jt.str());
    }
  });
  b.guard("adjoint table", [&] {
    IntVec v{2, 2, 2}, w{2, 2, 2};
    for (int first : {1, -1}) {
      FormedGrading fw = random_equivalent_grading(standard_grading(w, alternating(3, first)), rng);
      FormedGrading fv = random_equivalent_grading(standard_grading(v, alternating(3, -first)), rng);
      auto forms = tilde_form(v, w, fv, fw, TildeFormVariant::angle);
      for (std::size_t t = 0; t < reps; ++t) {
        auto pt = stable_zero_point(v, w, rng);
        if (!pt) {
          b.expect("adjoint table", false, "no stable point sampled");
          continue;
        }
        BigPoint bp = phi_embed(*pt);
        auto defects = x_natural_defects(bp, fv, fw);
        b.expect("adjoint table", defects.empty(), defects.empty() ? "" : defects.front());
        b.expect("Phi tau = tau~ Phi", phi_embed(tau(*pt, fv, fw)).point == big_transpose(bp, forms, true).point);
      }
    }
  });
  b.guard("Phi tau-hat = tau-hat~ Phi", [&] {
    IntVec v{1, 1}, w{2, 2};
    for (int delta : {1, -1}) {
      FormedGrading fw = random_equivalent_grading(standard_grading(w, {delta, delta}), rng);
      FormedGrading fv = standard_grading(v, {1, 1});
      auto forms = tilde_form(v, w, fv, fw, TildeFormVariant::brace);
      auto pt = stable_zero_point(v, w, rng);
      if (!pt) {
        b.expect("Phi tau-hat = tau-hat~ Phi", false, "no stable point sampled");
        continue;
      }
      b.expect("Phi tau-hat = tau-hat~ Phi",
               phi_embed(tau_hat(*pt, fv, fw)).point == big_transpose(phi_embed(*pt), forms, false).point);
    }
  });
  return b.finish();
}

SuiteReport run_partitions(unsigned long long seed, const Caps& caps) {
  Battery b("partitions", 7, 60.0, seed);
  b.guard("two-row example", [&] {
    auto r = rect_symmetry({1, 2, 2, 3, 2, 1}, {0, 1, 0, 1, 0, 0}, caps.max_weight);
    b.expect("two-row example", r.labels.mu_prime == Partition({6}), "mu' = " + r.labels.mu_prime.str());
    b.expect("two-row example", r.labels.lambda == Partition({4, 2}), "lambda = " + r.labels.lambda.str());
    b.expect("two-row example", r.hat_labels.mu_prime == Partition({7, 1}), "mu^' = " + r.hat_labels.mu_prime.str());
    b.expect("two-row example", r.hat_labels.lambda == Partition({5, 3}), "lambda^ = " + r.hat_labels.lambda.str());
  });
  const long wcap = 2, vcap = std::min<long>(3, caps.max_dim);
  std::size_t grid_points = 0, over_cap = 0;
  for (std::size_t n = 1; n <= caps.partition_rank; ++n) {
    b.guard("grid", [&] {
      for_each_box(n, 0, wcap, [&](const IntVec& w) {
        for_each_box(n, 0, vcap, [&](const IntVec& v) {
          if (!both_sides_valid(v, w)) return;
          const std::string where = "v=" + vec_str(v) + " w=" + vec_str(w);
          RectSymmetry r;
          try {
            r = rect_symmetry(v, w, caps.max_weight);
          } catch (const std::length_error&) {
            ++over_cap;
            return;
          }
          ++grid_points;
          b.expect("mu_i + mu^_{n-i+2} = sum w", r.mu_hat_ok, where);
          b.expect("mu^' from the exponents of mu'", r.mu_prime_hat_ok, where);
          b.expect("labels fit the (n+1) x sum w rectangle", r.fits_rectangle, where);
          b.expect("Kostka identity", r.kostka_ok, where);
          b.expect("column removal", column_removal(v, w).consistent, where);
          for (long a = 0; a <= 2; ++a) b.expect("row addition", row_addition(v, w, a).consistent, where);
        });
      });
    });
  }
  b.info("grid points checked: " + std::to_string(grid_points), grid_points > 0);
  if (over_cap > 0) b.info("grid points above the weight cap: " + std::to_string(over_cap), true);
  return b.finish();
}

SuiteReport run_models(unsigned long long seed, const Caps& caps) {
  Battery b("models", 8, 5.0, seed);
  (void)caps;
  b.guard("A1 enumeration", [&] {
    Graph g = Graph::type_a(1);
    auto m = enumerate_models(g, DiagramAuto::identity(g), longest_element(g).word, {1}, {0}, {1});
    b.expect("A1 enumeration", m.size() == 2, std::to_string(m.size()) + " decompositions");
  });
  for (std::size_t n = 1; n <= 3; ++n) {
    b.guard("brute force completeness", [&] {
      Graph g = Graph::type_a(n);
      LongestElement le = longest_element(g);
      std::vector<DiagramAuto> autos{DiagramAuto::identity(g)};
      if (n > 1) autos.push_back(DiagramAuto::from_vertex_perm(g, le.theta));
      for (const DiagramAuto& a : autos)
        for_each_box(n, 0, 1, [&](const IntVec& w2) {
          for_each_box(n, 0, 2, [&](const IntVec& w1) {
            IntVec w = w1;
            for (std::size_t k = 0; k < n; ++k) w[k] += 2 * w2[k];
            if (permute(a, w1) != w1 || permute(a, w) != w) return;
            for_each_box(n, 0, 2, [&](const IntVec& v) {
              auto m = enumerate_models(g, a, le.word, v, w1, w2);
              auto bf = brute_force_models(g, a, le.word, v, w1, w2);
              b.expect("brute force completeness", std::set<ModelDecomp>(m.begin(), m.end()) == bf,
                       "v=" + vec_str(v) + " w1=" + vec_str(w1) + " w2=" + vec_str(w2));
            });
          });
        });
    });
  }
  b.guard("rank 2 chambers", [&] {
    Rank2Chambers r = rank2_chambers();
    b.expect("4 walls", r.walls.size() == 4);
    b.expect("8 chambers", r.chambers.size() == 8);
    std::size_t c = r.locate(1, 2);
    auto cross = r.crossings(c, r.opposite(c));
    int k = 0, rr = 0;
    for (std::size_t w : cross) (r.walls[w].kind == WallKind::K ? k : rr)++;
    b.expect("half turn crosses 2 K-walls and 2 R-walls", cross.size() == 4 && k == 2 && rr == 2);
  });
  return b.finish();
}

SuiteReport run_kmatrix(unsigned long long seed, const Caps& caps) {
  Battery b("kmatrix", 9, 60.0, seed);
  (void)caps;
  b.guard("battery", [&] {
    for (const IdentityCheck& c : kmatrix_battery()) {
      if (c.informational)
        b.info(c.name, c.ok, c.ok ? "" : "identity does not hold");
      else
        b.expect(c.name, c.ok, "identity does not hold");
    }
  });
  return b.finish();
}

SuiteReport run_invariance(unsigned long long seed, const Caps& caps) {
  Battery b("invariance", 10, 10.0, seed);
  Rng& rng = b.rng();
  for (std::size_t n = 1; n <= 3; ++n) {
    b.guard("generators invariant under isometries", [&] {
      Graph g = Graph::type_a(n);
      IntVec v(n, 2), w(n, 2);
      const std::string tag = "A" + std::to_string(n);
      InvolutionConfig cfg = alternating_config(v, w, rng);
      RepPoint pt = random_tau_fixed_point(g, v, w, cfg, rng);
      b.expect("fixture is tau-fixed", is_tau_fixed(pt, cfg), tag);
      auto rep = check_invariance(pt, cfg, caps.samples, rng());
      b.expect("generators invariant under isometries", rep.ok() && rep.samples == caps.samples && rep.generators > 0,
               rep.ok() ? tag : tag + ": " + rep.violations.front());
      auto neg = check_invariance_with(pt, cfg, {}, {random_group_elem(w, rng)});
      bool moved = false;
      for (const auto& s : neg.violations) moved = moved || s.find("changed") != std::string::npos;
      b.expect("negative control fails", !neg.ok() && moved, tag);
    });
  }
  return b.finish();
}

SuiteReport run_suite(const std::string& name, unsigned long long seed, const Caps& caps) {
  using Fn = SuiteReport (*)(unsigned long long, const Caps&);
  static const std::map<std::string, Fn> table{
      {"weyl", run_weyl},     {"adjoint", run_adjoint},       {"tau", run_tau},       {"reflection", run_reflection},
      {"zw", run_zw},         {"maffei", run_maffei},         {"partitions", run_partitions},
      {"models", run_models}, {"kmatrix", run_kmatrix},       {"invariance", run_invariance}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(seed, caps);
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, unsigned long long seed, const Caps& caps) {
  for (const auto& n : names)
    if (!is_suite(n)) throw std::invalid_argument("unknown suite: " + n);
  hbar();
  std::vector<SuiteReport> out(names.size());
  const long count = static_cast<long>(names.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = run_suite(names[static_cast<std::size_t>(k)], seed, caps);
  return out;
}

std::string format_text(const SuiteReport& r, bool timings) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "suite " << r.name << " (criterion " << r.criterion << ", seed " << r.seed << ")";
  if (timings) os << ": " << r.seconds << " s, limit " << r.time_limit << " s";
  os << "\n";
  for (const auto& c : r.checks) {
    const char* tag = c.informational ? "INFO" : (c.ok() ? "PASS" : "FAIL");
    os << "  " << tag << "  " << c.name << "  [" << c.passed << "/" << c.total << "]";
    if (!c.first_failure.empty() && !c.ok()) os << "  first failure: " << c.first_failure;
    os << "\n";
  }
  if (!r.in_time()) os << "  FAIL  time limit exceeded\n";
  os << "  verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace sqv
