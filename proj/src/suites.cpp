#include "nhq/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nhq/error.hpp"
#include "nhq/format.hpp"
#include "nhq/random.hpp"

namespace nhq {

QuiverPtr builtin_quiver(const std::string& name) {
  static const std::map<std::string, std::string> sources = {
      {"jordan", R"({"vertices":["v"],"arrows":[{"name":"x","from":"v","to":"v"}]})"},
      {"a2", R"({"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]})"},
      {"a3p", R"({"vertices":["0","1","2","inf"],"arrows":[{"name":"a0","from":"0","to":"1"},)"
              R"({"name":"a1","from":"1","to":"2"},{"name":"a2","from":"2","to":"0"},)"
              R"({"name":"p","from":"inf","to":"0"}]})"},
  };
  auto it = sources.find(name);
  if (it == sources.end()) throw Error("unknown builtin quiver '" + name + "'");
  return parse_quiver(it->second);
}

namespace {

/// A failed case returns its residual text.
using Outcome = std::optional<std::string>;

struct Case {
  Rng& rng;
  const SuiteConfig& config;
  SuiteResult& result;
  std::size_t index;

  QuiverPtr quiver(std::size_t max_arrows = 4) {
    if (config.quiver) return config.quiver;
    return random_quiver(rng, 3, max_arrows);
  }

  RepSpacePtr space(const QuiverPtr& q) {
    if (config.dims && config.quiver) return make_repspace(q, *config.dims);
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) d.push_back(1 + rng.below(2));
    return make_repspace(q, d);
  }

  std::vector<Rational> rvec(const Quiver& q) {
    if (!config.r.empty()) {
      std::vector<Rational> out(q.num_vertices(), Rational(0));
      for (std::size_t v = 0; v < out.size() && v < config.r.size(); ++v) out[v] = config.r[v];
      return out;
    }
    std::vector<Rational> out;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      Rational k(rng.between(-6, 6), 1 + rng.below(3));
      k.canonicalize();
      out.push_back(k);
    }
    return out;
  }
};

template <class E>
Outcome compare(const E& lhs, const E& rhs) {
  if (lhs == rhs) return std::nullopt;
  return format(lhs - rhs);
}

Outcome dirac(Case& c) {
  auto q = c.quiver();
  auto nx = necklace_element(q, random_necklace(*q, c.rng, 5));
  auto ny = necklace_element(q, random_necklace(*q, c.rng, 5));
  QPAElement comm = qpa_comm(lift(nx), lift(ny));
  for (const auto& [k, coeff] : comm.terms()) {
    if (coeff.constant_term() != 0) return "commutator not divisible by h: " + format(comm);
  }
  SymElement lhs(q);
  SymElement pc = project(comm);
  for (const auto& [k, coeff] : pc.terms()) lhs.add(k, HBarPolynomial(-coeff.divided_by_hbar().constant_term()));
  return compare(lhs, sym_element(necklace_bracket(nx, ny)));
}

Outcome pbw(Case& c) {
  auto q = c.quiver();
  auto m = random_sym(q, c.rng, 3, 3, 4);
  return compare(project(lift(m)), m);
}

Outcome confluence(Case& c) {
  auto q = c.quiver();
  auto cfg = random_configuration(*q, c.rng, 8);
  Straightener lo(q, {RewriteStrategy::lowest_first, 0, true});
  Straightener hi(q, {RewriteStrategy::highest_first, 0, true});
  Straightener rnd(q, {RewriteStrategy::random, c.rng.next(), true});
  auto a = lo.straighten(cfg);
  if (auto o = compare(a, hi.straighten(cfg))) return "highest-first differs: " + *o;
  if (auto o = compare(a, rnd.straighten(cfg))) return "random order differs: " + *o;
  std::size_t v = lo.stats().measure_violations + hi.stats().measure_violations + rnd.stats().measure_violations;
  if (v) return std::to_string(v) + " rewrites did not decrease the termination measure";
  for (const auto& [k, coeff] : a.terms()) {
    if (!is_canonical(*q, k)) return "non-canonical term " + format(*q, k);
  }
  return std::nullopt;
}

Outcome associativity(Case& c) {
  auto q = c.quiver();
  auto x = lift(random_sym(q, c.rng, 2, 2, 4));
  auto y = lift(random_sym(q, c.rng, 2, 2, 4));
  auto z = lift(random_sym(q, c.rng, 1, 2, 4));
  Straightener s(q);
  return compare(qpa_mul(qpa_mul(x, y, s), z, s), qpa_mul(x, qpa_mul(y, z, s), s));
}

Outcome lie(Case& c) {
  auto q = c.quiver();
  auto x = random_hh0(q, c.rng, 2, 5), y = random_hh0(q, c.rng, 2, 5), z = random_hh0(q, c.rng, 2, 5);
  if (auto o = compare(necklace_bracket(x, y), -necklace_bracket(y, x))) return "antisymmetry: " + *o;
  HH0Element jac = necklace_bracket(x, necklace_bracket(y, z)) + necklace_bracket(y, necklace_bracket(z, x)) +
                   necklace_bracket(z, necklace_bracket(x, y));
  if (!jac.is_zero()) return "Jacobi: " + format(jac);
  return std::nullopt;
}

Outcome trace_hom(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  auto x = lift(random_hh0(q, c.rng, 2, 4)), y = lift(random_hh0(q, c.rng, 2, 4));
  auto rep = verify_trace_homomorphism(r, x, y);
  if (rep.ok()) return std::nullopt;
  return rep.residual;
}

Outcome cubic(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  auto x = necklace_element(q, random_necklace(*q, c.rng, 4));
  auto y = necklace_element(q, random_necklace(*q, c.rng, 4));
  auto rep = verify_cubic(r, x, y);
  if (rep.ok()) return std::nullopt;
  return rep.residual;
}

Outcome quantum_moment_case(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  auto plain = verify_quantum_moment(r);
  if (!plain.ok()) return plain.residual;
  auto shifted = verify_quantum_moment(r, c.rvec(*q));
  if (!shifted.ok()) return "r-shifted: " + shifted.residual;
  return std::nullopt;
}

Outcome ideal(Case& c) {
  QuiverPtr q = c.config.quiver ? c.config.quiver : builtin_quiver(c.index % 2 ? "a2" : "jordan");
  auto r = c.space(q);
  ReductionParameters params{c.rvec(*q), c.config.lambda};
  std::size_t n = q->num_vertices();
  if (params.lambda.empty() && c.index % 4 >= 2 && n > 1) {
    Rational acc(0);
    for (std::size_t v = 0; v + 1 < n; ++v) {
      params.lambda.emplace_back(c.rng.between(-3, 3));
      acc += params.lambda.back() * Rational(r->dim(v));
    }
    params.lambda.push_back(-acc / Rational(r->dim(n - 1)));
  }
  auto sol = solve_chi(r, params);
  if (!sol.chi || !sol.unique) return "character: " + sol.report.text();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : closed_paths(*q, i, 3)) {
      auto d = decompose_ideal_image(r, p, i, params);
      WeylElement diff = d.expand(*sol.chi, params) - d.target;
      if (!diff.is_zero()) return "generator " + format(*q, p) + ": " + format(diff);
    }
  }
  Character predicted = chi_from_r(*r, params.r);
  if (sol.chi->c != predicted.c) {
    std::string text = "case " + std::to_string(c.index) + ": solved";
    for (const auto& k : sol.chi->c) text += " " + format(k);
    text += ", -D + r predicts";
    for (const auto& k : predicted.c) text += " " + format(k);
    c.result.report.notes.push_back(text);
  }
  return std::nullopt;
}

Outcome invariance(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  auto x = config_element(q, random_configuration(*q, c.rng, 6), 1);
  GlElement v(r);
  auto basis = gl_basis(*r);
  for (int k = 0; k < 3; ++k) v.add(basis[c.rng.below(basis.size())], Rational(c.rng.between(-3, 3)));
  WeylElement comm = weyl_comm(tau(v), trace_quantum(r, x));
  if (comm.is_zero()) return std::nullopt;
  return format(comm);
}

Outcome poisson_case(Case& c) {
  auto q = c.quiver(2);
  auto r = c.space(q);
  std::size_t n = r->num_slots();
  for (std::size_t a = 0; a < 2 * n; ++a) {
    auto f = a < n ? poly_position(r, a) : poly_momentum(r, a - n);
    for (std::size_t b = 0; b < 2 * n; ++b) {
      auto g = b < n ? poly_position(r, b) : poly_momentum(r, b - n);
      if (auto o = compare(poisson(f, g), poisson_via_double_bracket(f, g))) return "{" + format(f) + ", " + format(g) + "}: " + *o;
    }
  }
  return std::nullopt;
}

Outcome gauge(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  std::size_t n = r->num_slots();
  for (const auto& e : gl_basis(*r)) {
    WeylElement op = tau(GlElement(r, GlIndex{e.vertex, e.q, e.p}));
    for (std::size_t s = 0; s < 2 * n; ++s) {
      auto f = s < n ? poly_position(r, s) : poly_momentum(r, s - n);
      WeylElement comm = weyl_comm(op, normal_quantization(f));
      WeylElement scaled(r);
      for (const auto& [m, k] : comm.terms()) scaled.add(m, k.divided_by_hbar());
      if (auto o = compare(gauge_act(e.vertex, e.p, e.q, f), classical_symbol(scaled))) return format(f) + ": " + *o;
    }
  }
  return std::nullopt;
}

Outcome classical_limit(Case& c) {
  auto q = c.quiver();
  auto r = c.space(q);
  auto h = random_hh0(q, c.rng, 2, 4);
  if (auto o = compare(classical_symbol(trace_quantum(r, lift(h))), trace_classical(r, h))) return "trace: " + *o;
  auto m1 = random_sym(q, c.rng, 2, 2, 3), m2 = random_sym(q, c.rng, 2, 2, 3);
  SymElement diff = project(qpa_mul(lift(m1), lift(m2))) - sym_mul(m1, m2);
  for (const auto& [k, coeff] : diff.terms()) {
    if (coeff.constant_term() != 0) return "product: " + format(diff);
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, std::function<Outcome(Case&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Outcome(Case&)>>> suites = {
      {"dirac", dirac},
      {"pbw", pbw},
      {"confluence", confluence},
      {"associativity", associativity},
      {"lie", lie},
      {"trace-hom", trace_hom},
      {"cubic", cubic},
      {"quantum-moment", quantum_moment_case},
      {"ideal", ideal},
      {"invariance", invariance},
      {"poisson", poisson_case},
      {"gauge", gauge},
      {"classical-limit", classical_limit},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw Error("unknown suite '" + name + "'");
  if (config.dims && config.quiver && config.dims->size() != config.quiver->num_vertices()) {
    throw DimensionError("dimension vector must cover every vertex");
  }
  SuiteResult result;
  result.report.name = name;
  Rng rng(config.seed);
  for (std::size_t k = 0; k < config.cases; ++k) {
    Case c{rng, config, result, k};
    Outcome o = it->second(c);
    ++result.cases;
    if (!o) continue;
    if (++result.failures == 1) {
      result.report.residual = *o;
      result.report.notes.push_back("first failure in case " + std::to_string(k));
    }
  }
  result.report.status = result.failures ? Status::failed : Status::verified;
  result.report.notes.insert(result.report.notes.begin(),
                             std::to_string(result.cases - result.failures) + "/" + std::to_string(result.cases) +
                                 " cases verified");
  return result;
}

}  // namespace nhq
