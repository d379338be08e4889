#include "nhq/trace.hpp"

#include <algorithm>

#include "nhq/error.hpp"
#include "nhq/format.hpp"
#include "nhq/linalg.hpp"

namespace nhq {

namespace {

void require_quiver(const RepSpacePtr& r, const QuiverPtr& q) {
  if (q && !(*r->quiver() == *q)) throw MismatchError("element and representation space use different quivers");
}

}  // namespace

PolyElement trace_classical(const RepSpacePtr& r, const HH0Element& x) {
  require_quiver(r, x.context());
  const Quiver& q = *r->quiver();
  PolyElement out(r);
  for (const auto& [n, c] : x.terms()) {
    Rational k = c.constant_term();
    if (n.word.empty()) {
      out.add_scaled(poly_scalar(r, Rational(r->dim(n.vertex))), k);
      continue;
    }
    Path p{n.word, q.target(n.word.front())};
    for (std::size_t l = 0; l < r->dim(p.vertex); ++l) out.add_scaled(path_entry_classical(r, p, l, l), k);
  }
  return out;
}

WeylElement trace_configuration(const RepSpacePtr& r, const HeightConfiguration& c) {
  const Quiver& q = *r->quiver();
  validate(q, c);
  Rational scalar(1);
  for (auto v : c.idempotents) scalar *= Rational(r->dim(v));

  struct Step {
    std::uint32_t height;
    Letter letter;
    std::size_t row_var;
    std::size_t col_var;
  };
  std::vector<Step> steps;
  std::vector<std::size_t> var_dim;
  for (const auto& comp : c.components) {
    std::size_t base = var_dim.size();
    std::size_t len = comp.letters.size();
    for (std::size_t m = 0; m < len; ++m) {
      const auto& hl = comp.letters[m];
      var_dim.push_back(r->rows(hl.letter));
      steps.push_back({hl.height, hl.letter, base + m, base + (m + 1) % len});
    }
  }
  std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) { return a.height < b.height; });
  std::vector<std::size_t> last_use(var_dim.size(), 0);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    last_use[steps[s].row_var] = s;
    last_use[steps[s].col_var] = s;
  }

  using State = std::vector<std::int16_t>;
  std::map<State, WeylElement> states;
  states.emplace(State(var_dim.size(), -1), weyl_scalar(r, HBarPolynomial(scalar)));
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Step& st = steps[s];
    std::map<State, WeylElement> next;
    for (const auto& [state, el] : states) {
      std::size_t rlo = 0, rhi = var_dim[st.row_var];
      if (state[st.row_var] >= 0) rlo = state[st.row_var], rhi = rlo + 1;
      for (std::size_t a = rlo; a < rhi; ++a) {
        State s2 = state;
        s2[st.row_var] = static_cast<std::int16_t>(a);
        std::size_t clo = 0, chi = var_dim[st.col_var];
        if (s2[st.col_var] >= 0) clo = s2[st.col_var], chi = clo + 1;
        for (std::size_t b = clo; b < chi; ++b) {
          State s3 = s2;
          s3[st.col_var] = static_cast<std::int16_t>(b);
          WeylElement e = weyl_mul_letter(el, st.letter, a, b);
          if (e.is_zero()) continue;
          if (last_use[st.row_var] == s) s3[st.row_var] = -1;
          if (last_use[st.col_var] == s) s3[st.col_var] = -1;
          auto [it, inserted] = next.try_emplace(s3, e);
          if (!inserted) it->second += e;
        }
      }
    }
    states = std::move(next);
  }
  WeylElement out(r);
  for (const auto& [state, el] : states) out += el;
  return out;
}

WeylElement trace_quantum(const RepSpacePtr& r, const QPAElement& x) {
  require_quiver(r, x.context());
  WeylElement out(r);
  for (const auto& [cfg, c] : x.terms()) out.add_scaled(trace_configuration(r, cfg), c);
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::solved: return "solved";
  }
  return "failed";
}

std::string VerificationReport::text() const {
  std::string out = "name: " + name + "\nstatus: " + status_name(status) + "\nresidual: " + residual + "\n";
  if (!character.empty()) {
    out += "character:";
    for (const auto& [v, c] : character) out += " " + v + "=" + format(c);
    out += "\n";
  }
  for (const auto& c : constraints) out += "constraint: " + c + "\n";
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

nlohmann::ordered_json VerificationReport::json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["status"] = status_name(status);
  j["residual"] = residual;
  if (!character.empty()) {
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [v, k] : character) c[v] = format(k);
    j["character"] = c;
  }
  j["constraints"] = constraints;
  j["notes"] = notes;
  return j;
}

namespace {

void set_residual(VerificationReport& rep, const std::string& residual) {
  rep.residual = residual;
  rep.status = residual == "0" ? Status::verified : Status::failed;
}

WeylElement over_hbar(const WeylElement& w) {
  WeylElement out(w.context());
  for (const auto& [m, c] : w.terms()) out.add(m, c.divided_by_hbar());
  return out;
}

bool divisible_by_hbar(const WeylElement& w) {
  return std::all_of(w.terms().begin(), w.terms().end(), [](const auto& t) { return t.second.constant_term() == 0; });
}

std::vector<std::pair<std::string, Rational>> named(const Quiver& q, const std::vector<Rational>& c) {
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t v = 0; v < c.size(); ++v) out.emplace_back(q.vertex_name(v), c[v]);
  return out;
}

}  // namespace

VerificationReport verify_trace_homomorphism(const RepSpacePtr& r, const QPAElement& x, const QPAElement& y) {
  VerificationReport rep;
  rep.name = "trace-hom";
  WeylElement lhs = trace_quantum(r, qpa_mul(x, y));
  WeylElement rhs = weyl_mul(trace_quantum(r, x), trace_quantum(r, y));
  set_residual(rep, format(lhs - rhs));
  return rep;
}

VerificationReport verify_cubic(const RepSpacePtr& r, const HH0Element& x, const HH0Element& y) {
  VerificationReport rep;
  rep.name = "cubic";
  WeylElement c = weyl_comm(trace_quantum(r, lift(x)), trace_quantum(r, lift(y)));
  if (!divisible_by_hbar(c)) {
    rep.status = Status::failed;
    rep.residual = format(c);
    rep.notes.push_back("commutator is not divisible by h");
    return rep;
  }
  PolyElement lhs = classical_symbol(-over_hbar(c));
  PolyElement rhs = poisson(trace_classical(r, x), trace_classical(r, y));
  set_residual(rep, format(lhs - rhs));
  rep.notes.push_back("bracket: " + format(rhs));
  return rep;
}

VerificationReport verify_quantum_moment(const RepSpacePtr& r, const std::vector<Rational>& rvec) {
  VerificationReport rep;
  rep.name = "quantum-moment";
  auto out = outgoing_dimension(*r);
  std::size_t checked = 0;
  for (const auto& e : gl_basis(*r)) {
    GlElement g(r, e);
    WeylElement expect = -tau(g);
    if (e.p == e.q) {
      Rational rv = e.vertex < rvec.size() ? rvec[e.vertex] : Rational(0);
      expect += weyl_scalar(r, HBarPolynomial::hbar(1, rv - out[e.vertex]));
    }
    WeylElement diff = quantum_moment(g, rvec) - expect;
    ++checked;
    if (!diff.is_zero()) {
      rep.status = Status::failed;
      rep.residual = format(diff);
      rep.notes.push_back("first failure at " + format(g));
      return rep;
    }
  }
  rep.notes.push_back(std::to_string(checked) + " elementary matrices checked");
  return rep;
}

WeylElement reduction_operator(const GlElement& v, const Character& chi, const ReductionParameters& params) {
  const RepSpacePtr& r = v.context();
  WeylElement out = tau(v);
  for (const auto& [e, c] : v.terms()) {
    if (e.p != e.q) continue;
    Rational ck = e.vertex < chi.c.size() ? chi.c[e.vertex] : Rational(0);
    HBarPolynomial s = HBarPolynomial(params.lambda_at(e.vertex)) - HBarPolynomial::hbar(1, ck);
    out += weyl_scalar(r, s * HBarPolynomial(c));
  }
  return out;
}

WeylElement IdealDecomposition::expand(const Character& chi, const ReductionParameters& params) const {
  WeylElement out(target.context());
  for (const auto& s : summands) out += weyl_mul(s.coefficient, reduction_operator(s.direction, chi, params));
  return out;
}

IdealDecomposition decompose_ideal_image(const RepSpacePtr& r, const Path& p, std::size_t i,
                                         const ReductionParameters& params, IdealLift mode) {
  const QuiverPtr& q = r->quiver();
  IdealDecomposition d;
  d.target = trace_quantum(r, ideal_generator(q, p, i, params, mode));
  for (std::size_t l1 = 0; l1 < r->dim(i); ++l1) {
    for (std::size_t l2 = 0; l2 < r->dim(i); ++l2) {
      WeylElement c = path_entry_quantum(r, p, l1, l2);
      if (c.is_zero()) continue;
      d.summands.push_back({std::move(c), gl_unit(r, i, l1, l2) * Rational(-1)});
    }
  }
  return d;
}

std::vector<Path> closed_paths(const Quiver& q, std::size_t i, std::size_t max_length) {
  std::vector<Path> out{Path::trivial(i)};
  auto letters = q.letters();
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      std::size_t need = w.empty() ? i : q.source(w.back());
      for (Letter l : letters) {
        if (q.target(l) != need) continue;
        Word w2 = w;
        w2.push_back(l);
        if (q.source(l) == i) out.push_back(Path::from_word(q, w2));
        next.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

using Key = std::pair<Monomial, std::size_t>;

void scatter(const WeylElement& w, std::map<Key, Rational>& out) {
  for (const auto& [m, c] : w.terms()) {
    const auto& cs = c.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] != 0) out[{m, k}] += cs[k];
    }
  }
}

std::string compare_line(const std::string& label, const Quiver& q, const Character& solved, const Character& other) {
  std::string diff;
  for (std::size_t v = 0; v < solved.c.size(); ++v) {
    if (solved.c[v] != other.c[v]) diff += " " + q.vertex_name(v) + "=" + format(other.c[v]);
  }
  return label + (diff.empty() ? ": agrees" : ": differs, predicts" + diff);
}

}  // namespace

CharacterSolution solve_chi(const RepSpacePtr& r, const ReductionParameters& params, IdealLift mode,
                            std::size_t max_length) {
  const Quiver& q = *r->quiver();
  std::size_t n = q.num_vertices();
  CharacterSolution sol;
  sol.report.name = "solve-chi";
  Character zero{std::vector<Rational>(n, Rational(0))};

  std::vector<IdealDecomposition> decomps;
  std::map<Key, std::size_t> rows;
  RationalMatrix m;
  std::vector<Rational> b;
  auto row_of = [&](const Key& k) {
    auto [it, inserted] = rows.try_emplace(k, m.size());
    if (inserted) {
      m.emplace_back(n, Rational(0));
      b.emplace_back(0);
    }
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : closed_paths(q, i, max_length)) {
      IdealDecomposition d = decompose_ideal_image(r, p, i, params, mode);
      std::map<Key, Rational> rest;
      scatter(d.target - d.expand(zero, params), rest);
      for (const auto& [k, c] : rest) b[row_of(k)] += c;
      for (std::size_t v = 0; v < n; ++v) {
        WeylElement col(r);
        for (const auto& s : d.summands) {
          Rational t(0);
          for (const auto& [e, c] : s.direction.terms()) {
            if (e.vertex == v && e.p == e.q) t += c;
          }
          if (t != 0) col.add_scaled(s.coefficient, HBarPolynomial::hbar(1, -t));
        }
        std::map<Key, Rational> entries;
        scatter(col, entries);
        for (const auto& [k, c] : entries) m[row_of(k)][v] += c;
      }
      decomps.push_back(std::move(d));
    }
  }
  auto solved = solve_linear(m, b, n);
  sol.report.notes.push_back(std::to_string(decomps.size()) + " generators, " + std::to_string(m.size()) +
                             " equations");
  if (!solved) {
    sol.report.status = Status::failed;
    sol.report.residual = "inconsistent";
    sol.report.notes.push_back("no character of the form sum c_k tr_k fits every generator");
    return sol;
  }
  Character chi{solved->x};
  sol.unique = solved->free_variables == 0;
  sol.chi = chi;
  sol.report.status = Status::solved;
  sol.report.character = named(q, chi.c);
  sol.report.notes.push_back(sol.unique ? "unique" : "not unique: " + std::to_string(solved->free_variables) +
                                                         " free coefficients");
  std::size_t bad = 0;
  for (const auto& d : decomps) {
    WeylElement diff = d.expand(chi, params) - d.target;
    if (diff.is_zero()) continue;
    if (++bad == 1) sol.report.residual = format(diff);
  }
  if (bad) {
    sol.report.status = Status::failed;
    sol.report.notes.push_back(std::to_string(bad) + " decompositions do not re-expand");
  } else {
    sol.report.notes.push_back("all decompositions re-expand exactly");
  }
  std::vector<Rational> rv(n);
  for (std::size_t v = 0; v < n; ++v) rv[v] = params.r_at(v);
  sol.report.notes.push_back(compare_line("-D + r", q, chi, chi_from_r(*r, rv)));
  sol.report.notes.push_back(compare_line("-D - r", q, chi, chi_proof_variant(*r, rv)));
  sol.report.notes.push_back(compare_line("+D + r", q, chi, chi_statement_variant(*r, rv)));
  return sol;
}

std::string format_constraint(const Quiver& q, const LinearConstraint& c) {
  std::vector<std::pair<std::string, HBarPolynomial>> terms;
  for (std::size_t v = 0; v < c.coefficients.size(); ++v) {
    if (c.coefficients[v] != 0) terms.emplace_back(std::string(1, c.variable) + "_" + q.vertex_name(v), HBarPolynomial(c.coefficients[v]));
  }
  if (c.constant != 0 || terms.empty()) terms.emplace_back("", HBarPolynomial(c.constant));
  return join_terms(terms) + " = 0";
}

KernelConstraintResult kernel_constraint(const RepSpacePtr& r, const std::vector<Rational>& lambda, IdealLift mode) {
  const Quiver& q = *r->quiver();
  std::size_t n = q.num_vertices();
  KernelConstraintResult res;
  res.report.name = "kernel";
  auto solve_at = [&](std::vector<Rational> rv) { return solve_chi(r, ReductionParameters{std::move(rv), lambda}, mode); };
  auto keep = [&](LinearConstraint c) {
    bool trivial = c.constant == 0 && std::all_of(c.coefficients.begin(), c.coefficients.end(),
                                                  [](const Rational& k) { return k == 0; });
    if (trivial) return;
    res.report.constraints.push_back(format_constraint(q, c));
    res.constraints.push_back(std::move(c));
  };
  CharacterSolution base = solve_at(std::vector<Rational>(n, Rational(0)));
  if (base.chi && !base.unique) {
    res.report.status = Status::solved;
    res.report.notes.push_back("character not determined by the generators; constraints are on c");
    for (const auto& v : tau_kernel(r)) {
      LinearConstraint c{{}, Rational(0), 'c'};
      for (std::size_t k = 0; k < n; ++k) {
        Character unit{std::vector<Rational>(n, Rational(0))};
        unit.c[k] = 1;
        c.coefficients.push_back(unit(v));
      }
      keep(std::move(c));
    }
    return res;
  }
  if (!base.chi) {
    res.report = base.report;
    res.report.name = "kernel";
    res.report.status = Status::failed;
    return res;
  }
  std::vector<Character> slopes;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> rv(n, Rational(0));
    rv[j] = 1;
    CharacterSolution s = solve_at(rv);
    if (!s.chi || !s.unique) {
      res.report = s.report;
      res.report.name = "kernel";
      res.report.status = Status::failed;
      return res;
    }
    Character slope;
    for (std::size_t v = 0; v < n; ++v) slope.c.push_back(s.chi->c[v] - base.chi->c[v]);
    slopes.push_back(std::move(slope));
  }
  res.report.status = Status::solved;
  res.report.character = named(q, base.chi->c);
  for (const auto& v : tau_kernel(r)) {
    LinearConstraint c;
    c.constant = (*base.chi)(v);
    for (const auto& s : slopes) c.coefficients.push_back(s(v));
    keep(std::move(c));
  }
  res.report.notes.push_back(std::to_string(res.constraints.size()) + " kernel directions");
  return res;
}

}  // namespace nhq
