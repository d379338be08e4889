#include "nhq/repspace.hpp"

#include <algorithm>

#include "nhq/error.hpp"
#include "nhq/linalg.hpp"

namespace nhq {

RepSpace::RepSpace(QuiverPtr q, std::vector<std::size_t> dims) : q_(std::move(q)), dims_(std::move(dims)) {
  if (dims_.size() != q_->num_vertices()) throw DimensionError("dimension vector must cover every vertex");
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    if (dims_[v] == 0) throw DimensionError("dimension at vertex " + q_->vertex_name(v) + " must be positive");
  }
  for (std::uint32_t a = 0; a < q_->num_arrows(); ++a) {
    offsets_.push_back(slots_.size());
    std::size_t rows = dims_[q_->arrow(a).target];
    std::size_t cols = dims_[q_->arrow(a).source];
    for (std::uint32_t p = 0; p < rows; ++p) {
      for (std::uint32_t c = 0; c < cols; ++c) slots_.push_back({a, p, c});
    }
  }
}

std::size_t RepSpace::slot(std::size_t arrow, std::size_t p, std::size_t q) const {
  if (arrow >= q_->num_arrows()) throw DimensionError("unknown arrow");
  std::size_t rows = dims_[q_->arrow(arrow).target];
  std::size_t cols = dims_[q_->arrow(arrow).source];
  if (p >= rows || q >= cols) {
    throw DimensionError("index (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ") out of bounds for " +
                         q_->arrow(arrow).name);
  }
  return offsets_[arrow] + p * cols + q;
}

std::size_t RepSpace::letter_slot(Letter l, std::size_t p, std::size_t q) const {
  return l.starred ? slot(l.arrow, q, p) : slot(l.arrow, p, q);
}

RepSpacePtr make_repspace(const QuiverPtr& q, std::vector<std::size_t> dims) {
  return std::make_shared<const RepSpace>(q, std::move(dims));
}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (auto e : pos) d += e;
  for (auto e : mom) d += e;
  return d;
}

std::size_t Monomial::momentum_degree() const {
  std::size_t d = 0;
  for (auto e : mom) d += e;
  return d;
}

namespace {

RepSpacePtr common_space(const RepSpacePtr& a, const RepSpacePtr& b) {
  if (a && b && a != b && !(*a == *b)) throw MismatchError("operands live on different representation spaces");
  return a ? a : b;
}

Monomial unit_monomial(const RepSpace& r) { return Monomial::one(r.num_slots()); }

using WeylTerms = std::map<Monomial, HBarPolynomial>;

void add_term(WeylTerms& out, const Monomial& m, const HBarPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

Rational binomial(unsigned n, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// (x^a d^b)(x^g d^e) = sum_k hbar^|k| prod C(b,k) C(g,k) k! x^(a+g-k) d^(b+e-k)
void multiply_monomials(const Monomial& a, const Monomial& b, const HBarPolynomial& c, WeylTerms& out) {
  std::size_t n = a.pos.size();
  Monomial base = a;
  std::vector<std::size_t> overlap;
  for (std::size_t i = 0; i < n; ++i) {
    base.pos[i] = static_cast<std::uint16_t>(base.pos[i] + b.pos[i]);
    base.mom[i] = static_cast<std::uint16_t>(base.mom[i] + b.mom[i]);
    if (a.mom[i] > 0 && b.pos[i] > 0) overlap.push_back(i);
  }
  if (overlap.empty()) {
    add_term(out, base, c);
    return;
  }
  struct Frame {
    std::size_t idx;
    Monomial m;
    Rational coeff;
    std::size_t hpow;
  };
  std::vector<Frame> stack{{0, base, Rational(1), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.idx == overlap.size()) {
      HBarPolynomial term = c.shifted(f.hpow);
      term *= f.coeff;
      add_term(out, f.m, term);
      continue;
    }
    std::size_t i = overlap[f.idx];
    unsigned beta = a.mom[i];
    unsigned gamma = b.pos[i];
    unsigned top = std::min(beta, gamma);
    for (unsigned k = 0; k <= top; ++k) {
      Frame g{f.idx + 1, f.m, f.coeff * binomial(beta, k) * binomial(gamma, k) * factorial(k), f.hpow + k};
      g.m.pos[i] = static_cast<std::uint16_t>(g.m.pos[i] - k);
      g.m.mom[i] = static_cast<std::uint16_t>(g.m.mom[i] - k);
      stack.push_back(std::move(g));
    }
  }
}

WeylElement from_terms(const RepSpacePtr& r, const WeylTerms& terms) {
  WeylElement out(r);
  for (const auto& [m, c] : terms) out.add(m, c);
  return out;
}

}  // namespace

WeylElement weyl_scalar(const RepSpacePtr& r, const HBarPolynomial& c) { return WeylElement(r, unit_monomial(*r), c); }

WeylElement weyl_position(const RepSpacePtr& r, std::size_t slot) {
  Monomial m = unit_monomial(*r);
  m.pos.at(slot) = 1;
  return WeylElement(r, m);
}

WeylElement weyl_derivative(const RepSpacePtr& r, std::size_t slot) {
  Monomial m = unit_monomial(*r);
  m.mom.at(slot) = 1;
  return WeylElement(r, m);
}

WeylElement weyl_letter(const RepSpacePtr& r, Letter l, std::size_t p, std::size_t q) {
  std::size_t s = r->letter_slot(l, p, q);
  return l.starred ? weyl_derivative(r, s) : weyl_position(r, s);
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) {
  RepSpacePtr r = common_space(x.context(), y.context());
  if (!r) return WeylElement();
  WeylTerms out;
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : y.terms()) multiply_monomials(a, b, c * d, out);
  }
  return from_terms(r, out);
}

WeylElement weyl_mul_letter(const WeylElement& x, Letter l, std::size_t p, std::size_t q) {
  const RepSpacePtr& r = x.context();
  if (!r) return WeylElement();
  std::size_t s = r->letter_slot(l, p, q);
  WeylTerms out;
  for (const auto& [m, c] : x.terms()) {
    Monomial n = m;
    if (l.starred) {
      ++n.mom[s];
      add_term(out, n, c);
      continue;
    }
    ++n.pos[s];
    add_term(out, n, c);
    if (m.mom[s] > 0) {
      Monomial k = m;
      --k.mom[s];
      HBarPolynomial term = c.shifted(1);
      term *= Rational(m.mom[s]);
      add_term(out, k, term);
    }
  }
  return from_terms(r, out);
}

WeylElement weyl_comm(const WeylElement& x, const WeylElement& y) { return weyl_mul(x, y) - weyl_mul(y, x); }

PolyElement poly_scalar(const RepSpacePtr& r, const Rational& c) { return PolyElement(r, unit_monomial(*r), c); }

PolyElement poly_position(const RepSpacePtr& r, std::size_t slot) {
  Monomial m = unit_monomial(*r);
  m.pos.at(slot) = 1;
  return PolyElement(r, m);
}

PolyElement poly_momentum(const RepSpacePtr& r, std::size_t slot) {
  Monomial m = unit_monomial(*r);
  m.mom.at(slot) = 1;
  return PolyElement(r, m);
}

PolyElement poly_letter(const RepSpacePtr& r, Letter l, std::size_t p, std::size_t q) {
  std::size_t s = r->letter_slot(l, p, q);
  return l.starred ? poly_momentum(r, s) : poly_position(r, s);
}

PolyElement poly_mul(const PolyElement& x, const PolyElement& y) {
  RepSpacePtr r = common_space(x.context(), y.context());
  PolyElement out(r);
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : y.terms()) {
      Monomial m = a;
      for (std::size_t i = 0; i < m.pos.size(); ++i) {
        m.pos[i] = static_cast<std::uint16_t>(m.pos[i] + b.pos[i]);
        m.mom[i] = static_cast<std::uint16_t>(m.mom[i] + b.mom[i]);
      }
      out.add(m, c * d);
    }
  }
  return out;
}

PolyElement poly_derivative(const PolyElement& f, std::size_t slot, bool momentum) {
  PolyElement out(f.context());
  for (const auto& [m, c] : f.terms()) {
    auto e = momentum ? m.mom[slot] : m.pos[slot];
    if (e == 0) continue;
    Monomial n = m;
    if (momentum) --n.mom[slot];
    else --n.pos[slot];
    out.add(n, c * Rational(e));
  }
  return out;
}

PolyElement classical_symbol(const WeylElement& d) {
  PolyElement out(d.context());
  for (const auto& [m, c] : d.terms()) out.add(m, c.constant_term());
  return out;
}

WeylElement normal_quantization(const PolyElement& f) {
  WeylElement out(f.context());
  for (const auto& [m, c] : f.terms()) out.add(m, HBarPolynomial(c));
  return out;
}

PolyElement poisson(const PolyElement& f, const PolyElement& g) {
  RepSpacePtr r = common_space(f.context(), g.context());
  PolyElement out(r);
  if (!r) return out;
  for (std::size_t s = 0; s < r->num_slots(); ++s) {
    out += poly_mul(poly_derivative(f, s, false), poly_derivative(g, s, true));
    out -= poly_mul(poly_derivative(f, s, true), poly_derivative(g, s, false));
  }
  return out;
}

PolyElement path_entry_classical(const RepSpacePtr& r, const Path& p, std::size_t row, std::size_t col) {
  const Quiver& q = *r->quiver();
  if (p.is_trivial()) {
    std::size_t d = r->dim(p.vertex);
    if (row >= d || col >= d) throw DimensionError("index out of bounds for an idempotent");
    return row == col ? poly_scalar(r, 1) : PolyElement(r);
  }
  if (row >= r->rows(p.letters.front()) || col >= r->cols(p.letters.back())) {
    throw DimensionError("index out of bounds for a path");
  }
  std::vector<PolyElement> acc;
  for (std::size_t k = 0; k < r->cols(p.letters.front()); ++k) acc.push_back(poly_letter(r, p.letters.front(), row, k));
  for (std::size_t m = 1; m < p.letters.size(); ++m) {
    Letter l = p.letters[m];
    std::vector<PolyElement> next(r->cols(l), PolyElement(r));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k].is_zero()) continue;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] += poly_mul(acc[k], poly_letter(r, l, k, j));
    }
    acc = std::move(next);
  }
  (void)q;
  return acc[col];
}

WeylElement path_entry_quantum(const RepSpacePtr& r, const Path& p, std::size_t row, std::size_t col) {
  if (p.is_trivial()) {
    std::size_t d = r->dim(p.vertex);
    if (row >= d || col >= d) throw DimensionError("index out of bounds for an idempotent");
    return row == col ? weyl_scalar(r, 1) : WeylElement(r);
  }
  if (row >= r->rows(p.letters.front()) || col >= r->cols(p.letters.back())) {
    throw DimensionError("index out of bounds for a path");
  }
  std::vector<WeylElement> acc;
  for (std::size_t k = 0; k < r->cols(p.letters.front()); ++k) acc.push_back(weyl_letter(r, p.letters.front(), row, k));
  for (std::size_t m = 1; m < p.letters.size(); ++m) {
    Letter l = p.letters[m];
    std::vector<WeylElement> next(r->cols(l), WeylElement(r));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k].is_zero()) continue;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] += weyl_mul_letter(acc[k], l, k, j);
    }
    acc = std::move(next);
  }
  return acc[col];
}

namespace {

struct Coordinate {
  Letter letter;
  std::size_t i;
  std::size_t j;
};

// Position slot s is (a)_{p,q}; momentum slot s is (a*)_{q,p}.
Coordinate coordinate_of(const RepSpace& r, std::size_t slot, bool momentum) {
  const Slot& s = r.slot_info(slot);
  if (!momentum) return {Letter{s.arrow, false}, s.row, s.col};
  return {Letter{s.arrow, true}, s.col, s.row};
}

PolyElement formula_bracket(const RepSpacePtr& r, const Coordinate& u, const Coordinate& v) {
  const QuiverPtr& q = r->quiver();
  TensorElement t = double_bracket(letter_element(q, u.letter), letter_element(q, v.letter));
  PolyElement out(r);
  // {alpha_ij, beta_uv} = [[alpha, beta]]'_{u,j} [[alpha, beta]]''_{i,v}
  for (const auto& [pp, c] : t.terms()) {
    PolyElement left = path_entry_classical(r, pp.first, v.i, u.j);
    PolyElement right = path_entry_classical(r, pp.second, u.i, v.j);
    out.add_scaled(poly_mul(left, right), c.constant_term());
  }
  return out;
}

}  // namespace

PolyElement poisson_via_double_bracket(const PolyElement& f, const PolyElement& g) {
  RepSpacePtr r = common_space(f.context(), g.context());
  PolyElement out(r);
  if (!r) return out;
  std::size_t n = r->num_slots();
  std::vector<PolyElement> df, dg;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    df.push_back(poly_derivative(f, k % n, k >= n));
    dg.push_back(poly_derivative(g, k % n, k >= n));
  }
  for (std::size_t a = 0; a < 2 * n; ++a) {
    if (df[a].is_zero()) continue;
    Coordinate u = coordinate_of(*r, a % n, a >= n);
    for (std::size_t b = 0; b < 2 * n; ++b) {
      if (dg[b].is_zero()) continue;
      Coordinate v = coordinate_of(*r, b % n, b >= n);
      PolyElement br = formula_bracket(r, u, v);
      if (br.is_zero()) continue;
      out += poly_mul(poly_mul(df[a], dg[b]), br);
    }
  }
  return out;
}

GlElement gl_unit(const RepSpacePtr& r, std::size_t vertex, std::size_t p, std::size_t q) {
  if (vertex >= r->dims().size() || p >= r->dim(vertex) || q >= r->dim(vertex)) {
    throw DimensionError("elementary matrix index out of bounds");
  }
  return GlElement(r, GlIndex{static_cast<std::uint32_t>(vertex), static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)});
}

GlElement gl_identity(const RepSpacePtr& r, std::size_t vertex) {
  GlElement out(r);
  for (std::size_t l = 0; l < r->dim(vertex); ++l) out += gl_unit(r, vertex, l, l);
  return out;
}

GlElement gl_bracket(const GlElement& x, const GlElement& y) {
  RepSpacePtr r = common_space(x.context(), y.context());
  GlElement out(r);
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : y.terms()) {
      if (a.vertex != b.vertex) continue;
      // [e_pq, e_rs] = d_qr e_ps - d_sp e_rq
      if (a.q == b.p) out.add({a.vertex, a.p, b.q}, c * d);
      if (b.q == a.p) out.add({a.vertex, b.p, a.q}, -(c * d));
    }
  }
  return out;
}

std::vector<GlIndex> gl_basis(const RepSpace& r) {
  std::vector<GlIndex> out;
  for (std::uint32_t v = 0; v < r.dims().size(); ++v) {
    for (std::uint32_t p = 0; p < r.dim(v); ++p) {
      for (std::uint32_t q = 0; q < r.dim(v); ++q) out.push_back({v, p, q});
    }
  }
  return out;
}

WeylElement tau(const GlElement& v) {
  const RepSpacePtr& r = v.context();
  if (!r) return WeylElement();
  const Quiver& q = *r->quiver();
  WeylTerms out;
  auto add_op = [&](std::size_t xs, std::size_t ds, const Rational& c) {
    Monomial m = unit_monomial(*r);
    m.pos[xs] = 1;
    m.mom[ds] = 1;
    add_term(out, m, HBarPolynomial(c));
  };
  for (const auto& [e, c] : v.terms()) {
    if (e.vertex >= q.num_vertices() || e.p >= r->dim(e.vertex) || e.q >= r->dim(e.vertex)) {
      throw DimensionError("elementary matrix index out of bounds");
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (arr.source == e.vertex) {
        for (std::size_t j = 0; j < r->dim(arr.target); ++j) add_op(r->slot(a, j, e.p), r->slot(a, j, e.q), c);
      }
      if (arr.target == e.vertex) {
        for (std::size_t j = 0; j < r->dim(arr.source); ++j) add_op(r->slot(a, e.q, j), r->slot(a, e.p, j), -c);
      }
    }
  }
  return from_terms(r, out);
}

PolyElement gauge_act(std::size_t i, std::size_t p, std::size_t q, const PolyElement& f) {
  const RepSpacePtr& r = f.context();
  if (!r) return PolyElement();
  if (i >= r->dims().size() || p >= r->dim(i) || q >= r->dim(i)) throw DimensionError("gauge index out of bounds");
  const Quiver& Q = *r->quiver();
  PolyElement out(r);
  for (std::size_t s = 0; s < r->num_slots(); ++s) {
    const Slot& sl = r->slot_info(s);
    const Arrow& arr = Q.arrow(sl.arrow);
    PolyElement dpos = poly_derivative(f, s, false);
    if (!dpos.is_zero()) {
      // (a)_{uv} -> d_{s(a),i} d_{pv} (a)_{uq} - d_{t(a),i} d_{uq} (a)_{pv}
      std::size_t u = sl.row, v = sl.col;
      PolyElement img(r);
      if (arr.source == i && p == v) img += poly_position(r, r->slot(sl.arrow, u, q));
      if (arr.target == i && u == q) img -= poly_position(r, r->slot(sl.arrow, p, v));
      out += poly_mul(dpos, img);
    }
    PolyElement dmom = poly_derivative(f, s, true);
    if (!dmom.is_zero()) {
      // (a*)_{uv} -> d_{t(a),i} d_{pv} (a*)_{uq} - d_{s(a),i} d_{uq} (a*)_{pv}
      Letter star{sl.arrow, true};
      std::size_t u = sl.col, v = sl.row;
      PolyElement img(r);
      if (arr.target == i && p == v) img += poly_letter(r, star, u, q);
      if (arr.source == i && u == q) img -= poly_letter(r, star, p, v);
      out += poly_mul(dmom, img);
    }
  }
  return out;
}

Rational Character::operator()(const GlElement& v) const {
  Rational out(0);
  for (const auto& [e, coeff] : v.terms()) {
    if (e.p == e.q && e.vertex < c.size()) out += c[e.vertex] * coeff;
  }
  return out;
}

std::vector<Rational> outgoing_dimension(const RepSpace& r) {
  const Quiver& q = *r.quiver();
  std::vector<Rational> out(q.num_vertices(), Rational(0));
  for (const auto& a : q.arrows()) out[a.source] += Rational(r.dim(a.target));
  return out;
}

namespace {

Rational r_entry(const std::vector<Rational>& r, std::size_t k) { return k < r.size() ? r[k] : Rational(0); }

Character chi_variant(const RepSpace& r, const std::vector<Rational>& rvec, int dsign, int rsign) {
  Character chi;
  auto out = outgoing_dimension(r);
  for (std::size_t k = 0; k < out.size(); ++k) chi.c.push_back(Rational(dsign) * out[k] + Rational(rsign) * r_entry(rvec, k));
  return chi;
}

}  // namespace

Character chi_from_r(const RepSpace& r, const std::vector<Rational>& rvec) { return chi_variant(r, rvec, -1, 1); }
Character chi_proof_variant(const RepSpace& r, const std::vector<Rational>& rvec) { return chi_variant(r, rvec, -1, -1); }
Character chi_statement_variant(const RepSpace& r, const std::vector<Rational>& rvec) {
  return chi_variant(r, rvec, 1, 1);
}

std::vector<GlElement> tau_kernel(const RepSpacePtr& r) {
  auto basis = gl_basis(*r);
  std::map<Monomial, std::size_t> rows;
  RationalMatrix m;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    WeylElement t = tau(GlElement(r, basis[col]));
    for (const auto& [mono, c] : t.terms()) {
      auto [it, inserted] = rows.try_emplace(mono, m.size());
      if (inserted) m.emplace_back(basis.size(), Rational(0));
      m[it->second][col] = c.constant_term();
    }
  }
  std::vector<GlElement> out;
  for (const auto& v : null_space(m, basis.size())) {
    GlElement g(r);
    for (std::size_t k = 0; k < v.size(); ++k) g.add(basis[k], v[k]);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> endpoints(const Quiver& q, const PathAlgebraElement& x) {
  if (x.is_zero()) throw CompositionError("zero element has no block shape");
  bool first = true;
  std::size_t s = 0, t = 0;
  for (const auto& [p, c] : x.terms()) {
    std::size_t ps = path_source(q, p), pt = path_target(q, p);
    if (first) {
      s = ps;
      t = pt;
      first = false;
    } else if (ps != s || pt != t) {
      throw CompositionError("element is not homogeneous between two vertices");
    }
  }
  return {s, t};
}

}  // namespace

BlockMatrix<PolyElement> block_matrix_classical(const RepSpacePtr& r, const PathAlgebraElement& x) {
  auto [s, t] = endpoints(*r->quiver(), x);
  BlockMatrix<PolyElement> b{s, t, r->dim(t), r->dim(s), {}};
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      PolyElement e(r);
      for (const auto& [p, c] : x.terms()) e.add_scaled(path_entry_classical(r, p, i, j), c.constant_term());
      b.entries.push_back(std::move(e));
    }
  }
  return b;
}

BlockMatrix<WeylElement> block_matrix_quantum(const RepSpacePtr& r, const PathAlgebraElement& x) {
  auto [s, t] = endpoints(*r->quiver(), x);
  BlockMatrix<WeylElement> b{s, t, r->dim(t), r->dim(s), {}};
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      WeylElement e(r);
      for (const auto& [p, c] : x.terms()) e.add_scaled(path_entry_quantum(r, p, i, j), c);
      b.entries.push_back(std::move(e));
    }
  }
  return b;
}

WeylElement quantum_moment(const GlElement& v, const std::vector<Rational>& rvec) {
  const RepSpacePtr& r = v.context();
  if (!r) return WeylElement();
  MomentData m = moment_map(r->quiver());
  std::map<std::size_t, BlockMatrix<WeylElement>> blocks;
  WeylElement out(r);
  for (const auto& [e, c] : v.terms()) {
    if (e.vertex >= r->dims().size() || e.p >= r->dim(e.vertex) || e.q >= r->dim(e.vertex)) {
      throw DimensionError("elementary matrix index out of bounds");
    }
    const PathAlgebraElement& wi = m.components[e.vertex];
    if (!wi.is_zero()) {
      auto it = blocks.find(e.vertex);
      if (it == blocks.end()) it = blocks.emplace(e.vertex, block_matrix_quantum(r, wi)).first;
      // tr(M e_pq) = M_qp
      out.add_scaled(it->second.at(e.q, e.p), HBarPolynomial(c));
    }
    if (e.p == e.q) out.add_scaled(weyl_scalar(r, HBarPolynomial::hbar(1, r_entry(rvec, e.vertex))), HBarPolynomial(c));
  }
  return out;
}

}  // namespace nhq
