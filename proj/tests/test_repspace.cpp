#include <doctest.h>

#include "nhq/error.hpp"
#include "nhq/random.hpp"
#include "nhq/repspace.hpp"

using namespace nhq;

namespace {

QuiverPtr load(const char* name) { return load_quiver(std::string(NHQ_DATA_DIR) + "/" + name); }

constexpr Letter x{0, false}, xs{0, true};
const HBarPolynomial hbar = HBarPolynomial::hbar();

WeylElement over_hbar(const WeylElement& w) {
  WeylElement out(w.context());
  for (const auto& [m, c] : w.terms()) out.add(m, c.divided_by_hbar());
  return out;
}

RepSpacePtr random_space(Rng& rng, QuiverPtr q, std::size_t maxd) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < q->num_vertices(); ++v) d.push_back(1 + rng.below(maxd));
  return make_repspace(q, d);
}

GlElement random_gl(const RepSpacePtr& r, Rng& rng) {
  GlElement g(r);
  auto basis = gl_basis(*r);
  if (basis.empty()) return g;
  for (int k = 0; k < 3; ++k) g.add(basis[rng.below(basis.size())], Rational(static_cast<long>(rng.between(-3, 3))));
  return g;
}

WeylElement random_weyl(const RepSpacePtr& r, Rng& rng, int terms, int degree) {
  WeylElement out(r);
  for (int t = 0; t < terms; ++t) {
    WeylElement m = weyl_scalar(r, random_coefficient(rng, true));
    int len = static_cast<int>(rng.below(degree + 1));
    for (int k = 0; k < len && r->num_slots() > 0; ++k) {
      std::size_t s = rng.below(r->num_slots());
      m = weyl_mul(m, (rng.below(2) == 0) ? weyl_position(r, s) : weyl_derivative(r, s));
    }
    out += m;
  }
  return out;
}

PolyElement random_poly(const RepSpacePtr& r, Rng& rng, int terms, int degree) {
  PolyElement out(r);
  for (int t = 0; t < terms; ++t) {
    PolyElement m = poly_scalar(r, Rational(static_cast<long>(rng.between(-4, 4))));
    int len = static_cast<int>(rng.below(degree + 1));
    for (int k = 0; k < len && r->num_slots() > 0; ++k) {
      std::size_t s = rng.below(r->num_slots());
      m = poly_mul(m, (rng.below(2) == 0) ? poly_position(r, s) : poly_momentum(r, s));
    }
    out += m;
  }
  return out;
}

}  // namespace

TEST_CASE("weyl relation and normal order") {
  auto r = make_repspace(load("jordan.json"), {1});
  auto X = weyl_letter(r, x, 0, 0), D = weyl_letter(r, xs, 0, 0);
  CHECK(weyl_mul(D, X) == weyl_mul(X, D) + weyl_scalar(r, hbar));
  CHECK(weyl_mul(X, X).size() == 1);
  CHECK(weyl_mul(weyl_scalar(r, 1), D) == D);
  CHECK(weyl_mul_letter(D, x, 0, 0) == weyl_mul(D, X));
  CHECK(classical_symbol(weyl_mul(D, X)) == poly_mul(poly_letter(r, x, 0, 0), poly_letter(r, xs, 0, 0)));
  CHECK(classical_symbol(weyl_scalar(r, hbar)).is_zero());
  auto D2 = weyl_mul(D, D);
  CHECK(weyl_mul(D2, weyl_mul(X, X)) ==
        weyl_mul(weyl_mul(X, X), D2) + weyl_mul(X, D) * (hbar * Rational(4)) + weyl_scalar(r, hbar * hbar * Rational(2)));
  CHECK_THROWS_AS(weyl_letter(r, x, 1, 0), DimensionError);
}

TEST_CASE("weyl associativity, grading and classical symbol") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto r = random_space(rng, random_quiver(rng), 2);
    auto a = random_weyl(r, rng, 3, 3), b = random_weyl(r, rng, 3, 3), c = random_weyl(r, rng, 2, 2);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
    CHECK(poly_mul(classical_symbol(a), classical_symbol(b)) == classical_symbol(weyl_mul(a, b)));
    if (r->num_slots() == 0) continue;
    auto da = weyl_derivative(r, rng.below(r->num_slots())), xb = weyl_position(r, rng.below(r->num_slots()));
    auto prod = weyl_mul(da, xb);
    for (const auto& [m, c3] : prod.terms()) {
      CHECK(m.momentum_degree() + static_cast<std::size_t>(c3.degree()) == 1);
    }
  }
}

TEST_CASE("poisson bracket routes") {
  auto j = load("jordan.json");
  auto r1 = make_repspace(j, {1});
  auto px = poly_letter(r1, x, 0, 0), pxs = poly_letter(r1, xs, 0, 0);
  CHECK(poisson(px, pxs) == poly_scalar(r1, 1));
  CHECK(poisson_via_double_bracket(px, pxs) == poly_scalar(r1, 1));
  auto r2 = make_repspace(j, {2});
  CHECK(poisson(poly_letter(r2, x, 0, 1), poly_letter(r2, x, 1, 0)).is_zero());
  CHECK(poisson_via_double_bracket(poly_letter(r2, x, 0, 1), poly_letter(r2, x, 1, 0)).is_zero());

  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    QuiverPtr q;
    do q = random_quiver(rng);
    while (q->num_arrows() > 2);
    auto r = random_space(rng, q, 2);
    std::size_t n = r->num_slots();
    for (std::size_t a = 0; a < 2 * n; ++a) {
      auto f = a < n ? poly_position(r, a) : poly_momentum(r, a - n);
      for (std::size_t b = 0; b < 2 * n; ++b) {
        auto g = b < n ? poly_position(r, b) : poly_momentum(r, b - n);
        CHECK(poisson(f, g) == poisson_via_double_bracket(f, g));
      }
    }
    auto f = random_poly(r, rng, 3, 3), g = random_poly(r, rng, 3, 3);
    CHECK(poisson(f, g) == poisson_via_double_bracket(f, g));
    CHECK(poisson(f, f).is_zero());
  }
}

TEST_CASE("tau examples") {
  auto a2 = load("a2.json");
  Letter a{0, false};
  auto r = make_repspace(a2, {1, 1});
  auto expect = weyl_mul(weyl_letter(r, a, 0, 0), weyl_derivative(r, r->slot(0, 0, 0)));
  CHECK(tau(gl_unit(r, 0, 0, 0)) == expect);
  CHECK(tau(gl_unit(r, 1, 0, 0)) == -expect);
  auto rj = make_repspace(load("jordan.json"), {1});
  CHECK(tau(gl_unit(rj, 0, 0, 0)).is_zero());
  auto empty = std::make_shared<const Quiver>(std::vector<std::string>{"v", "w"}, std::vector<Arrow>{});
  auto re = make_repspace(empty, {2, 1});
  CHECK(tau(gl_unit(re, 0, 0, 1)).is_zero());
  CHECK_THROWS_AS(gl_unit(r, 0, 1, 0), DimensionError);
}

TEST_CASE("tau kernel") {
  auto rj = make_repspace(load("jordan.json"), {1});
  auto kj = tau_kernel(rj);
  REQUIRE(kj.size() == 1);
  CHECK(kj[0] == gl_unit(rj, 0, 0, 0));

  auto r = make_repspace(load("a2.json"), {1, 1});
  auto k = tau_kernel(r);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == gl_unit(r, 0, 0, 0) + gl_unit(r, 1, 0, 0));

  auto empty = std::make_shared<const Quiver>(std::vector<std::string>{"v", "w"}, std::vector<Arrow>{});
  auto re = make_repspace(empty, {2, 1});
  CHECK(tau_kernel(re).size() == 5);

  auto rj2 = make_repspace(load("jordan.json"), {2});
  auto k2 = tau_kernel(rj2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == gl_identity(rj2, 0));
}

TEST_CASE("tau is a Lie morphism") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    auto r = random_space(rng, random_quiver(rng), 2);
    auto v = random_gl(r, rng), w = random_gl(r, rng);
    auto c = weyl_comm(tau(v), tau(w));
    CHECK(tau(gl_bracket(v, w)) == over_hbar(c));
  }
}

TEST_CASE("gauge action matches the tau action") {
  auto rj = make_repspace(load("jordan.json"), {2});
  auto x22 = poly_letter(rj, x, 1, 1);
  CHECK(gauge_act(0, 0, 1, x22) == poly_letter(rj, x, 0, 1) * Rational(-1));
  CHECK(gauge_act(0, 0, 1, poly_scalar(rj, 5)).is_zero());

  Rng rng(14);
  for (int t = 0; t < 25; ++t) {
    auto r = random_space(rng, random_quiver(rng), 2);
    std::size_t n = r->num_slots();
    for (const auto& e : gl_basis(*r)) {
      auto op = tau(GlElement(r, GlIndex{e.vertex, e.q, e.p}));
      for (std::size_t s = 0; s < 2 * n; ++s) {
        auto f = s < n ? poly_position(r, s) : poly_momentum(r, s - n);
        auto induced = classical_symbol(over_hbar(weyl_comm(op, normal_quantization(f))));
        CHECK(gauge_act(e.vertex, e.p, e.q, f) == induced);
      }
    }
  }
}

TEST_CASE("characters") {
  auto j = load("jordan.json");
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = make_repspace(j, {n});
    CHECK(chi_from_r(*r, {}).c == std::vector<Rational>{Rational(-static_cast<long>(n))});
  }
  auto r = make_repspace(load("a2.json"), {1, 1});
  CHECK(chi_from_r(*r, {}).c == std::vector<Rational>{Rational(-1), Rational(0)});
  std::vector<Rational> rv{Rational(2), Rational(-1, 3)};
  auto shift = chi_from_r(*r, rv);
  auto base = chi_from_r(*r, {});
  for (std::size_t k = 0; k < 2; ++k) CHECK(shift.c[k] - base.c[k] == rv[k]);
  CHECK(chi_proof_variant(*r, rv).c[0] == Rational(-3));
  CHECK(chi_statement_variant(*r, rv).c[0] == Rational(3));
  CHECK(base(gl_unit(r, 0, 0, 0) + gl_unit(r, 1, 0, 0)) == Rational(-1));
}

TEST_CASE("block matrices") {
  auto j = load("jordan.json");
  auto r2 = make_repspace(j, {2});
  auto id = block_matrix_classical(r2, unit_element(j));
  CHECK(id.at(0, 0) == poly_scalar(r2, 1));
  CHECK(id.at(0, 1).is_zero());
  auto bx = block_matrix_classical(r2, letter_element(j, x));
  CHECK(bx.at(1, 0) == poly_letter(r2, x, 1, 0));

  auto r1 = make_repspace(j, {1});
  auto m = moment_map(j);
  auto w = block_matrix_quantum(r1, m.components[0]);
  CHECK(w.at(0, 0) == weyl_scalar(r1, -hbar));

  auto a2 = load("a2.json");
  auto ra = make_repspace(a2, {1, 2});
  auto mixed = letter_element(a2, Letter{0, false}) + unit_element(a2);
  CHECK_THROWS_AS(block_matrix_classical(ra, mixed), CompositionError);
  auto ba = block_matrix_classical(ra, letter_element(a2, Letter{0, false}));
  CHECK(ba.rows == 2);
  CHECK(ba.cols == 1);
}

TEST_CASE("quantum moment identity") {
  auto empty = std::make_shared<const Quiver>(std::vector<std::string>{"v"}, std::vector<Arrow>{});
  auto re = make_repspace(empty, {2});
  CHECK(quantum_moment(gl_unit(re, 0, 0, 0)).is_zero());

  Rng rng(15);
  std::vector<QuiverPtr> qs{load("jordan.json"), load("a2.json"), load("a3p.json")};
  for (int t = 0; t < 6; ++t) qs.push_back(random_quiver(rng));
  for (const auto& q : qs) {
    auto r = random_space(rng, q, 2);
    auto out = outgoing_dimension(*r);
    std::vector<Rational> rv;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) rv.push_back(Rational(static_cast<long>(rng.between(-3, 3)), 2));
    for (const auto& e : gl_basis(*r)) {
      GlElement g(r, e);
      WeylElement expect = -tau(g);
      if (e.p == e.q) expect += weyl_scalar(r, hbar * Rational(-out[e.vertex]));
      CHECK(quantum_moment(g) == expect);
      if (e.p == e.q) expect += weyl_scalar(r, hbar * rv[e.vertex]);
      CHECK(quantum_moment(g, rv) == expect);
    }
  }
}
