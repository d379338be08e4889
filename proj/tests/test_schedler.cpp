#include <doctest.h>

#include "nhq/error.hpp"
#include "nhq/random.hpp"
#include "nhq/schedler.hpp"

using namespace nhq;

namespace {

QuiverPtr load(const char* name) { return load_quiver(std::string(NHQ_DATA_DIR) + "/" + name); }

constexpr Letter x{0, false}, xs{0, true};
constexpr Letter a0{0, false}, a0s{0, true}, a1s{1, true}, a2{2, false}, a2s{2, true}, p{3, false}, ps{3, true};

using Comp = std::vector<HeightedLetter>;

HeightConfiguration cfg(std::vector<Comp> comps, std::vector<std::size_t> idem = {}) {
  HeightConfiguration c;
  for (auto& comp : comps) c.components.push_back({std::move(comp)});
  c.idempotents = std::move(idem);
  return normalize(std::move(c));
}

QPAElement E(const QuiverPtr& q, std::vector<Comp> comps, std::vector<std::size_t> idem = {},
             const HBarPolynomial& c = 1) {
  return config_element(q, cfg(std::move(comps), std::move(idem)), c);
}

const HBarPolynomial hbar = HBarPolynomial::hbar();

HH0Element neck(const QuiverPtr& q, const Word& w) { return necklace_element(q, canonical_necklace(*q, w)); }
HH0Element idem(const QuiverPtr& q, std::size_t v) { return necklace_element(q, Necklace::idempotent(v)); }

}  // namespace

TEST_CASE("straighten examples on the Jordan quiver") {
  auto j = load("jordan.json");
  auto canonical = cfg({{{x, 1}, {xs, 2}}});
  CHECK(is_canonical(*j, canonical));
  CHECK(straighten(j, canonical) == config_element(j, canonical));

  auto one = straighten(j, cfg({{{xs, 1}, {x, 2}}}));
  CHECK(one == E(j, {{{x, 1}, {xs, 2}}}) + E(j, {}, {0, 0}, hbar));

  auto two = straighten(j, cfg({{{xs, 1}}, {{x, 2}}}));
  CHECK(two == E(j, {{{x, 1}}, {{xs, 2}}}) + E(j, {}, {0}, hbar));
}

TEST_CASE("straighten on A2") {
  auto a2 = load("a2.json");
  Letter a{0, false}, as{0, true};
  auto s = straighten(a2, cfg({{{as, 1}, {a, 2}}}));
  CHECK(s == E(a2, {{{a, 1}, {as, 2}}}) + E(a2, {}, {0, 1}, hbar));
  CHECK_THROWS_AS(straighten(a2, cfg({{{a, 1}}})), CompositionError);
}

TEST_CASE("qpa product and commutator examples") {
  auto j = load("jordan.json");
  auto lx = lift(neck(j, {x}));
  auto lxs = lift(neck(j, {xs}));
  auto unit = qpa_unit(j);
  CHECK(qpa_mul(unit, lx) == lx);
  CHECK(qpa_mul(lx, unit) == lx);
  CHECK(qpa_mul(lx, lxs) == lift(sym_mul(sym_element(neck(j, {x})), sym_element(neck(j, {xs})))));
  CHECK(qpa_mul(lx, lxs) == E(j, {{{x, 1}}, {{xs, 2}}}));
  CHECK(qpa_mul(lxs, lx) == qpa_mul(lx, lxs) + E(j, {}, {0}, hbar));
  CHECK(qpa_comm(lx, lx).is_zero());
  CHECK(qpa_comm(lx, lxs) == E(j, {}, {0}, -hbar));
  CHECK(project(qpa_mul(lxs, lx)) ==
        sym_mul(sym_element(neck(j, {x})), sym_element(neck(j, {xs}))) + sym_element(idem(j, 0)) * hbar);
}

TEST_CASE("quantum A3 commutator") {
  auto q = load("a3p.json");
  auto X = straighten(q, cfg({{{a0s, 1}, {a1s, 2}, {a2s, 3}}}));
  auto Y = straighten(q, cfg({{{a2s, 1}, {a2, 2}}}));
  CHECK(qpa_comm(X, Y) == E(q, {{{a0s, 1}, {a1s, 2}, {a2s, 3}}}, {}, hbar));
}

TEST_CASE("lift and project") {
  auto j = load("jordan.json");
  CHECK(lift(idem(j, 0)) == E(j, {}, {0}));
  CHECK(lift(neck(j, {xs, x})) == E(j, {{{x, 1}, {xs, 2}}}));
  CHECK(project(QPAElement(j)).is_zero());
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    auto q = random_quiver(rng);
    auto m = random_sym(q, rng, 3, 3, 4);
    CHECK(project(lift(m)) == m);
  }
}

TEST_CASE("moment lift") {
  auto j = load("jordan.json");
  CHECK(moment_lift(j) == E(j, {}, {0, 0}, -hbar));
  auto a2 = load("a2.json");
  CHECK(moment_lift(a2) == E(a2, {}, {0, 1}, -hbar));
  auto empty = std::make_shared<const Quiver>(std::vector<std::string>{"v"}, std::vector<Arrow>{});
  CHECK(moment_lift(empty).is_zero());
}

TEST_CASE("ideal generators") {
  auto q = load("a3p.json");
  ReductionParameters params{{Rational(2), Rational(3), Rational(5), Rational(7)}, {}};
  HH0Element w0(q);
  w0.add(canonical_necklace(*q, {a0s, a0}), -1);
  w0.add(canonical_necklace(*q, {a2, a2s}), 1);
  w0.add(canonical_necklace(*q, {p, ps}), 1);
  auto expect = lift(w0) + lift(idem(q, 0)) * (hbar * Rational(2));
  CHECK(ideal_generator(q, Path::trivial(0), 0, params, IdealLift::canonical) == expect);
  // The marked lift keeps the written heights of -(a0',1)(a0,2).
  auto marked = ideal_generator(q, Path::trivial(0), 0, params, IdealLift::marked);
  CHECK(marked == expect - E(q, {}, {0, 1}, hbar));

  auto j = load("jordan.json");
  ReductionParameters rj{{Rational(3)}, {}};
  CHECK(ideal_generator(j, Path::trivial(0), 0, rj) == E(j, {}, {0, 0}, -hbar) + E(j, {}, {0}, hbar * Rational(3)));

  Rational c(4);
  ReductionParameters lam{{}, {c}};
  Path pxx = Path::from_word(*j, {x, xs});
  HH0Element spliced(j);
  spliced.add(canonical_necklace(*j, {x, xs, x, xs}), 1);
  spliced.add(canonical_necklace(*j, {x, xs, xs, x}), -1);
  auto expect_j = lift(spliced) - lift(neck(j, {x, xs})) * HBarPolynomial(c);
  CHECK(ideal_generator(j, pxx, 0, lam, IdealLift::canonical) == expect_j);
  CHECK_THROWS_AS(ideal_generator(q, Path::from_word(*q, {a0}), 0, params), CompositionError);
}

TEST_CASE("marked generators agree with canonical ones modulo hbar") {
  auto q = load("a3p.json");
  Rng rng(4);
  ReductionParameters params{{Rational(1), Rational(-2), Rational(1, 2), Rational(0)}, {Rational(1)}};
  for (int t = 0; t < 20; ++t) {
    std::size_t v = rng.below(4);
    auto w = random_cycle_at(*q, rng, 1 + rng.below(3), v);
    if (!w) continue;
    Path pp = Path::from_word(*q, *w);
    auto diff = ideal_generator(q, pp, v, params, IdealLift::marked) - ideal_generator(q, pp, v, params, IdealLift::canonical);
    for (const auto& [k, c] : diff.terms()) CHECK(c.constant_term() == 0);
  }
}

TEST_CASE("confluence and termination measure") {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    auto q = random_quiver(rng);
    auto c = random_configuration(*q, rng, 8);
    StraightenOptions lo{RewriteStrategy::lowest_first, 0, true};
    StraightenOptions hi{RewriteStrategy::highest_first, 0, true};
    StraightenOptions rnd{RewriteStrategy::random, rng.next(), true};
    Straightener s1(q, lo), s2(q, hi), s3(q, rnd);
    auto r1 = s1.straighten(c);
    CHECK(r1 == s2.straighten(c));
    CHECK(r1 == s3.straighten(c));
    CHECK(s1.stats().measure_violations == 0);
    CHECK(s2.stats().measure_violations == 0);
    CHECK(s3.stats().measure_violations == 0);
    for (const auto& [k, coeff] : r1.terms()) CHECK(is_canonical(*q, k));
    StraightenOptions plain{RewriteStrategy::lowest_first, 0, false, false};
    CHECK(straighten(q, c, plain) == r1);
  }
}

TEST_CASE("associativity and classical limit") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    auto q = random_quiver(rng);
    auto m1 = random_sym(q, rng, 2, 2, 3);
    auto m2 = random_sym(q, rng, 2, 2, 3);
    auto m3 = random_sym(q, rng, 1, 2, 3);
    auto X = lift(m1), Y = lift(m2), Z = lift(m3);
    CHECK(qpa_mul(qpa_mul(X, Y), Z) == qpa_mul(X, qpa_mul(Y, Z)));
    SymElement diff = project(qpa_mul(X, Y)) - sym_mul(m1, m2);
    for (const auto& [k, c] : diff.terms()) CHECK(c.constant_term() == 0);
  }
}

TEST_CASE("Dirac property") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    auto q = random_quiver(rng);
    auto nx = necklace_element(q, random_necklace(*q, rng, 5));
    auto ny = necklace_element(q, random_necklace(*q, rng, 5));
    auto c = qpa_comm(lift(nx), lift(ny));
    for (const auto& [k, coeff] : c.terms()) REQUIRE(coeff.constant_term() == 0);
    SymElement lhs(q);
    SymElement pc = project(c);
    for (const auto& [k, coeff] : pc.terms()) {
      lhs.add(k, HBarPolynomial(-coeff.divided_by_hbar().constant_term()));
    }
    CHECK(lhs == sym_element(necklace_bracket(nx, ny)));
  }
}
