#include <doctest.h>

#include "nhq/expr.hpp"
#include "nhq/format.hpp"
#include "nhq/random.hpp"
#include "nhq/trace.hpp"

using namespace nhq;

namespace {

QuiverPtr load(const char* name) { return load_quiver(std::string(NHQ_DATA_DIR) + "/" + name); }

std::string parse_error(const std::string& text, const QuiverPtr& q, const RepSpacePtr& r = nullptr) {
  try {
    auto v = parse_expression(text, q, r);
    format_value(v, q);
    return "";
  } catch (const ParseError& e) {
    return e.what();
  }
}

}  // namespace

TEST_CASE("paths and necklaces") {
  auto j = load("jordan.json");
  auto v = parse_expression("x.x' - 2*x'.x + 1/2*e_v", j);
  CHECK(v.kind == ValueKind::path);
  CHECK(format_value(v, j) == "1/2*e_v + x.x' - 2*x'.x");
  CHECK(format(as_necklace(parse_expression("[x.x'] - [x'.x]", j), j)) == "0");
  CHECK(format(as_necklace(parse_expression("[x.x.x']", j), j)) == "[x.x.x']");
  CHECK(format(as_necklace(parse_expression("[x'.x.x]", j), j)) == "[x.x.x']");
  CHECK(format_value(parse_expression("h*[x] + [x]", j), j) == "(1 + h)*[x]");
  CHECK(format_value(parse_expression("e<v>", j), j) == "e_v");

  auto a3 = load("a3p.json");
  CHECK(parse_error("a0.a0", a3) == "position 3: paths do not compose");
  CHECK(format_value(parse_expression("a1.a0", a3), a3) == "a1.a0");
}

TEST_CASE("height configurations") {
  auto j = load("jordan.json");
  auto v = parse_expression("(x',1)(x,2)", j);
  CHECK(v.kind == ValueKind::configs);
  CHECK(format(as_qpa(v, j)) == "h*e_v&e_v + (x,1)(x',2)");
  CHECK(parse_error("(x',1)(x,3)", j) == "position 1: heights must be a permutation of 1..2");
  CHECK(parse_error("(x,0)", j).find("heights start at 1") != std::string::npos);
  CHECK(format(as_qpa(parse_expression("(x,1)&(x,2)", j), j)) == format(as_qpa(parse_expression("(x,2)&(x,1)", j), j)));
}

TEST_CASE("error positions") {
  auto j = load("jordan.json");
  CHECK(parse_error("x + y", j) == "position 5: unknown name 'y'");
  CHECK(parse_error("x +", j) == "position 4: unexpected end of expression");
  CHECK(parse_error("[x", j) == "position 3: expected ']'");
  CHECK(parse_error("x )", j) == "position 3: unexpected ')'");
  CHECK(parse_error("1/", j) == "position 3: expected a denominator");
  CHECK_THROWS_AS(parse_expression("[x]_{1,1}", j), DimensionError);
  auto r = make_repspace(j, {2});
  CHECK(parse_error("[x]_{0,1}", j, r) == "position 6: indices are 1-based");
  CHECK_THROWS_AS(parse_expression("[x]_{3,1}", j, r), DimensionError);
}

TEST_CASE("operators on representation spaces") {
  auto j = load("jordan.json");
  auto r = make_repspace(j, {2});
  auto comm = weyl_comm(as_weyl(parse_expression("d(x)_{1,2}", j, r), r), as_weyl(parse_expression("[x]_{1,2}", j, r), r));
  CHECK(comm == weyl_scalar(r, HBarPolynomial::hbar()));
  CHECK(as_weyl(parse_expression("[x']_{2,1}", j, r), r) == as_weyl(parse_expression("d(x)_{1,2}", j, r), r));
  auto e = as_gl(parse_expression("E(v)_{1,2} - 3*E(v)_{2,2}", j, r), r);
  CHECK(e == gl_unit(r, 0, 0, 1) - Rational(3) * gl_unit(r, 0, 1, 1));
}

TEST_CASE("printed values parse back") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    auto q = random_quiver(rng);
    auto h = random_hh0(q, rng, 3, 4);
    CHECK(as_necklace(parse_expression(format(h), q), q) == h);
    auto m = random_sym(q, rng, 3, 3, 3);
    CHECK(as_sym(parse_expression(format(m), q), q) == m);
    auto x = lift(m);
    CHECK(as_qpa(parse_expression(format(x), q), q) == x);
    auto c = straighten(q, random_configuration(*q, rng, 6));
    CHECK(as_qpa(parse_expression(format(c), q), q) == c);

    PathAlgebraElement pa(q), pb(q);
    auto as_paths = [&](const HH0Element& e, PathAlgebraElement& out) {
      for (const auto& [n, k] : e.terms()) out.add(n.is_idempotent() ? Path::trivial(n.vertex) : Path::from_word(*q, n.word), k);
    };
    as_paths(h, pa);
    auto h2 = random_hh0(q, rng, 2, 3);
    as_paths(h2, pb);
    auto t2 = double_bracket(pa, pb);
    CHECK(as_tensor(parse_expression(format(t2), q), q) == t2);
    CHECK(as_path(parse_expression(format(pa), q), q) == pa);

    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) d.push_back(1 + rng.below(2));
    auto r = make_repspace(q, d);
    auto w = trace_quantum(r, x);
    CHECK(as_weyl(parse_expression(format(w), q, r), r) == w);
    auto f = classical_symbol(w);
    CHECK(as_poly(parse_expression(format(f), q, r), r) == f);
    GlElement g(r);
    auto basis = gl_basis(*r);
    for (int k = 0; k < 3; ++k) g.add(basis[rng.below(basis.size())], Rational(rng.between(-3, 3)));
    CHECK(as_gl(parse_expression(format(g), q, r), r) == g);
  }
}
