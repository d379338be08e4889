#include "nhq/expr.hpp"

#include <algorithm>
#include <cctype>

#include "nhq/error.hpp"
#include "nhq/format.hpp"

namespace nhq {

std::string kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::scalar: return "scalar";
    case ValueKind::path: return "path algebra element";
    case ValueKind::necklace: return "necklace element";
    case ValueKind::sym: return "symmetric product";
    case ValueKind::tensor: return "tensor";
    case ValueKind::configs: return "height configuration";
    case ValueKind::qpa: return "quantum path algebra element";
    case ValueKind::weyl: return "differential operator";
    case ValueKind::poly: return "polynomial function";
    case ValueKind::gl: return "gl element";
  }
  return "value";
}

namespace {

std::string where(std::size_t pos) { return "position " + std::to_string(pos + 1); }

[[noreturn]] void fail(const std::string& message, std::size_t pos) { throw ParseError(message, where(pos)); }

bool zero_scalar(const Value& v) { return v.kind == ValueKind::scalar && v.scalar.is_zero(); }

[[noreturn]] void wrong_kind(const Value& v, ValueKind want) {
  fail("expected a " + kind_name(want) + ", got a " + kind_name(v.kind), v.position);
}

using Configs = std::vector<std::pair<HeightConfiguration, HBarPolynomial>>;

Configs as_configs(const Value& v) {
  switch (v.kind) {
    case ValueKind::configs: return v.configs;
    case ValueKind::scalar: {
      if (v.scalar.is_zero()) return {};
      return {{HeightConfiguration{}, v.scalar}};
    }
    case ValueKind::path: {
      Configs out;
      for (const auto& [p, c] : v.path.terms()) {
        if (!p.is_trivial()) fail("only idempotents e_v can join a height configuration", v.position);
        HeightConfiguration h;
        h.idempotents.push_back(p.vertex);
        out.emplace_back(std::move(h), c);
      }
      return out;
    }
    default: wrong_kind(v, ValueKind::configs);
  }
}

bool trivial_paths_only(const Value& v) {
  if (v.kind != ValueKind::path || v.path.is_zero()) return false;
  return std::all_of(v.path.terms().begin(), v.path.terms().end(), [](const auto& t) { return t.first.is_trivial(); });
}

}  // namespace

PathAlgebraElement as_path(const Value& v, const QuiverPtr& q) {
  if (v.kind == ValueKind::path) return v.path;
  if (v.kind == ValueKind::scalar) return unit_element(q) * v.scalar;
  wrong_kind(v, ValueKind::path);
}

HH0Element as_necklace(const Value& v, const QuiverPtr& q) {
  if (v.kind == ValueKind::necklace) return v.necklace;
  if (v.kind == ValueKind::path || v.kind == ValueKind::scalar) {
    HH0Element out = natural_projection(as_path(v, q));
    if (!out.context()) out.set_context(q);
    return out;
  }
  wrong_kind(v, ValueKind::necklace);
}

SymElement as_sym(const Value& v, const QuiverPtr& q) {
  if (v.kind == ValueKind::sym) return v.sym;
  if (v.kind == ValueKind::scalar) return v.scalar.is_zero() ? SymElement(q) : SymElement(q, SymMonomial{}, v.scalar);
  if (v.kind == ValueKind::path || v.kind == ValueKind::necklace) return sym_element(as_necklace(v, q));
  wrong_kind(v, ValueKind::sym);
}

TensorElement as_tensor(const Value& v, const QuiverPtr& q) {
  if (v.kind == ValueKind::tensor) return v.tensor;
  if (zero_scalar(v)) return TensorElement(q);
  wrong_kind(v, ValueKind::tensor);
}

QPAElement as_qpa(const Value& v, const QuiverPtr& q) {
  switch (v.kind) {
    case ValueKind::qpa: return v.qpa;
    case ValueKind::scalar: return v.scalar.is_zero() ? QPAElement(q) : qpa_unit(q) * v.scalar;
    case ValueKind::path:
    case ValueKind::necklace: return lift(as_necklace(v, q));
    case ValueKind::sym: return lift(v.sym);
    case ValueKind::configs: {
      Straightener s(q);
      QPAElement out(q);
      for (const auto& [cfg, c] : v.configs) {
        std::vector<std::uint32_t> heights;
        for (const auto& comp : cfg.components) {
          for (const auto& hl : comp.letters) heights.push_back(hl.height);
        }
        std::sort(heights.begin(), heights.end());
        for (std::size_t k = 0; k < heights.size(); ++k) {
          if (heights[k] != k + 1) fail("heights must be a permutation of 1.." + std::to_string(heights.size()), v.position);
        }
        try {
          validate(*q, cfg);
        } catch (const CompositionError& e) {
          fail(e.what(), v.position);
        }
        out.add_scaled(s.straighten(normalize(cfg)), c);
      }
      return out;
    }
    default: wrong_kind(v, ValueKind::qpa);
  }
}

WeylElement as_weyl(const Value& v, const RepSpacePtr& r) {
  if (v.kind == ValueKind::weyl) return v.weyl;
  if (v.kind == ValueKind::scalar) return v.scalar.is_zero() ? WeylElement(r) : weyl_scalar(r, v.scalar);
  wrong_kind(v, ValueKind::weyl);
}

PolyElement as_poly(const Value& v, const RepSpacePtr& r) {
  if (v.kind == ValueKind::poly) return v.poly;
  if (v.kind == ValueKind::scalar) {
    if (!v.scalar.is_constant()) fail("polynomial functions take rational coefficients only", v.position);
    return v.scalar.is_zero() ? PolyElement(r) : poly_scalar(r, v.scalar.constant_term());
  }
  wrong_kind(v, ValueKind::poly);
}

GlElement as_gl(const Value& v, const RepSpacePtr& r) {
  if (v.kind == ValueKind::gl) return v.gl;
  if (v.kind == ValueKind::scalar) {
    if (v.scalar.is_zero()) return GlElement(r);
    if (!v.scalar.is_constant()) fail("gl elements take rational coefficients only", v.position);
  }
  wrong_kind(v, ValueKind::gl);
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, QuiverPtr q, RepSpacePtr r) : s_(text), q_(std::move(q)), r_(std::move(r)) {}

  Value parse() {
    Value v = sum();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected a name", pos_);
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string vertex_token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a vertex name", pos_);
    return s_.substr(start, pos_ - start);
  }

  std::size_t vertex(const std::string& name, std::size_t at) {
    auto v = q_->find_vertex(name);
    if (!v) fail("unknown vertex '" + name + "'", at);
    return *v;
  }

  std::size_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer", pos_);
    return std::stoul(s_.substr(start, pos_ - start));
  }

  Letter letter(std::size_t at) {
    std::string name = identifier();
    auto a = q_->find_arrow(name);
    if (!a) fail("unknown arrow '" + name + "'", at);
    bool star = false;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      star = true;
    }
    return Letter{static_cast<std::uint32_t>(*a), star};
  }

  std::pair<std::size_t, std::size_t> indices() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_{p,q}'", pos_);
    ++pos_;
    expect('{');
    std::size_t at = pos_;
    std::size_t p = integer();
    expect(',');
    std::size_t q = integer();
    expect('}');
    if (p == 0 || q == 0) fail("indices are 1-based", at);
    return {p - 1, q - 1};
  }

  const RepSpacePtr& space(std::size_t at) {
    if (!r_) throw DimensionError(where(at) + ": operator syntax needs a dimension vector");
    return r_;
  }

  Value make(ValueKind k, std::size_t at) {
    Value v;
    v.kind = k;
    v.position = at;
    return v;
  }

  Value scalar_value(const HBarPolynomial& c, std::size_t at) {
    Value v = make(ValueKind::scalar, at);
    v.scalar = c;
    return v;
  }

  static ValueKind join(const Value& a, const Value& b) {
    if (a.kind == b.kind) return a.kind;
    if (a.kind == ValueKind::scalar) return b.kind;
    if (b.kind == ValueKind::scalar) return a.kind;
    auto rank = [](ValueKind k) {
      switch (k) {
        case ValueKind::path: return 1;
        case ValueKind::necklace: return 2;
        case ValueKind::sym: return 3;
        case ValueKind::configs: return 4;
        case ValueKind::qpa: return 5;
        default: return 0;
      }
    };
    int ra = rank(a.kind), rb = rank(b.kind);
    if (!ra || !rb) fail("cannot combine a " + kind_name(a.kind) + " with a " + kind_name(b.kind), b.position);
    if (ra >= 4 || rb >= 4) return ValueKind::qpa;
    return ra > rb ? a.kind : b.kind;
  }

  Value convert(const Value& v, ValueKind k) {
    Value out = make(k, v.position);
    switch (k) {
      case ValueKind::scalar: out.scalar = v.scalar; break;
      case ValueKind::path: out.path = as_path(v, q_); break;
      case ValueKind::necklace: out.necklace = as_necklace(v, q_); break;
      case ValueKind::sym: out.sym = as_sym(v, q_); break;
      case ValueKind::tensor: out.tensor = as_tensor(v, q_); break;
      case ValueKind::configs: out.configs = as_configs(v); break;
      case ValueKind::qpa: out.qpa = as_qpa(v, q_); break;
      case ValueKind::weyl: out.weyl = as_weyl(v, space(v.position)); break;
      case ValueKind::poly: out.poly = as_poly(v, space(v.position)); break;
      case ValueKind::gl: out.gl = as_gl(v, space(v.position)); break;
    }
    return out;
  }

  Value add(const Value& a, const Value& b, int sign) {
    ValueKind k = join(a, b);
    Value x = convert(a, k), y = convert(b, k);
    HBarPolynomial f(sign);
    switch (k) {
      case ValueKind::scalar: x.scalar += y.scalar * f; break;
      case ValueKind::path: x.path.add_scaled(y.path, f); break;
      case ValueKind::necklace: x.necklace.add_scaled(y.necklace, f); break;
      case ValueKind::sym: x.sym.add_scaled(y.sym, f); break;
      case ValueKind::tensor: x.tensor.add_scaled(y.tensor, f); break;
      case ValueKind::configs:
        for (const auto& [c, k2] : y.configs) x.configs.emplace_back(c, k2 * f);
        break;
      case ValueKind::qpa: x.qpa.add_scaled(y.qpa, f); break;
      case ValueKind::weyl: x.weyl.add_scaled(y.weyl, f); break;
      case ValueKind::poly: x.poly.add_scaled(y.poly, Rational(sign)); break;
      case ValueKind::gl: x.gl.add_scaled(y.gl, Rational(sign)); break;
    }
    return x;
  }

  Value scale(Value v, const HBarPolynomial& c) {
    switch (v.kind) {
      case ValueKind::scalar: v.scalar *= c; break;
      case ValueKind::path: v.path *= c; break;
      case ValueKind::necklace: v.necklace *= c; break;
      case ValueKind::sym: v.sym *= c; break;
      case ValueKind::tensor: v.tensor *= c; break;
      case ValueKind::configs:
        for (auto& t : v.configs) t.second *= c;
        break;
      case ValueKind::qpa: v.qpa *= c; break;
      case ValueKind::weyl: v.weyl *= c; break;
      case ValueKind::poly:
        if (!c.is_constant()) fail("polynomial functions take rational coefficients only", v.position);
        v.poly *= c.constant_term();
        break;
      case ValueKind::gl:
        if (!c.is_constant()) fail("gl elements take rational coefficients only", v.position);
        v.gl *= c.constant_term();
        break;
    }
    return v;
  }

  Value multiply(const Value& a, const Value& b) {
    if (a.kind == ValueKind::scalar) return scale(b, a.scalar);
    if (b.kind == ValueKind::scalar) return scale(a, b.scalar);
    auto is = [](const Value& v, std::initializer_list<ValueKind> ks) {
      return std::find(ks.begin(), ks.end(), v.kind) != ks.end();
    };
    Value out = make(a.kind, a.position);
    if (a.kind == ValueKind::path && b.kind == ValueKind::path) {
      out.path = path_mul(a.path, b.path);
      return out;
    }
    if (a.kind == ValueKind::weyl && b.kind == ValueKind::weyl) {
      out.weyl = weyl_mul(a.weyl, b.weyl);
      return out;
    }
    if (a.kind == ValueKind::poly && b.kind == ValueKind::poly) {
      out.poly = poly_mul(a.poly, b.poly);
      return out;
    }
    const std::initializer_list<ValueKind> commutative{ValueKind::necklace, ValueKind::sym};
    const std::initializer_list<ValueKind> quantum{ValueKind::path, ValueKind::necklace, ValueKind::sym,
                                                   ValueKind::configs, ValueKind::qpa};
    if (is(a, commutative) && is(b, commutative)) {
      out.kind = ValueKind::sym;
      out.sym = sym_mul(as_sym(a, q_), as_sym(b, q_));
      return out;
    }
    if (is(a, quantum) && is(b, quantum) && (is(a, {ValueKind::configs, ValueKind::qpa}) ||
                                             is(b, {ValueKind::configs, ValueKind::qpa}))) {
      out.kind = ValueKind::qpa;
      out.qpa = qpa_mul(as_qpa(a, q_), as_qpa(b, q_));
      return out;
    }
    fail("cannot multiply a " + kind_name(a.kind) + " by a " + kind_name(b.kind), b.position);
  }

  Value symmetric(const Value& a, const Value& b) {
    bool configs = a.kind == ValueKind::configs || b.kind == ValueKind::configs ||
                   (trivial_paths_only(a) && trivial_paths_only(b)) ||
                   (a.kind == ValueKind::scalar && trivial_paths_only(b)) ||
                   (b.kind == ValueKind::scalar && trivial_paths_only(a));
    if (configs) {
      Configs x = as_configs(a), y = as_configs(b);
      Value out = make(ValueKind::configs, a.position);
      for (const auto& [c1, k1] : x) {
        for (const auto& [c2, k2] : y) {
          HeightConfiguration m = c1;
          m.components.insert(m.components.end(), c2.components.begin(), c2.components.end());
          m.idempotents.insert(m.idempotents.end(), c2.idempotents.begin(), c2.idempotents.end());
          out.configs.emplace_back(std::move(m), k1 * k2);
        }
      }
      return out;
    }
    Value out = make(ValueKind::sym, a.position);
    out.sym = sym_mul(as_sym(a, q_), as_sym(b, q_));
    return out;
  }

  Value sum() {
    Value v = term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      Value w = term();
      v = add(v, w, c == '+' ? 1 : -1);
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      char c = peek();
      if (c != '*' && c != '&') return v;
      ++pos_;
      Value w = unary();
      v = c == '*' ? multiply(v, w) : symmetric(v, w);
    }
  }

  Value unary() {
    if (accept('-')) return scale(unary(), HBarPolynomial(-1));
    return power();
  }

  Value power() {
    Value v = dotted();
    if (!accept('^')) return v;
    std::size_t n = integer();
    Value out = scalar_value(HBarPolynomial(1), v.position);
    for (std::size_t k = 0; k < n; ++k) out = multiply(out, v);
    return out;
  }

  Value dotted() {
    Value v = atom();
    while (peek() == '.') {
      std::size_t at = pos_++;
      Value w = atom();
      if (v.kind != ValueKind::path || w.kind != ValueKind::path) fail("'.' joins paths only", at);
      PathAlgebraElement p = path_mul(v.path, w.path);
      if (p.is_zero() && !v.path.is_zero() && !w.path.is_zero()) fail("paths do not compose", at);
      v.path = std::move(p);
    }
    return v;
  }

  Value number() {
    std::size_t at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) fail("expected a denominator", pos_);
    }
    Rational c;
    try {
      c = parse_rational(s_.substr(at, pos_ - at));
    } catch (const std::exception&) {
      fail("malformed rational", at);
    }
    return scalar_value(HBarPolynomial(c), at);
  }

  Value idempotent(std::size_t v, std::size_t at) {
    Value out = make(ValueKind::path, at);
    out.path = path_element(q_, Path::trivial(v));
    return out;
  }

  // After '(' : "name[']," starts a height component, "name[']) _" a coordinate.
  enum class Paren { component, coordinate, group };
  Paren classify() {
    std::size_t save = pos_;
    Paren kind = Paren::group;
    skip();
    if (pos_ < s_.size() && ident_start(s_[pos_])) {
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      char c = peek();
      if (c == ',') {
        kind = Paren::component;
      } else if (c == ')') {
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '_') kind = Paren::coordinate;
      }
    }
    pos_ = save;
    return kind;
  }

  Value component(std::size_t at) {
    HeightComponent comp;
    while (true) {
      std::size_t lp = pos_;
      Letter l = letter(lp);
      expect(',');
      std::size_t h = integer();
      if (h == 0) fail("heights start at 1", lp);
      expect(')');
      comp.letters.push_back({l, static_cast<std::uint32_t>(h)});
      std::size_t save = pos_;
      if (!accept('(') || classify() != Paren::component) {
        pos_ = save;
        break;
      }
    }
    Value out = make(ValueKind::configs, at);
    HeightConfiguration cfg;
    cfg.components.push_back(std::move(comp));
    out.configs.emplace_back(std::move(cfg), HBarPolynomial(1));
    return out;
  }

  Value atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '\0') fail("unexpected end of expression", at);
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '[') {
      ++pos_;
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && ident_start(s_[pos_])) {
        std::size_t lp = pos_;
        std::string name = identifier();
        bool star = pos_ < s_.size() && s_[pos_] == '\'';
        if (star) ++pos_;
        if (peek() == ']' && q_->find_arrow(name)) {
          ++pos_;
          if (pos_ < s_.size() && s_[pos_] == '_') {
            const RepSpacePtr& r = space(lp);
            auto [p, q] = indices();
            Value out = make(ValueKind::weyl, at);
            out.weyl = weyl_letter(r, Letter{static_cast<std::uint32_t>(*q_->find_arrow(name)), star}, p, q);
            return out;
          }
        }
      }
      pos_ = save;
      Value inner = sum();
      expect(']');
      Value out = make(ValueKind::necklace, at);
      out.necklace = as_necklace(inner, q_);
      return out;
    }
    if (c == '(') {
      ++pos_;
      Paren kind = classify();
      if (kind == Paren::component) return component(at);
      if (kind == Paren::coordinate) {
        std::size_t lp = (skip(), pos_);
        Letter l = letter(lp);
        expect(')');
        const RepSpacePtr& r = space(lp);
        auto [p, q] = indices();
        Value out = make(ValueKind::poly, at);
        out.poly = poly_letter(r, l, p, q);
        return out;
      }
      Value inner = sum();
      if (accept('|')) {
        Value right = sum();
        expect(')');
        PathAlgebraElement x = as_path(inner, q_), y = as_path(right, q_);
        Value out = make(ValueKind::tensor, at);
        out.tensor = TensorElement(q_);
        for (const auto& [p1, c1] : x.terms()) {
          for (const auto& [p2, c2] : y.terms()) out.tensor.add({p1, p2}, c1 * c2);
        }
        return out;
      }
      expect(')');
      inner.position = at;
      return inner;
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'", at);

    std::size_t save = pos_;
    std::string name = identifier();
    if (q_->find_arrow(name)) {
      pos_ = save;
      Letter l = letter(at);
      Value out = make(ValueKind::path, at);
      out.path = letter_element(q_, l);
      return out;
    }
    if (name == "h") return scalar_value(HBarPolynomial::hbar(), at);
    if (name == "d" && peek() == '(') {
      ++pos_;
      std::size_t lp = (skip(), pos_);
      Letter l = letter(lp);
      if (l.starred) fail("derivatives are indexed by plain arrows", lp);
      expect(')');
      const RepSpacePtr& r = space(lp);
      auto [p, q] = indices();
      Value out = make(ValueKind::weyl, at);
      out.weyl = weyl_derivative(r, r->slot(l.arrow, p, q));
      return out;
    }
    if (name == "E" && peek() == '(') {
      ++pos_;
      std::size_t vp = (skip(), pos_);
      std::size_t v = vertex(vertex_token(), vp);
      expect(')');
      const RepSpacePtr& r = space(vp);
      auto [p, q] = indices();
      Value out = make(ValueKind::gl, at);
      out.gl = gl_unit(r, v, p, q);
      return out;
    }
    if (name == "e" && pos_ < s_.size() && s_[pos_] == '<') {
      ++pos_;
      std::size_t vp = pos_;
      std::size_t v = vertex(vertex_token(), vp);
      expect('>');
      return idempotent(v, at);
    }
    if (name.size() > 2 && name.compare(0, 2, "e_") == 0) {
      if (auto v = q_->find_vertex(name.substr(2))) return idempotent(*v, at);
    }
    fail("unknown name '" + name + "'", at);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  QuiverPtr q_;
  RepSpacePtr r_;
};

}  // namespace

Value parse_expression(const std::string& text, const QuiverPtr& q, const RepSpacePtr& r) {
  Parser p(text, q, r);
  return p.parse();
}

std::string format_value(const Value& v, const QuiverPtr& q) {
  switch (v.kind) {
    case ValueKind::scalar: return format(v.scalar);
    case ValueKind::path: return format(v.path);
    case ValueKind::necklace: return format(v.necklace);
    case ValueKind::sym: return format(v.sym);
    case ValueKind::tensor: return format(v.tensor);
    case ValueKind::configs: return format(as_qpa(v, q));
    case ValueKind::qpa: return format(v.qpa);
    case ValueKind::weyl: return format(v.weyl);
    case ValueKind::poly: return format(v.poly);
    case ValueKind::gl: return format(v.gl);
  }
  return "";
}

}  // namespace nhq
