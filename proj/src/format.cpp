#include "nhq/format.hpp"

namespace nhq {

std::string format(const Rational& c) { return c.get_str(); }

namespace {

std::string hbar_power(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "h";
  return "h^" + std::to_string(k);
}

// A single term "c*h^k" with its sign folded into the string.
std::string monomial_term(const Rational& c, std::size_t k) {
  std::string h = hbar_power(k);
  if (h.empty()) return format(c);
  if (c == 1) return h;
  if (c == -1) return "-" + h;
  return format(c) + "*" + h;
}

std::string join_signed(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-') out += " - " + parts[i].substr(1);
    else out += " + " + parts[i];
  }
  return out;
}

std::string scaled(const HBarPolynomial& c, const std::string& body) {
  if (body.empty()) return format(c);
  if (c.term_count() == 1) {
    std::size_t k = 0;
    while (c.coefficient(k) == 0) ++k;
    Rational v = c.coefficient(k);
    if (k == 0 && v == 1) return body;
    if (k == 0 && v == -1) return "-" + body;
    return monomial_term(v, k) + "*" + body;
  }
  return "(" + format(c) + ")*" + body;
}

std::string vertex_path(const Quiver& q, std::size_t v) { return "e_" + q.vertex_name(v); }

}  // namespace

std::string format(const HBarPolynomial& c) {
  std::vector<std::string> parts;
  const auto& cs = c.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] != 0) parts.push_back(monomial_term(cs[k], k));
  }
  return join_signed(parts);
}

std::string join_terms(const std::vector<std::pair<std::string, HBarPolynomial>>& terms) {
  std::vector<std::string> parts;
  for (const auto& [body, c] : terms) parts.push_back(scaled(c, body));
  return join_signed(parts);
}

std::string format(const Quiver& q, Letter l) { return q.arrow(l.arrow).name + (l.starred ? "'" : ""); }

std::string format(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return vertex_path(q, p.vertex);
  std::string out;
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i) out += ".";
    out += format(q, p.letters[i]);
  }
  return out;
}

std::string format(const Quiver& q, const Necklace& n) {
  if (n.word.empty()) return "[" + vertex_path(q, n.vertex) + "]";
  return "[" + format(q, Path{n.word, q.target(n.word.front())}) + "]";
}

std::string format(const Quiver& q, const SymMonomial& m) {
  if (m.factors.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out += "&";
    out += format(q, m.factors[i]);
  }
  return out;
}

std::string format(const Quiver& q, const HeightConfiguration& c) {
  std::vector<std::string> parts;
  for (const auto& comp : c.components) {
    std::string s;
    for (const auto& hl : comp.letters) s += "(" + format(q, hl.letter) + "," + std::to_string(hl.height) + ")";
    parts.push_back(s);
  }
  for (auto v : c.idempotents) parts.push_back(vertex_path(q, v));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "&";
    out += parts[i];
  }
  return out;
}

std::string format(const Quiver& q, const PathPair& t) {
  return "(" + format(q, t.first) + " | " + format(q, t.second) + ")";
}

namespace {

template <class E>
std::string format_element(const E& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, HBarPolynomial>> terms;
  for (const auto& [k, c] : x.terms()) terms.emplace_back(format(*x.context(), k), c);
  return join_terms(terms);
}

}  // namespace

std::string format(const PathAlgebraElement& x) { return format_element(x); }
std::string format(const HH0Element& x) { return format_element(x); }
std::string format(const TensorElement& x) { return format_element(x); }
std::string format(const SymElement& x) { return format_element(x); }
std::string format(const QPAElement& x) { return format_element(x); }

std::string format(const RepSpace& r, const Monomial& m, bool weyl) {
  const Quiver& q = *r.quiver();
  std::vector<std::string> factors;
  auto power = [](std::uint16_t e) { return e == 1 ? std::string() : "^" + std::to_string(e); };
  auto idx = [](std::size_t a, std::size_t b) { return "_{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}"; };
  for (std::size_t s = 0; s < m.pos.size(); ++s) {
    if (!m.pos[s]) continue;
    const Slot& sl = r.slot_info(s);
    std::string name = q.arrow(sl.arrow).name;
    factors.push_back((weyl ? "[" + name + "]" : "(" + name + ")") + idx(sl.row, sl.col) + power(m.pos[s]));
  }
  for (std::size_t s = 0; s < m.mom.size(); ++s) {
    if (!m.mom[s]) continue;
    const Slot& sl = r.slot_info(s);
    std::string name = q.arrow(sl.arrow).name;
    if (weyl) factors.push_back("d(" + name + ")" + idx(sl.row, sl.col) + power(m.mom[s]));
    else factors.push_back("(" + name + "')" + idx(sl.col, sl.row) + power(m.mom[s]));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

std::string format(const WeylElement& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, HBarPolynomial>> terms;
  for (const auto& [m, c] : x.terms()) terms.emplace_back(format(*x.context(), m, true), c);
  return join_terms(terms);
}

std::string format(const PolyElement& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, HBarPolynomial>> terms;
  for (const auto& [m, c] : x.terms()) terms.emplace_back(format(*x.context(), m, false), HBarPolynomial(c));
  return join_terms(terms);
}

std::string format(const GlElement& x) {
  if (x.is_zero()) return "0";
  const Quiver& q = *x.context()->quiver();
  std::vector<std::pair<std::string, HBarPolynomial>> terms;
  for (const auto& [e, c] : x.terms()) {
    terms.emplace_back("E(" + q.vertex_name(e.vertex) + ")_{" + std::to_string(e.p + 1) + "," + std::to_string(e.q + 1) + "}",
                       HBarPolynomial(c));
  }
  return join_terms(terms);
}

}  // namespace nhq
