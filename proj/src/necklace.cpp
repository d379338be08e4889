#include "nhq/necklace.hpp"

#include <algorithm>

#include "nhq/error.hpp"

namespace nhq {

std::strong_ordering Necklace::operator<=>(const Necklace& other) const {
  if (is_idempotent() != other.is_idempotent()) {
    return is_idempotent() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (is_idempotent()) return vertex <=> other.vertex;
  if (auto c = word.size() <=> other.word.size(); c != 0) return c;
  return word <=> other.word;
}

namespace {

// Compares rotate(w, i) against rotate(w, j).
int compare_rotations(const Word& w, std::size_t i, std::size_t j) {
  std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Letter& a = w[(i + k) % n];
    const Letter& b = w[(j + k) % n];
    if (a < b) return -1;
    if (b < a) return 1;
  }
  return 0;
}

}  // namespace

std::size_t minimal_rotation(const Word& w) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (compare_rotations(w, k, best) < 0) best = k;
  }
  return best;
}

std::vector<std::size_t> canonical_offsets(const Word& w) {
  std::size_t best = minimal_rotation(w);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (compare_rotations(w, k, best) == 0) out.push_back(k);
  }
  return out;
}

Word rotate(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(k + i) % w.size()]);
  return out;
}

Necklace canonical_necklace(const Quiver& q, const Word& w) {
  if (!q.cyclically_composable(w)) throw CompositionError("word is not a cycle");
  Word r = rotate(w, minimal_rotation(w));
  std::size_t v = q.target(r.front());
  return {std::move(r), v};
}

HH0Element necklace_element(const QuiverPtr& q, const Necklace& n, const HBarPolynomial& c) {
  return HH0Element(q, n, c);
}

HH0Element natural_projection(const PathAlgebraElement& x) {
  HH0Element out(x.context());
  if (!x.context()) return out;
  const Quiver& q = *x.context();
  for (const auto& [p, c] : x.terms()) {
    if (p.is_trivial()) {
      out.add(Necklace::idempotent(p.vertex), c);
    } else if (is_closed(q, p)) {
      out.add(canonical_necklace(q, p.letters), c);
    }
  }
  return out;
}

int generator_bracket(Letter u, Letter v) {
  if (u.arrow != v.arrow || u.starred == v.starred) return 0;
  return u.starred ? -1 : 1;
}

namespace {

void bracket_words(const Quiver& q, const Word& a, const Word& b, const HBarPolynomial& c,
                   HH0Element& out) {
  std::size_t k = a.size();
  std::size_t l = b.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      int s = generator_bracket(a[i], b[j]);
      if (s == 0) continue;
      Word merged;
      merged.reserve(k + l - 2);
      for (std::size_t m = 1; m < k; ++m) merged.push_back(a[(i + m) % k]);
      for (std::size_t m = 1; m < l; ++m) merged.push_back(b[(j + m) % l]);
      HBarPolynomial coeff = c;
      coeff *= Rational(s);
      if (merged.empty()) {
        out.add(Necklace::idempotent(q.target(a[(i + 1) % k])), coeff);
      } else {
        out.add(canonical_necklace(q, merged), coeff);
      }
    }
  }
}

QuiverPtr common_context(const QuiverPtr& a, const QuiverPtr& b) {
  if (a && b && a != b && !(*a == *b)) throw MismatchError("operands belong to different quivers");
  return a ? a : b;
}

}  // namespace

HH0Element necklace_bracket(const HH0Element& x, const HH0Element& y) {
  HH0Element out(common_context(x.context(), y.context()));
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  for (const auto& [a, c] : x.terms()) {
    if (a.is_idempotent()) continue;
    for (const auto& [b, d] : y.terms()) {
      if (b.is_idempotent()) continue;
      bracket_words(q, a.word, b.word, c * d, out);
    }
  }
  return out;
}

namespace {

// Product of two basis paths, or nullopt.
std::optional<Path> mul(const Quiver& q, const Path& p, const Path& r) { return concat(q, p, r); }

Path letter_path(const Quiver& q, Letter l) { return {{l}, q.target(l)}; }

Path subpath(const Quiver& q, const Word& w, std::size_t from, std::size_t to, std::size_t empty_vertex) {
  if (from >= to) return Path::trivial(empty_vertex);
  return Path::from_word(q, Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to)));
}

void add_tensor(const Quiver& q, TensorElement& out, const std::optional<Path>& p,
                const std::optional<Path>& r, const HBarPolynomial& c) {
  (void)q;
  if (p && r) out.add({*p, *r}, c);
}

using Memo = std::map<std::pair<Word, Word>, std::vector<std::pair<PathPair, int>>>;

std::vector<std::pair<PathPair, int>> bracket_paths(const Quiver& q, const Word& a, const Word& b, Memo& memo);

// Letter against letter: [[u, u*]] = eps(u) e_s(u) (x) e_t(u).
std::vector<std::pair<PathPair, int>> bracket_letters(const Quiver& q, Letter u, Letter v) {
  int s = generator_bracket(u, v);
  if (s == 0) return {};
  return {{{Path::trivial(q.source(u)), Path::trivial(q.target(u))}, s}};
}

std::vector<std::pair<PathPair, int>> bracket_paths(const Quiver& q, const Word& a, const Word& b, Memo& memo) {
  if (a.empty() || b.empty()) return {};
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::map<PathPair, int> acc;
  auto add = [&](const std::optional<Path>& p, const std::optional<Path>& r, int c) {
    if (!p || !r || c == 0) return;
    int& slot = acc[{*p, *r}];
    slot += c;
  };
  if (b.size() == 1) {
    if (a.size() == 1) {
      for (auto& [pp, c] : bracket_letters(q, a[0], b[0])) add(pp.first, pp.second, c);
    } else {
      // [[P, b]] = -swap([[b, P]])
      for (auto& [pp, c] : bracket_paths(q, b, a, memo)) add(pp.second, pp.first, -c);
    }
  } else {
    // [[P, b Q']] = [[P, b]] Q' + b [[P, Q']]
    Word head{b[0]};
    Word tail(b.begin() + 1, b.end());
    Path tail_path = Path::from_word(q, tail);
    Path head_path = letter_path(q, b[0]);
    for (auto& [pp, c] : bracket_paths(q, a, head, memo)) add(pp.first, mul(q, pp.second, tail_path), c);
    for (auto& [pp, c] : bracket_paths(q, a, tail, memo)) add(mul(q, head_path, pp.first), pp.second, c);
  }
  std::vector<std::pair<PathPair, int>> out;
  for (auto& [pp, c] : acc) {
    if (c != 0) out.emplace_back(pp, c);
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

TensorElement double_bracket(const PathAlgebraElement& x, const PathAlgebraElement& y) {
  TensorElement out(common_context(x.context(), y.context()));
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  Memo memo;
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [r, d] : y.terms()) {
      HBarPolynomial cd = c * d;
      for (auto& [pp, s] : bracket_paths(q, p.letters, r.letters, memo)) {
        HBarPolynomial term = cd;
        term *= Rational(s);
        out.add(pp, term);
      }
    }
  }
  return out;
}

TensorElement double_bracket_closed_form(const PathAlgebraElement& x, const PathAlgebraElement& y) {
  TensorElement out(common_context(x.context(), y.context()));
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  for (const auto& [p, c] : x.terms()) {
    const Word& a = p.letters;
    for (const auto& [r, d] : y.terms()) {
      const Word& b = r.letters;
      HBarPolynomial cd = c * d;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          int s = generator_bracket(a[i], b[j]);
          if (s == 0) continue;
          std::size_t si = q.source(a[i]);
          std::size_t ti = q.target(a[i]);
          // (b_1..b_{j-1} e_s(a_i) a_{i+1}..a_k) (x) (a_1..a_{i-1} e_t(a_i) b_{j+1}..b_l)
          std::optional<Path> left = mul(q, subpath(q, b, 0, j, si), Path::trivial(si));
          if (left) left = mul(q, *left, subpath(q, a, i + 1, a.size(), si));
          std::optional<Path> right = mul(q, subpath(q, a, 0, i, ti), Path::trivial(ti));
          if (right) right = mul(q, *right, subpath(q, b, j + 1, b.size(), ti));
          HBarPolynomial term = cd;
          term *= Rational(s);
          add_tensor(q, out, left, right, term);
        }
      }
    }
  }
  return out;
}

TensorElement swap_factors(const TensorElement& t) {
  TensorElement out(t.context());
  for (const auto& [pp, c] : t.terms()) out.add({pp.second, pp.first}, c);
  return out;
}

PathAlgebraElement multiply_factors(const TensorElement& t) {
  PathAlgebraElement out(t.context());
  if (!t.context()) return out;
  for (const auto& [pp, c] : t.terms()) {
    if (auto p = concat(*t.context(), pp.first, pp.second)) out.add(*p, c);
  }
  return out;
}

TensorElement outer_action(const PathAlgebraElement& left, const TensorElement& t,
                           const PathAlgebraElement& right) {
  TensorElement out(common_context(common_context(left.context(), t.context()), right.context()));
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  for (const auto& [l, c] : left.terms()) {
    for (const auto& [pp, d] : t.terms()) {
      auto p = concat(q, l, pp.first);
      if (!p) continue;
      for (const auto& [r, e] : right.terms()) {
        auto s = concat(q, pp.second, r);
        if (s) out.add({*p, *s}, c * d * e);
      }
    }
  }
  return out;
}

MomentData moment_map(const QuiverPtr& q, std::vector<Rational> lambda) {
  if (lambda.empty()) lambda.assign(q->num_vertices(), Rational(0));
  if (lambda.size() != q->num_vertices()) throw DimensionError("lambda must cover every vertex");
  MomentData m;
  m.lambda = lambda;
  m.element = PathAlgebraElement(q);
  m.components.assign(q->num_vertices(), PathAlgebraElement(q));
  for (std::uint32_t a = 0; a < q->num_arrows(); ++a) {
    Letter plain{a, false};
    Letter star{a, true};
    const Arrow& arr = q->arrow(a);
    // a a* is a cycle at t(a), a* a at s(a).
    m.components[arr.target].add(Path::from_word(*q, {plain, star}), 1);
    m.components[arr.source].add(Path::from_word(*q, {star, plain}), -1);
  }
  for (std::size_t v = 0; v < q->num_vertices(); ++v) {
    m.components[v].add(Path::trivial(v), HBarPolynomial(-lambda[v]));
    m.element += m.components[v];
  }
  return m;
}

PathAlgebraElement xi(const GaugeExpression& g, const MomentData& m) {
  PathAlgebraElement out(m.element.context());
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  for (const auto& t : g.terms) {
    if (t.vertex >= m.components.size()) throw CompositionError("unknown vertex in gauge term");
    if (path_source(q, t.left) != t.vertex || path_target(q, t.right) != t.vertex) {
      throw CompositionError("gauge term is not composable with w_" + q.vertex_name(t.vertex));
    }
    PathAlgebraElement l = path_element(out.context(), t.left, t.coeff);
    PathAlgebraElement r = path_element(out.context(), t.right);
    out += path_mul(path_mul(l, m.components[t.vertex]), r);
  }
  return out;
}

}  // namespace nhq
