#include "nhq/schedler.hpp"

#include <algorithm>
#include <random>

#include "nhq/error.hpp"

namespace nhq {

SymMonomial SymMonomial::from_factors(std::vector<Necklace> f) {
  std::sort(f.begin(), f.end());
  return {std::move(f)};
}

Word HeightComponent::word() const {
  Word w;
  w.reserve(letters.size());
  for (const auto& hl : letters) w.push_back(hl.letter);
  return w;
}

std::uint32_t HeightComponent::min_height() const {
  std::uint32_t m = letters.front().height;
  for (const auto& hl : letters) m = std::min(m, hl.height);
  return m;
}

std::size_t HeightConfiguration::letter_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.letters.size();
  return n;
}

void validate(const Quiver& q, const HeightConfiguration& cfg) {
  std::vector<std::uint32_t> heights;
  for (const auto& c : cfg.components) {
    if (c.letters.empty()) throw CompositionError("empty height component");
    for (const auto& hl : c.letters) {
      if (hl.letter.arrow >= q.num_arrows()) throw CompositionError("unknown arrow in configuration");
      heights.push_back(hl.height);
    }
    if (!q.cyclically_composable(c.word())) throw CompositionError("height component is not a cycle");
  }
  std::sort(heights.begin(), heights.end());
  if (std::adjacent_find(heights.begin(), heights.end()) != heights.end()) {
    throw CompositionError("heights are not distinct");
  }
  for (std::size_t v : cfg.idempotents) {
    if (v >= q.num_vertices()) throw CompositionError("unknown vertex in configuration");
  }
}

HeightConfiguration normalize(HeightConfiguration cfg) {
  std::vector<std::uint32_t> heights;
  for (const auto& c : cfg.components) {
    for (const auto& hl : c.letters) heights.push_back(hl.height);
  }
  std::sort(heights.begin(), heights.end());
  for (auto& c : cfg.components) {
    for (auto& hl : c.letters) {
      hl.height = static_cast<std::uint32_t>(std::lower_bound(heights.begin(), heights.end(), hl.height) - heights.begin()) + 1;
    }
    auto lowest = std::min_element(c.letters.begin(), c.letters.end(),
                                   [](const HeightedLetter& a, const HeightedLetter& b) { return a.height < b.height; });
    std::rotate(c.letters.begin(), lowest, c.letters.end());
  }
  std::sort(cfg.components.begin(), cfg.components.end(),
            [](const HeightComponent& a, const HeightComponent& b) {
              return a.letters.front().height < b.letters.front().height;
            });
  std::sort(cfg.idempotents.begin(), cfg.idempotents.end());
  return cfg;
}

namespace {

struct Block {
  Necklace necklace;
  std::uint32_t start_height;
  std::size_t component;
  std::size_t start;
};

// target[h - 1] is the canonical position of the letter at height h.
std::vector<std::uint32_t> canonical_targets(const Quiver& q, const HeightConfiguration& cfg) {
  std::vector<Block> blocks;
  std::size_t n = 0;
  for (std::size_t ci = 0; ci < cfg.components.size(); ++ci) {
    const auto& c = cfg.components[ci];
    Word w = c.word();
    n += w.size();
    std::size_t best = 0;
    bool found = false;
    for (std::size_t k : canonical_offsets(w)) {
      if (!found || c.letters[k].height < c.letters[best].height) best = k;
      found = true;
    }
    blocks.push_back({Necklace{rotate(w, best), q.target(w[best])}, c.letters[best].height, ci, best});
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.necklace != b.necklace) return a.necklace < b.necklace;
    return a.start_height < b.start_height;
  });
  std::vector<std::uint32_t> target(n, 0);
  std::uint32_t offset = 0;
  for (const auto& b : blocks) {
    const auto& letters = cfg.components[b.component].letters;
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      target[letters[(b.start + pos) % letters.size()].height - 1] = offset + static_cast<std::uint32_t>(pos);
    }
    offset += static_cast<std::uint32_t>(letters.size());
  }
  return target;
}

std::size_t count_inversions(const std::vector<std::uint32_t>& t) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) inv += t[i] > t[j] ? 1 : 0;
  }
  return inv;
}

struct Position {
  std::size_t component;
  std::size_t index;
};

Position find_height(const HeightConfiguration& cfg, std::uint32_t h) {
  for (std::size_t ci = 0; ci < cfg.components.size(); ++ci) {
    const auto& letters = cfg.components[ci].letters;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k].height == h) return {ci, k};
    }
  }
  throw CompositionError("height not present in configuration");
}

// letters[from], letters[from+1], ... (count letters, cyclically).
std::vector<HeightedLetter> arc(const std::vector<HeightedLetter>& letters, std::size_t from, std::size_t count) {
  std::vector<HeightedLetter> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(letters[(from + k) % letters.size()]);
  return out;
}

}  // namespace

bool is_canonical(const Quiver& q, const HeightConfiguration& cfg) {
  auto t = canonical_targets(q, cfg);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] != k) return false;
  }
  return true;
}

std::size_t inversion_count(const Quiver& q, const HeightConfiguration& cfg) {
  return count_inversions(canonical_targets(q, cfg));
}

SkeinStep skein_step(const Quiver& q, const HeightConfiguration& cfg, std::uint32_t h) {
  Position lo = find_height(cfg, h);
  Position hi = find_height(cfg, h + 1);
  Letter u = cfg.components[lo.component].letters[lo.index].letter;
  Letter up = cfg.components[hi.component].letters[hi.index].letter;

  SkeinStep step;
  HeightConfiguration swapped = cfg;
  swapped.components[lo.component].letters[lo.index].height = h + 1;
  swapped.components[hi.component].letters[hi.index].height = h;
  step.swapped = normalize(std::move(swapped));
  step.scalar = generator_bracket(u, up);
  if (step.scalar == 0) return step;

  HeightConfiguration corr;
  corr.idempotents = cfg.idempotents;
  if (lo.component != hi.component) {
    const auto& a = cfg.components[lo.component].letters;
    const auto& b = cfg.components[hi.component].letters;
    HeightComponent merged;
    merged.letters = arc(a, lo.index + 1, a.size() - 1);
    auto rest = arc(b, hi.index + 1, b.size() - 1);
    merged.letters.insert(merged.letters.end(), rest.begin(), rest.end());
    if (merged.letters.empty()) {
      corr.idempotents.push_back(q.target(a[(lo.index + 1) % a.size()].letter));
    } else {
      corr.components.push_back(std::move(merged));
    }
    for (std::size_t ci = 0; ci < cfg.components.size(); ++ci) {
      if (ci != lo.component && ci != hi.component) corr.components.push_back(cfg.components[ci]);
    }
  } else {
    const auto& c = cfg.components[lo.component].letters;
    std::size_t m = c.size();
    std::size_t j = lo.index;
    std::size_t jp = hi.index;
    // A1 runs from after u' to before u, A2 from after u to before u'.
    std::size_t n1 = (j + m - jp - 1) % m;
    std::size_t n2 = (jp + m - j - 1) % m;
    for (auto [from, count] : {std::pair{jp + 1, n1}, std::pair{j + 1, n2}}) {
      if (count == 0) {
        corr.idempotents.push_back(q.target(c[from % m].letter));
      } else {
        corr.components.push_back({arc(c, from, count)});
      }
    }
    for (std::size_t ci = 0; ci < cfg.components.size(); ++ci) {
      if (ci != lo.component) corr.components.push_back(cfg.components[ci]);
    }
  }
  step.correction = normalize(std::move(corr));
  return step;
}

Straightener::Straightener(QuiverPtr q, StraightenOptions options)
    : q_(std::move(q)), options_(options), rng_state_(options.seed) {}

const Straightener::Terms& Straightener::expand(const HeightConfiguration& cfg) {
  if (auto it = memo_.find(cfg); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  auto t = canonical_targets(*q_, cfg);
  std::vector<std::uint32_t> descents;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (t[k] > t[k + 1]) descents.push_back(static_cast<std::uint32_t>(k + 1));
  }
  Terms result;
  if (descents.empty()) {
    result.emplace(cfg, HBarPolynomial(1));
  } else {
    std::uint32_t h = descents.front();
    switch (options_.strategy) {
      case RewriteStrategy::lowest_first:
        break;
      case RewriteStrategy::highest_first:
        h = descents.back();
        break;
      case RewriteStrategy::random: {
        std::mt19937_64 rng(rng_state_);
        rng_state_ = rng();
        h = descents[rng_state_ % descents.size()];
        break;
      }
    }
    ++stats_.rewrites;
    SkeinStep step = skein_step(*q_, cfg, h);
    if (options_.check_measure) {
      std::size_t before = count_inversions(t);
      if (inversion_count(*q_, step.swapped) >= before) ++stats_.measure_violations;
      if (step.scalar != 0 && step.correction.letter_count() + 2 != cfg.letter_count()) ++stats_.measure_violations;
    }
    result = expand(step.swapped);
    if (step.scalar != 0) {
      HBarPolynomial factor = HBarPolynomial::hbar(1, Rational(-step.scalar));
      const Terms& corr = expand(step.correction);
      for (const auto& [k, c] : corr) {
        auto [it, inserted] = result.try_emplace(k, c * factor);
        if (!inserted) {
          it->second += c * factor;
          if (it->second.is_zero()) result.erase(it);
        }
      }
    }
  }
  if (!options_.memoize) {
    scratch_ = std::move(result);
    return scratch_;
  }
  return memo_.emplace(cfg, std::move(result)).first->second;
}

QPAElement Straightener::straighten(const HeightConfiguration& cfg) {
  validate(*q_, cfg);
  QPAElement out(q_);
  Terms terms = expand(normalize(cfg));
  for (const auto& [k, c] : terms) out.add(k, c);
  return out;
}

QPAElement Straightener::straighten(const QPAElement& x) {
  QPAElement out(q_);
  for (const auto& [cfg, c] : x.terms()) out.add_scaled(straighten(cfg), c);
  return out;
}

QPAElement straighten(const QuiverPtr& q, const HeightConfiguration& cfg, const StraightenOptions& options) {
  Straightener s(q, options);
  return s.straighten(cfg);
}

QPAElement config_element(const QuiverPtr& q, const HeightConfiguration& cfg, const HBarPolynomial& c) {
  return QPAElement(q, normalize(cfg), c);
}

QPAElement qpa_unit(const QuiverPtr& q) { return QPAElement(q, HeightConfiguration{}); }

namespace {

QuiverPtr common_quiver(const QuiverPtr& a, const QuiverPtr& b) {
  if (a && b && a != b && !(*a == *b)) throw MismatchError("operands belong to different quivers");
  return a ? a : b;
}

HeightConfiguration stack(const HeightConfiguration& x, const HeightConfiguration& y) {
  HeightConfiguration out = x;
  auto shift = static_cast<std::uint32_t>(x.letter_count());
  for (auto c : y.components) {
    for (auto& hl : c.letters) hl.height += shift;
    out.components.push_back(std::move(c));
  }
  out.idempotents.insert(out.idempotents.end(), y.idempotents.begin(), y.idempotents.end());
  return out;
}

}  // namespace

QPAElement qpa_mul(const QPAElement& x, const QPAElement& y, Straightener& s) {
  QuiverPtr q = common_quiver(x.context(), y.context());
  QPAElement out(q);
  for (const auto& [cx, a] : x.terms()) {
    for (const auto& [cy, b] : y.terms()) out.add_scaled(s.straighten(stack(cx, cy)), a * b);
  }
  return out;
}

QPAElement qpa_mul(const QPAElement& x, const QPAElement& y) {
  QuiverPtr q = common_quiver(x.context(), y.context());
  if (!q) return QPAElement();
  Straightener s(q);
  return qpa_mul(x, y, s);
}

QPAElement qpa_comm(const QPAElement& x, const QPAElement& y) {
  QuiverPtr q = common_quiver(x.context(), y.context());
  if (!q) return QPAElement();
  Straightener s(q);
  return qpa_mul(x, y, s) - qpa_mul(y, x, s);
}

HeightConfiguration canonical_configuration(const Quiver& q, const SymMonomial& m) {
  HeightConfiguration cfg;
  std::uint32_t h = 1;
  for (const auto& n : m.factors) {
    if (n.is_idempotent()) {
      cfg.idempotents.push_back(n.vertex);
      continue;
    }
    Necklace c = canonical_necklace(q, n.word);
    HeightComponent comp;
    for (Letter l : c.word) comp.letters.push_back({l, h++});
    cfg.components.push_back(std::move(comp));
  }
  return normalize(std::move(cfg));
}

QPAElement lift(const SymElement& m) {
  QPAElement out(m.context());
  if (!m.context()) return out;
  for (const auto& [mono, c] : m.terms()) out.add(canonical_configuration(*m.context(), mono), c);
  return out;
}

SymElement sym_element(const HH0Element& x) {
  SymElement out(x.context());
  for (const auto& [n, c] : x.terms()) out.add(SymMonomial{{n}}, c);
  return out;
}

QPAElement lift(const HH0Element& x) { return lift(sym_element(x)); }

SymMonomial project(const Quiver& q, const HeightConfiguration& cfg) {
  std::vector<Necklace> f;
  for (const auto& c : cfg.components) f.push_back(canonical_necklace(q, c.word()));
  for (std::size_t v : cfg.idempotents) f.push_back(Necklace::idempotent(v));
  return SymMonomial::from_factors(std::move(f));
}

SymElement project(const QPAElement& x) {
  SymElement out(x.context());
  if (!x.context()) return out;
  for (const auto& [cfg, c] : x.terms()) out.add(project(*x.context(), cfg), c);
  return out;
}

SymElement sym_mul(const SymElement& x, const SymElement& y) {
  SymElement out(common_quiver(x.context(), y.context()));
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [b, d] : y.terms()) {
      std::vector<Necklace> f = a.factors;
      f.insert(f.end(), b.factors.begin(), b.factors.end());
      out.add(SymMonomial::from_factors(std::move(f)), c * d);
    }
  }
  return out;
}

namespace {

HeightConfiguration word_configuration(const Word& w, std::size_t vertex_if_empty) {
  HeightConfiguration cfg;
  if (w.empty()) {
    cfg.idempotents.push_back(vertex_if_empty);
    return cfg;
  }
  HeightComponent comp;
  std::uint32_t h = 1;
  for (Letter l : w) comp.letters.push_back({l, h++});
  cfg.components.push_back(std::move(comp));
  return normalize(std::move(cfg));
}

}  // namespace

QPAElement moment_lift(const QuiverPtr& q) {
  Straightener s(q);
  QPAElement out(q);
  for (std::uint32_t a = 0; a < q->num_arrows(); ++a) {
    Letter plain{a, false};
    Letter star{a, true};
    out += s.straighten(word_configuration({plain, star}, 0));
    out -= s.straighten(word_configuration({star, plain}, 0));
  }
  return out;
}

ReductionParameters ReductionParameters::zero(const Quiver& q) {
  return {std::vector<Rational>(q.num_vertices(), Rational(0)), std::vector<Rational>(q.num_vertices(), Rational(0))};
}

Path marked_path(const Quiver& q, const Necklace& n, std::size_t mark, std::size_t i) {
  if (n.is_idempotent()) {
    if (n.vertex != i) throw CompositionError("idempotent class does not sit at the marked vertex");
    return Path::trivial(i);
  }
  if (mark >= n.word.size()) throw CompositionError("mark outside the necklace");
  Word w = rotate(n.word, mark);
  if (q.target(w.front()) != i) throw CompositionError("marked occurrence does not pass through the vertex");
  return Path::from_word(q, w);
}

QPAElement ideal_generator(const QuiverPtr& q, const Path& p, std::size_t i, const ReductionParameters& params,
                           IdealLift mode) {
  if (i >= q->num_vertices()) throw CompositionError("unknown vertex");
  if (path_source(*q, p) != i || path_target(*q, p) != i) {
    throw CompositionError("path is not a cycle through the marked vertex");
  }
  std::vector<Rational> lambda(q->num_vertices());
  for (std::size_t v = 0; v < lambda.size(); ++v) lambda[v] = params.lambda_at(v);
  MomentData m = moment_map(q, lambda);
  const PathAlgebraElement& wi = m.components[i];
  HBarPolynomial r_term = HBarPolynomial::hbar(1, params.r_at(i));
  if (mode == IdealLift::canonical) {
    HH0Element x = natural_projection(path_mul(path_element(q, p), wi));
    x.add_scaled(natural_projection(path_element(q, p)), r_term);
    return lift(x);
  }
  Straightener s(q);
  QPAElement out(q);
  for (const auto& [t, c] : wi.terms()) {
    Word w = p.letters;
    w.insert(w.end(), t.letters.begin(), t.letters.end());
    out.add_scaled(s.straighten(word_configuration(w, i)), c);
  }
  out.add_scaled(s.straighten(word_configuration(p.letters, i)), r_term);
  return out;
}

}  // namespace nhq
