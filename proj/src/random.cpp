#include "nhq/random.hpp"

#include <algorithm>
#include <numeric>

namespace nhq {

QuiverPtr random_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_arrows) {
  std::size_t nv = 1 + rng.below(max_vertices);
  std::size_t na = 1 + rng.below(max_arrows);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < na; ++a) {
    arrows.push_back({"a" + std::to_string(a), rng.below(nv), rng.below(nv)});
  }
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

std::optional<Word> random_cycle_at(const Quiver& q, Rng& rng, std::size_t length, std::size_t v0) {
  if (length == 0) return std::nullopt;
  std::size_t nv = q.num_vertices();
  auto letters = q.letters();
  // reach[m][u]: some word of m letters leads from u back to v0.
  std::vector<std::vector<char>> reach(length + 1, std::vector<char>(nv, 0));
  reach[0][v0] = 1;
  for (std::size_t m = 1; m <= length; ++m) {
    for (Letter l : letters) {
      if (reach[m - 1][q.source(l)]) reach[m][q.target(l)] = 1;
    }
  }
  if (!reach[length][v0]) return std::nullopt;
  Word w;
  std::size_t current = v0;
  for (std::size_t k = 1; k <= length; ++k) {
    std::vector<Letter> options;
    for (Letter l : letters) {
      if (q.target(l) == current && reach[length - k][q.source(l)]) options.push_back(l);
    }
    Letter pick = options[rng.below(options.size())];
    w.push_back(pick);
    current = q.source(pick);
  }
  return w;
}

std::optional<Word> random_cycle(const Quiver& q, Rng& rng, std::size_t length) {
  std::vector<std::size_t> order(q.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
  for (std::size_t v : order) {
    if (auto w = random_cycle_at(q, rng, length, v)) return w;
  }
  return std::nullopt;
}

Necklace random_necklace(const Quiver& q, Rng& rng, std::size_t max_length) {
  std::size_t len = 1 + rng.below(max_length);
  for (std::size_t attempt = 0; attempt < 2 * max_length + 2; ++attempt) {
    if (auto w = random_cycle(q, rng, len)) return canonical_necklace(q, *w);
    len = len % max_length + 1;
  }
  // Every arrow gives the 2-cycle a a*.
  return canonical_necklace(q, {Letter{0, false}, Letter{0, true}});
}

HBarPolynomial random_coefficient(Rng& rng, bool allow_hbar) {
  long c0 = rng.between(-3, 3);
  if (c0 == 0) c0 = 1;
  if (!allow_hbar || !rng.chance(1, 3)) return HBarPolynomial(Rational(c0));
  return HBarPolynomial::from_coefficients({Rational(c0), Rational(rng.between(-2, 2))});
}

HH0Element random_hh0(const QuiverPtr& q, Rng& rng, std::size_t terms, std::size_t max_length) {
  HH0Element out(q);
  for (std::size_t t = 0; t < terms; ++t) out.add(random_necklace(*q, rng, max_length), random_coefficient(rng, false));
  return out;
}

SymElement random_sym(const QuiverPtr& q, Rng& rng, std::size_t terms, std::size_t max_factors,
                      std::size_t max_length) {
  SymElement out(q);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Necklace> f;
    std::size_t k = 1 + rng.below(max_factors);
    for (std::size_t i = 0; i < k; ++i) {
      if (rng.chance(1, 6)) f.push_back(Necklace::idempotent(rng.below(q->num_vertices())));
      else f.push_back(random_necklace(*q, rng, max_length));
    }
    out.add(SymMonomial::from_factors(std::move(f)), random_coefficient(rng, true));
  }
  return out;
}

HeightConfiguration random_configuration(const Quiver& q, Rng& rng, std::size_t max_letters) {
  HeightConfiguration cfg;
  std::size_t budget = max_letters;
  std::size_t slots = 1 + rng.below(3);
  for (std::size_t s = 0; s < slots && budget > 0; ++s) {
    std::size_t len = 1 + rng.below(budget);
    auto w = random_cycle(q, rng, len);
    if (!w) continue;
    HeightComponent c;
    for (Letter l : *w) c.letters.push_back({l, 0});
    cfg.components.push_back(std::move(c));
    budget -= len;
  }
  if (rng.chance(1, 4)) cfg.idempotents.push_back(rng.below(q.num_vertices()));
  std::vector<std::uint32_t> heights(cfg.letter_count());
  std::iota(heights.begin(), heights.end(), 1u);
  for (std::size_t k = heights.size(); k > 1; --k) std::swap(heights[k - 1], heights[rng.below(k)]);
  std::size_t next = 0;
  for (auto& c : cfg.components) {
    for (auto& hl : c.letters) hl.height = heights[next++];
  }
  return normalize(std::move(cfg));
}

}  // namespace nhq
