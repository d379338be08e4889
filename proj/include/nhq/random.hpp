#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "nhq/schedler.hpp"

namespace nhq {

/// Deterministic generator for randomized checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// A quiver with 1..max_vertices vertices and 1..max_arrows arrows.
QuiverPtr random_quiver(Rng& rng, std::size_t max_vertices = 3, std::size_t max_arrows = 4);

/// A cyclically composable word of exactly `length` letters, if one exists.
std::optional<Word> random_cycle(const Quiver& q, Rng& rng, std::size_t length);
/// A cyclically composable word whose base vertex t(w[0]) is `vertex`.
std::optional<Word> random_cycle_at(const Quiver& q, Rng& rng, std::size_t length, std::size_t vertex);

/// A canonical necklace word of length 1..max_length.
Necklace random_necklace(const Quiver& q, Rng& rng, std::size_t max_length);

HBarPolynomial random_coefficient(Rng& rng, bool allow_hbar);

HH0Element random_hh0(const QuiverPtr& q, Rng& rng, std::size_t terms, std::size_t max_length);
SymElement random_sym(const QuiverPtr& q, Rng& rng, std::size_t terms, std::size_t max_factors, std::size_t max_length);
/// Components of total length at most max_letters with a random height permutation.
HeightConfiguration random_configuration(const Quiver& q, Rng& rng, std::size_t max_letters);

}  // namespace nhq
