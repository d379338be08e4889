#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nhq/necklace.hpp"

namespace nhq {

/// A sorted multiset of necklaces, [x_1]&...&[x_k].
struct SymMonomial {
  std::vector<Necklace> factors;

  static SymMonomial from_factors(std::vector<Necklace> f);
  auto operator<=>(const SymMonomial&) const = default;
};

using SymElement = LinearCombination<SymMonomial, HBarPolynomial, Quiver>;

struct HeightedLetter {
  Letter letter;
  std::uint32_t height = 0;
  auto operator<=>(const HeightedLetter&) const = default;
};

/// A cyclic word with heights, stored starting at its lowest height.
struct HeightComponent {
  std::vector<HeightedLetter> letters;

  Word word() const;
  std::uint32_t min_height() const;
  auto operator<=>(const HeightComponent&) const = default;
};

/// Components with pairwise distinct heights plus height-free idempotent
/// factors. The empty configuration is the unit.
struct HeightConfiguration {
  std::vector<HeightComponent> components;
  std::vector<std::size_t> idempotents;

  std::size_t letter_count() const;
  auto operator<=>(const HeightConfiguration&) const = default;
};

using QPAElement = LinearCombination<HeightConfiguration, HBarPolynomial, Quiver>;

/// Throws CompositionError if a component is not a cycle or heights repeat.
void validate(const Quiver& q, const HeightConfiguration& cfg);

/// Renumbers heights to 1..N, rotates components to start at their lowest
/// height, sorts components by that height and sorts the idempotents.
HeightConfiguration normalize(HeightConfiguration cfg);

/// Whether cfg (assumed normalized) is a PBW canonical configuration.
bool is_canonical(const Quiver& q, const HeightConfiguration& cfg);

/// Number of height pairs out of canonical order.
std::size_t inversion_count(const Quiver& q, const HeightConfiguration& cfg);

enum class RewriteStrategy { lowest_first, highest_first, random };

struct StraightenOptions {
  RewriteStrategy strategy = RewriteStrategy::lowest_first;
  std::uint64_t seed = 0;
  /// Asserts that (letter count, inversion count) drops along every rewrite.
  bool check_measure = false;
  bool memoize = true;
};

struct StraightenStats {
  std::size_t rewrites = 0;
  std::size_t memo_hits = 0;
  std::size_t measure_violations = 0;
};

/// Skein-relation rewriting to PBW normal form, with a memo shared across
/// calls.
class Straightener {
 public:
  Straightener(QuiverPtr q, StraightenOptions options = {});

  QPAElement straighten(const HeightConfiguration& cfg);
  QPAElement straighten(const QPAElement& x);
  const StraightenStats& stats() const { return stats_; }

 private:
  using Terms = std::map<HeightConfiguration, HBarPolynomial>;
  const Terms& expand(const HeightConfiguration& normalized);

  QuiverPtr q_;
  StraightenOptions options_;
  StraightenStats stats_;
  std::uint64_t rng_state_;
  std::map<HeightConfiguration, Terms> memo_;
  Terms scratch_;
};

QPAElement straighten(const QuiverPtr& q, const HeightConfiguration& cfg, const StraightenOptions& options = {});

/// One rewrite step on the adjacent heights h, h+1 of a normalized
/// configuration: cfg = swapped - hbar * {u, u'} * correction.
struct SkeinStep {
  HeightConfiguration swapped;
  int scalar = 0;
  HeightConfiguration correction;
};
SkeinStep skein_step(const Quiver& q, const HeightConfiguration& cfg, std::uint32_t h);

QPAElement config_element(const QuiverPtr& q, const HeightConfiguration& cfg,
                          const HBarPolynomial& c = HBarPolynomial(1));
QPAElement qpa_unit(const QuiverPtr& q);

QPAElement qpa_mul(const QPAElement& x, const QPAElement& y);
QPAElement qpa_mul(const QPAElement& x, const QPAElement& y, Straightener& s);
QPAElement qpa_comm(const QPAElement& x, const QPAElement& y);

HeightConfiguration canonical_configuration(const Quiver& q, const SymMonomial& m);
QPAElement lift(const SymElement& m);
QPAElement lift(const HH0Element& x);
SymMonomial project(const Quiver& q, const HeightConfiguration& cfg);
SymElement project(const QPAElement& x);

/// Symmetric product of SymElements.
SymElement sym_mul(const SymElement& x, const SymElement& y);
SymElement sym_element(const HH0Element& x);

QPAElement moment_lift(const QuiverPtr& q);

struct ReductionParameters {
  std::vector<Rational> r;
  std::vector<Rational> lambda;

  static ReductionParameters zero(const Quiver& q);
  Rational r_at(std::size_t v) const { return v < r.size() ? r[v] : Rational(0); }
  Rational lambda_at(std::size_t v) const { return v < lambda.size() ? lambda[v] : Rational(0); }
};

/// How ideal generators are lifted. `marked` straightens the height word of
/// p.(w_i - lambda_i e_i + hbar r_i e_i) with heights in written order, so it
/// depends on the marked base point; `canonical` lifts the necklace classes.
enum class IdealLift { marked, canonical };

/// p is a closed path at i (or the trivial path at i); the splice point is
/// between p and w_i.
QPAElement ideal_generator(const QuiverPtr& q, const Path& p, std::size_t i, const ReductionParameters& params,
                           IdealLift mode = IdealLift::marked);

/// Marked necklace form: the mark is the letter position k with t(word[k]) = i;
/// p is the rotation of the word starting at k.
Path marked_path(const Quiver& q, const Necklace& n, std::size_t mark, std::size_t i);

}  // namespace nhq
