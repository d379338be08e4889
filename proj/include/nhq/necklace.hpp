#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nhq/quiver.hpp"

namespace nhq {

/// A basis element of HH_0: an idempotent class [e_v] (empty word) or a
/// cyclic word in its minimal rotation.
///
/// Ordering is the basis order: idempotent classes first by vertex, then
/// words by length and lexicographically.
struct Necklace {
  Word word;
  std::size_t vertex = 0;

  static Necklace idempotent(std::size_t v) { return {{}, v}; }
  bool is_idempotent() const { return word.empty(); }
  std::size_t length() const { return word.size(); }

  bool operator==(const Necklace&) const = default;
  std::strong_ordering operator<=>(const Necklace& other) const;
};

using HH0Element = LinearCombination<Necklace, HBarPolynomial, Quiver>;
using PathPair = std::pair<Path, Path>;
using TensorElement = LinearCombination<PathPair, HBarPolynomial, Quiver>;

/// Index of the lexicographically minimal rotation.
std::size_t minimal_rotation(const Word& w);
/// All offsets k with rotate(w, k) equal to the minimal rotation.
std::vector<std::size_t> canonical_offsets(const Word& w);
Word rotate(const Word& w, std::size_t k);

/// Throws CompositionError unless the word is cyclically composable.
Necklace canonical_necklace(const Quiver& q, const Word& w);

HH0Element necklace_element(const QuiverPtr& q, const Necklace& n,
                            const HBarPolynomial& c = HBarPolynomial(1));

HH0Element natural_projection(const PathAlgebraElement& x);

/// {u, v}: +1 for (a, a*), -1 for (a*, a), 0 otherwise.
int generator_bracket(Letter u, Letter v);

HH0Element necklace_bracket(const HH0Element& x, const HH0Element& y);

/// Computed by Leibniz expansion in the second argument and antisymmetry in
/// the first.
TensorElement double_bracket(const PathAlgebraElement& x, const PathAlgebraElement& y);
/// The same biderivation evaluated by the closed double-sum formula.
TensorElement double_bracket_closed_form(const PathAlgebraElement& x, const PathAlgebraElement& y);

/// Exchanges the tensor factors.
TensorElement swap_factors(const TensorElement& t);
/// Multiplies the tensor factors: P (x) Q -> P.Q.
PathAlgebraElement multiply_factors(const TensorElement& t);
/// Outer bimodule action a (P (x) Q) b = aP (x) Qb.
TensorElement outer_action(const PathAlgebraElement& left, const TensorElement& t,
                           const PathAlgebraElement& right);

struct MomentData {
  std::vector<Rational> lambda;
  /// w - sum_i lambda_i e_i.
  PathAlgebraElement element;
  /// e_i (w - lambda) e_i, one per vertex.
  std::vector<PathAlgebraElement> components;
};

/// lambda may be empty (all zero) or have one entry per vertex.
MomentData moment_map(const QuiverPtr& q, std::vector<Rational> lambda = {});

struct GaugeTerm {
  Path left;
  std::size_t vertex = 0;
  Path right;
  HBarPolynomial coeff = HBarPolynomial(1);
};

/// Presentation sum c * left E_vertex right of an element of the gauge bimodule.
struct GaugeExpression {
  std::vector<GaugeTerm> terms;
};

/// sum c * left . w_vertex . right.
PathAlgebraElement xi(const GaugeExpression& g, const MomentData& m);

}  // namespace nhq
