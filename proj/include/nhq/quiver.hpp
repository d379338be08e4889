#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nhq/linear_combination.hpp"
#include "nhq/scalar.hpp"

namespace nhq {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

/// An arrow of the doubled quiver: a or a*. Ordered by arrow index, plain
/// before starred.
struct Letter {
  std::uint32_t arrow = 0;
  bool starred = false;

  Letter star() const { return {arrow, !starred}; }
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// A finite quiver with vertices and arrows in declaration order.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;

  std::size_t source(Letter l) const {
    const Arrow& a = arrows_[l.arrow];
    return l.starred ? a.target : a.source;
  }
  std::size_t target(Letter l) const {
    const Arrow& a = arrows_[l.arrow];
    return l.starred ? a.source : a.target;
  }

  /// All 2n letters of the doubled quiver in letter order.
  std::vector<Letter> letters() const;

  /// Consecutive letters compose right to left: s(w[k]) == t(w[k+1]).
  bool composable(const Word& w) const;
  /// composable() plus the wraparound condition s(w.back()) == t(w.front()).
  bool cyclically_composable(const Word& w) const;

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path of the doubled quiver. An empty letter list is the trivial path at
/// `vertex`; for nontrivial paths `vertex` holds the target.
struct Path {
  Word letters;
  std::size_t vertex = 0;

  static Path trivial(std::size_t v) { return {{}, v}; }
  static Path from_word(const Quiver& q, Word w);

  bool is_trivial() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  auto operator<=>(const Path&) const = default;
};

std::size_t path_source(const Quiver& q, const Path& p);
std::size_t path_target(const Quiver& q, const Path& p);
bool is_closed(const Quiver& q, const Path& p);

/// p.q, or nullopt when s(p) != t(q).
std::optional<Path> concat(const Quiver& q, const Path& p, const Path& r);

using PathAlgebraElement = LinearCombination<Path, HBarPolynomial, Quiver>;

PathAlgebraElement path_element(const QuiverPtr& q, const Path& p,
                                const HBarPolynomial& c = HBarPolynomial(1));
PathAlgebraElement letter_element(const QuiverPtr& q, Letter l);
PathAlgebraElement unit_element(const QuiverPtr& q);

PathAlgebraElement path_mul(const PathAlgebraElement& x, const PathAlgebraElement& y);

QuiverPtr parse_quiver(const std::string& text);
QuiverPtr load_quiver(const std::string& filename);
std::string serialize_quiver(const Quiver& q);

/// True for names matching [A-Za-z_][A-Za-z0-9_]*.
bool valid_identifier(const std::string& name);
/// Vertex names may also start with a digit ("0", "inf").
bool valid_vertex_name(const std::string& name);

}  // namespace nhq
