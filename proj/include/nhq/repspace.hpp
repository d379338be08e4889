#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nhq/necklace.hpp"

namespace nhq {

/// One matrix entry of an arrow: (a)_{row,col}, 0-based.
struct Slot {
  std::uint32_t arrow = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;
};

/// T* Rep^Q_d: coordinates (a)_{p,q} with p < d_t(a), q < d_s(a), and their
/// momenta. Every position slot s carries the derivative d/d(a)_{p,q}, which
/// is the operator [a*]_{q,p}; the classical momentum (a*)_{q,p} uses the
/// same slot index.
class RepSpace {
 public:
  RepSpace(QuiverPtr q, std::vector<std::size_t> dims);

  const QuiverPtr& quiver() const { return q_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t num_slots() const { return slots_.size(); }
  const Slot& slot_info(std::size_t s) const { return slots_[s]; }

  /// Slot of (a)_{p,q}.
  std::size_t slot(std::size_t arrow, std::size_t p, std::size_t q) const;
  /// Slot carrying the entry [l]_{p,q}: (a)_{p,q} for plain l, (a)_{q,p} for l = a*.
  std::size_t letter_slot(Letter l, std::size_t p, std::size_t q) const;
  /// Row and column bounds of the matrix of a letter.
  std::size_t rows(Letter l) const { return dims_[q_->target(l)]; }
  std::size_t cols(Letter l) const { return dims_[q_->source(l)]; }

  bool operator==(const RepSpace& other) const { return *q_ == *other.q_ && dims_ == other.dims_; }

 private:
  QuiverPtr q_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<Slot> slots_;
};

using RepSpacePtr = std::shared_ptr<const RepSpace>;

RepSpacePtr make_repspace(const QuiverPtr& q, std::vector<std::size_t> dims);

/// Exponents over positions and momenta (derivatives in the Weyl case), one
/// entry per slot. Weyl monomials are normal ordered: positions left of
/// derivatives.
struct Monomial {
  std::vector<std::uint16_t> pos;
  std::vector<std::uint16_t> mom;

  static Monomial one(std::size_t slots) { return {std::vector<std::uint16_t>(slots, 0), std::vector<std::uint16_t>(slots, 0)}; }
  std::size_t degree() const;
  std::size_t momentum_degree() const;
  auto operator<=>(const Monomial&) const = default;
};

using WeylElement = LinearCombination<Monomial, HBarPolynomial, RepSpace>;
using PolyElement = LinearCombination<Monomial, Rational, RepSpace>;

WeylElement weyl_scalar(const RepSpacePtr& r, const HBarPolynomial& c);
/// Multiplication operator [a]_{p,q} at a slot.
WeylElement weyl_position(const RepSpacePtr& r, std::size_t slot);
/// Derivative d/d(slot).
WeylElement weyl_derivative(const RepSpacePtr& r, std::size_t slot);
/// [l]_{p,q}: multiplication for plain letters, derivative [a*]_{p,q} = d/d(a)_{q,p} for starred.
WeylElement weyl_letter(const RepSpacePtr& r, Letter l, std::size_t p, std::size_t q);

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);
/// x * [l]_{p,q}, cheaper than a general product.
WeylElement weyl_mul_letter(const WeylElement& x, Letter l, std::size_t p, std::size_t q);
WeylElement weyl_comm(const WeylElement& x, const WeylElement& y);

PolyElement poly_scalar(const RepSpacePtr& r, const Rational& c);
PolyElement poly_position(const RepSpacePtr& r, std::size_t slot);
PolyElement poly_momentum(const RepSpacePtr& r, std::size_t slot);
/// (l)_{p,q}: (a)_{p,q} or the momentum coordinate (a*)_{p,q}.
PolyElement poly_letter(const RepSpacePtr& r, Letter l, std::size_t p, std::size_t q);
PolyElement poly_mul(const PolyElement& x, const PolyElement& y);
/// d f / d(position slot) or d f / d(momentum slot).
PolyElement poly_derivative(const PolyElement& f, std::size_t slot, bool momentum);

/// Sets hbar = 0 and reads operators as coordinates.
PolyElement classical_symbol(const WeylElement& d);
/// Normal-ordered quantization of a polynomial (positions left, derivatives right).
WeylElement normal_quantization(const PolyElement& f);

PolyElement poisson(const PolyElement& f, const PolyElement& g);
/// The biderivation whose values on coordinates are read off the double
/// bracket of the underlying letters.
PolyElement poisson_via_double_bracket(const PolyElement& f, const PolyElement& g);

/// Matrix entry (x)_{row,col} of a path: the contracted product of letter
/// entries; trivial paths give the identity.
PolyElement path_entry_classical(const RepSpacePtr& r, const Path& p, std::size_t row, std::size_t col);
/// Same with operators multiplied in written order.
WeylElement path_entry_quantum(const RepSpacePtr& r, const Path& p, std::size_t row, std::size_t col);

struct GlIndex {
  std::uint32_t vertex = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  auto operator<=>(const GlIndex&) const = default;
};

using GlElement = LinearCombination<GlIndex, Rational, RepSpace>;

GlElement gl_unit(const RepSpacePtr& r, std::size_t vertex, std::size_t p, std::size_t q);
/// Sum of e^vertex_{l,l}.
GlElement gl_identity(const RepSpacePtr& r, std::size_t vertex);
GlElement gl_bracket(const GlElement& x, const GlElement& y);
std::vector<GlIndex> gl_basis(const RepSpace& r);

WeylElement tau(const GlElement& v);
/// The derivation (E_i)_{p,q} on polynomial functions.
PolyElement gauge_act(std::size_t vertex, std::size_t p, std::size_t q, const PolyElement& f);

/// sum_k c_k tr_k on gl_d.
struct Character {
  std::vector<Rational> c;
  Rational operator()(const GlElement& v) const;
  bool operator==(const Character&) const = default;
};

/// c_k = -sum_{s(a)=k} d_t(a) + r_k.
Character chi_from_r(const RepSpace& r, const std::vector<Rational>& rvec);
/// c_k = -sum_{s(a)=k} d_t(a) - r_k.
Character chi_proof_variant(const RepSpace& r, const std::vector<Rational>& rvec);
/// c_k = +sum_{s(a)=k} d_t(a) + r_k.
Character chi_statement_variant(const RepSpace& r, const std::vector<Rational>& rvec);
/// sum_{s(a)=k} d_t(a).
std::vector<Rational> outgoing_dimension(const RepSpace& r);

/// Basis of ker tau by exact null-space computation over the operator basis.
std::vector<GlElement> tau_kernel(const RepSpacePtr& r);

template <class E>
struct BlockMatrix {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<E> entries;
  const E& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// x must be homogeneous: all paths share a source and a target.
BlockMatrix<PolyElement> block_matrix_classical(const RepSpacePtr& r, const PathAlgebraElement& x);
BlockMatrix<WeylElement> block_matrix_quantum(const RepSpacePtr& r, const PathAlgebraElement& x);

/// tr([w] v) + hbar sum_i r_i tr(I_i v); r may be empty.
WeylElement quantum_moment(const GlElement& v, const std::vector<Rational>& rvec = {});

}  // namespace nhq
