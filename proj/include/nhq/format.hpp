#pragma once

#include <string>

#include "nhq/repspace.hpp"
#include "nhq/schedler.hpp"

namespace nhq {

std::string format(const Rational& c);
/// Top-level form, e.g. "1 + 2*h^2"; zero prints "0".
std::string format(const HBarPolynomial& c);

std::string format(const Quiver& q, Letter l);
/// Letters joined by '.', trivial paths as e_<vertex>.
std::string format(const Quiver& q, const Path& p);
std::string format(const Quiver& q, const Necklace& n);
std::string format(const Quiver& q, const SymMonomial& m);
/// Components as juxtaposed (letter,height) pairs, joined with idempotents by '&'.
std::string format(const Quiver& q, const HeightConfiguration& c);
std::string format(const Quiver& q, const PathPair& t);

std::string format(const PathAlgebraElement& x);
std::string format(const HH0Element& x);
std::string format(const TensorElement& x);
std::string format(const SymElement& x);
std::string format(const QPAElement& x);

/// Positions [a]_{p,q}, derivatives d(a)_{p,q}, 1-based indices.
std::string format(const RepSpace& r, const Monomial& m, bool weyl);
std::string format(const WeylElement& x);
/// Positions (a)_{p,q}, momenta (a')_{p,q}.
std::string format(const PolyElement& x);
/// Elementary matrices E(v)_{p,q}.
std::string format(const GlElement& x);

/// Joins signed terms "c*body"; body may be empty for a scalar term.
std::string join_terms(const std::vector<std::pair<std::string, HBarPolynomial>>& terms);

}  // namespace nhq
