#pragma once

#include <string>
#include <vector>

#include "nhq/repspace.hpp"
#include "nhq/schedler.hpp"

namespace nhq {

enum class ValueKind { scalar, path, necklace, sym, tensor, configs, qpa, weyl, poly, gl };

std::string kind_name(ValueKind k);

/// A parsed expression. `configs` holds literal height configurations that
/// have not been checked or straightened yet.
struct Value {
  ValueKind kind = ValueKind::scalar;
  std::size_t position = 0;
  HBarPolynomial scalar;
  PathAlgebraElement path;
  HH0Element necklace;
  SymElement sym;
  TensorElement tensor;
  std::vector<std::pair<HeightConfiguration, HBarPolynomial>> configs;
  QPAElement qpa;
  WeylElement weyl;
  PolyElement poly;
  GlElement gl;
};

/// Parses the shared element grammar. Operator atoms ([a]_{p,q}, d(a)_{p,q},
/// (a)_{p,q}, (a')_{p,q}, E(v)_{p,q}) need a representation space.
Value parse_expression(const std::string& text, const QuiverPtr& q, const RepSpacePtr& r = nullptr);

PathAlgebraElement as_path(const Value& v, const QuiverPtr& q);
HH0Element as_necklace(const Value& v, const QuiverPtr& q);
SymElement as_sym(const Value& v, const QuiverPtr& q);
TensorElement as_tensor(const Value& v, const QuiverPtr& q);
/// Checks literal heights form a permutation of 1..N, then straightens.
QPAElement as_qpa(const Value& v, const QuiverPtr& q);
WeylElement as_weyl(const Value& v, const RepSpacePtr& r);
PolyElement as_poly(const Value& v, const RepSpacePtr& r);
GlElement as_gl(const Value& v, const RepSpacePtr& r);

/// Canonical text of any value, after straightening literal configurations.
std::string format_value(const Value& v, const QuiverPtr& q);

}  // namespace nhq
