#pragma once

#include <optional>
#include <vector>

#include "nhq/scalar.hpp"

namespace nhq {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> null_space(RationalMatrix m, std::size_t cols);

struct LinearSolution {
  /// One particular solution (free variables set to zero).
  std::vector<Rational> x;
  /// Number of free variables; zero means the solution is unique.
  std::size_t free_variables = 0;
};

/// Solves m x = b exactly; nullopt if inconsistent.
std::optional<LinearSolution> solve_linear(RationalMatrix m, std::vector<Rational> b, std::size_t cols);

}  // namespace nhq
