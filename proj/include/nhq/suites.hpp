#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhq/trace.hpp"

namespace nhq {

/// The bundled example quivers: "jordan", "a2" and "a3p".
QuiverPtr builtin_quiver(const std::string& name);

struct SuiteConfig {
  /// Null means a fresh random quiver per case.
  QuiverPtr quiver;
  /// Unset means random d_i in 1..2 per case.
  std::optional<std::vector<std::size_t>> dims;
  std::size_t cases = 20;
  std::uint64_t seed = 7;
  /// Empty means random r per case where the suite uses r.
  std::vector<Rational> r;
  std::vector<Rational> lambda;
};

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  VerificationReport report;
};

std::vector<std::string> suite_names();
/// Throws Error for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace nhq
