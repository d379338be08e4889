#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhq/repspace.hpp"
#include "nhq/schedler.hpp"

namespace nhq {

/// Cyclically contracted matrix-entry product; idempotent classes give d_i.
PolyElement trace_classical(const RepSpacePtr& r, const HH0Element& x);
/// Height-ordered operator product with cyclic index contraction.
WeylElement trace_configuration(const RepSpacePtr& r, const HeightConfiguration& c);
WeylElement trace_quantum(const RepSpacePtr& r, const QPAElement& x);

enum class Status { verified, failed, solved };
std::string status_name(Status s);

struct VerificationReport {
  std::string name;
  Status status = Status::verified;
  /// Canonical syntax of the residual; "0" when verified.
  std::string residual = "0";
  /// Per-vertex character coefficients, present when solved.
  std::vector<std::pair<std::string, Rational>> character;
  std::vector<std::string> constraints;
  std::vector<std::string> notes;

  bool ok() const { return status != Status::failed; }
  std::string text() const;
  nlohmann::ordered_json json() const;
};

VerificationReport verify_trace_homomorphism(const RepSpacePtr& r, const QPAElement& x, const QPAElement& y);
/// Checks hbar | [Tr^q(lift x), Tr^q(lift y)] and classical_symbol(-C/hbar) = {Tr x, Tr y}.
VerificationReport verify_cubic(const RepSpacePtr& r, const HH0Element& x, const HH0Element& y);
/// quantum_moment(e^i_pq) = -tau(e^i_pq) - hbar D_i delta_pq (+ hbar r_i delta_pq).
VerificationReport verify_quantum_moment(const RepSpacePtr& r, const std::vector<Rational>& rvec = {});

struct IdealSummand {
  WeylElement coefficient;
  GlElement direction;
};

/// sum coefficient * (tau + sum lambda_k tr_k - hbar chi)(direction).
struct IdealDecomposition {
  WeylElement target;
  std::vector<IdealSummand> summands;

  WeylElement expand(const Character& chi, const ReductionParameters& params) const;
};

/// (tau + sum lambda_k tr_k - hbar chi)(v).
WeylElement reduction_operator(const GlElement& v, const Character& chi, const ReductionParameters& params);

/// Decomposition of Tr^q(ideal_generator(p, i)) along the splice point:
/// coefficients [x_1]_{l1,l2}...[x_v]_{lv,l(v+1)}, directions -e^i_{l1,l(v+1)}.
IdealDecomposition decompose_ideal_image(const RepSpacePtr& r, const Path& p, std::size_t i,
                                         const ReductionParameters& params, IdealLift mode = IdealLift::marked);

/// Closed paths at i in the doubled quiver with at most max_length letters.
std::vector<Path> closed_paths(const Quiver& q, std::size_t i, std::size_t max_length);

struct CharacterSolution {
  VerificationReport report;
  std::optional<Character> chi;
  bool unique = false;
};

/// Solves for c_k over all ideal generators with |p| <= max_length.
CharacterSolution solve_chi(const RepSpacePtr& r, const ReductionParameters& params,
                            IdealLift mode = IdealLift::marked, std::size_t max_length = 2);

/// constant + sum_k coefficients[k] v_k = 0, with v = r, or v = c when the
/// character is not determined by the generators.
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational constant;
  char variable = 'r';
};

std::string format_constraint(const Quiver& q, const LinearConstraint& c);

struct KernelConstraintResult {
  VerificationReport report;
  std::vector<LinearConstraint> constraints;
};

/// Evaluates the solved character, as an affine function of r, on a basis
/// of ker tau. Trivial constraints are dropped.
KernelConstraintResult kernel_constraint(const RepSpacePtr& r, const std::vector<Rational>& lambda = {},
                                         IdealLift mode = IdealLift::marked);

}  // namespace nhq
