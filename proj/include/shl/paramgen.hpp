#pragma once

#include <cstdint>

#include "shl/params.hpp"
#include "shl/signature.hpp"

namespace shl {

enum class SMode { generic, zero };

/// Shape of a seeded parameter draw: how many spectral variables, whether the
/// contraction bound is enforced (and with what margin), and how the
/// inhomogeneities are filled.
struct ParamShape {
  int n_vars = 2;
  bool needs_admissible = false;
  SMode s_mode = SMode::generic;
  Rational epsilon = Rational(1, 10);
  int s_prefix_len = 6;
  /// Also contract every u toward gamma*s_0 (the evaluator runs at the
  /// shifted column-0 inhomogeneity in the Pfaffian comparison).
  bool shifted_admissible = false;
  bool unit_gamma = false;
};

/// Deterministic pseudo-random rational parameters with small numerators and
/// denominators. Rejection-samples away from all singular loci (coincident u,
/// u_i u_j = 1, t u_i u_j = 1, u = s_x, vanishing structure denominators) and,
/// when requested, until every (u_i, s_x) pair satisfies the contraction
/// bound with margin epsilon. Throws when a retry cap is exhausted.
ParamSet generate_params(std::uint64_t seed, const ParamShape& shape);

/// Deterministic signature with an odd number of parts (1, 3, 5, or 7 up to
/// max_parts) and parts bounded by max_part.
Signature generate_odd_signature(std::uint64_t seed, int max_parts, int max_part);

}  // namespace shl
