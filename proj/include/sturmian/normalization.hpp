#pragma once

// Normal forms in the special Sturmian monoid.
//
// The monoid is presented by the relations
//   alpha a^k beta = beta b^k alpha   and   a alpha^k b = b beta^k a   (k >= 0).
// Rewriting every left-hand side into the right-hand side strictly increases a
// word lexicographically (a < b, alpha < beta) without moving Latin or Greek
// positions, so iteration terminates in the largest word of the class, N(w).

#include <cstddef>
#include <vector>

#include "sturmian/morphism.hpp"

namespace sturmian {

/// True iff w has no factor alpha a^k beta or a alpha^k b.
bool is_normalized(const MorphismWord& w);

MorphismWord normalize(const MorphismWord& w);

/// phi_u == phi_v as substitutions.
bool morphisms_equal(const MorphismWord& u, const MorphismWord& v);

/// Rotates the pivot a^k beta (or alpha^k b) to the back and normalizes.
/// Requires a normalized word not in {a, alpha}*.
MorphismWord delta(const MorphismWord& w);

struct DeltaOrbit {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  /// Delta^0(N(w)), ..., Delta^{preperiod + period - 1}(N(w)).
  std::vector<MorphismWord> words;
};

DeltaOrbit delta_orbit(const MorphismWord& w);

}  // namespace sturmian
