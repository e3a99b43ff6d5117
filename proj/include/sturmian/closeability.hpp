#pragma once

// Fixed-point tests for Sturmian words over quadratic fields and the
// closeable / non-closeable dichotomy for Sturmian substitutions.
//
// A primitive phi_w is closeable under derivation exactly when w uses letters
// from one of {b, beta}, {b, alpha}, {a, beta}, {a, alpha}.  Equivalently the
// fixed point has intercept delta in {0, gamma, 1 - gamma, 1}.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/iet.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/quadratic.hpp"

namespace sturmian {

/// Coding with (l0, l1, rho) = (1 - gamma, gamma, delta) is fixed by a
/// primitive morphism.  Requires 0 < gamma < 1 irrational.  delta is meant to
/// lie in [0, 1] but is not checked; the conjugate conditions are evaluated as is.
bool yasutomi_gamma(const QuadNumber& gamma, const QuadNumber& delta);

/// Coding with parameters (1, theta, rho) or (theta, 1, rho) is fixed by a
/// primitive morphism.  Requires 0 < theta < 1 irrational; rho is not range checked.
bool yasutomi_theta(const QuadNumber& theta, const QuadNumber& rho);

/// Convenience: applies yasutomi_theta to arbitrary valid parameters.
bool fixed_by_primitive_morphism(const IetParams& p);

bool is_sturm_number(const QuadNumber& gamma);

/// a, b -> b; alpha -> alpha; beta -> beta.
MorphismWord project_H(const MorphismWord& w);
/// a -> a; b -> b; alpha, beta -> beta.
MorphismWord project_F(const MorphismWord& w);

enum class LetterClass { b_beta, b_alpha, a_beta, a_alpha };

std::string_view to_string(LetterClass c) noexcept;

struct Closeability {
  bool closeable = false;
  std::optional<LetterClass> letter_class;
  std::string reason;
};

Closeability is_closeable(const MorphismWord& w);

struct ClosedSet {
  struct Member {
    MorphismWord name;  // normalized
    std::string provenance;
  };
  std::vector<Member> members;

  /// Adds N(name) unless an equal morphism is present; returns whether it was new.
  bool add(const MorphismWord& name, std::string provenance);
  bool contains(const MorphismWord& name) const;
};

/// Normalized names of all cyclic shifts of w, deduplicated.
std::vector<MorphismWord> cyclic_class(const MorphismWord& w);

/// The union of C-sets that witnesses closeability of phi_w.
ClosedSet closed_set(const MorphismWord& w);

enum class DeltaClass { zero, gamma, one_minus_gamma, one, other };

std::string_view to_string(DeltaClass c) noexcept;

struct InterceptClassification {
  bool closeable = false;
  DeltaClass delta_class = DeltaClass::other;
  /// One entry per fixed point, normalized to l0 + l1 = 1.
  std::vector<IetParams> params;
};

DeltaClass classify_intercept(const IetParams& p);
InterceptClassification classify_by_intercept(const MorphismWord& w);

/// Parameters of d_u(letter) where u has parameters p.  Shifts p to the first
/// occurrence of the letter and undoes the substitution that spells the two
/// return words.
IetParams letter_derived_params(const IetParams& p, char letter);

struct FactorCheck {
  std::string member;
  char start = '0';
  std::string factor;
  /// "empty", "prefix" or "non-prefix"; prefix status of the prolonged factor.
  std::string category;
  std::string reduced;
  std::size_t return_words = 0;
  std::optional<std::string> witness;
  char witness_start = '0';
  bool pass = false;
};

struct VerificationReport {
  std::vector<FactorCheck> checks;
  std::size_t failures = 0;
  bool passed() const noexcept { return failures == 0; }
};

/// For every member, each of its fixed points and each factor v with
/// |v| <= max_factor_len, looks for a member whose fixed point equals d_u(v) up
/// to a letter permutation on derive_len letters, confirmed on 2 * derive_len.
VerificationReport verify_closed_empirically(const ClosedSet& set, std::size_t max_factor_len,
                                             std::size_t derive_len);

}  // namespace sturmian
