#pragma once

// Two-interval exchange codings of Sturmian words.
//
// Parameters (l0, l1, rho) describe T on [0, l0 + l1) (lower) or (0, l0 + l1]
// (upper), with I_0 of length l0 on the left.  T(x) = x + l1 on I_0 and
// x - l0 on I_1; the coding of the orbit of rho is the Sturmian word.
//
// Orbit points stay in rho + Z*l0 + Z*l1, so all arithmetic is exact.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/morphism.hpp"
#include "sturmian/quadratic.hpp"

namespace sturmian {

enum class Boundary { lower, upper };

std::string_view to_string(Boundary b) noexcept;
Boundary parse_boundary(std::string_view text);

struct IetParams {
  QuadNumber l0{1};
  QuadNumber l1{1};
  QuadNumber rho{0};
  Boundary boundary = Boundary::lower;

  QuadNumber total() const { return l0 + l1; }
  /// gamma = l1 / (l0 + l1)
  QuadNumber slope() const { return l1 / total(); }
  /// delta = rho / (l0 + l1)
  QuadNumber intercept() const { return rho / total(); }

  /// Scaled so that l0 + l1 = 1; then (slope, intercept) = (l1, rho).
  IetParams normalized() const;
  /// Scaled so that the longer interval has length 1 (theta-form).
  IetParams theta_form() const;
  /// Shorter interval length in theta-form.
  QuadNumber theta() const;
  IetParams scaled(const QuadNumber& factor) const;

  /// Throws InvalidParams unless l0, l1 > 0, rho lies in the domain for the
  /// boundary convention and all values share one field.
  void validate() const;
  bool same_point(const IetParams& other) const;

  friend bool operator==(const IetParams&, const IetParams&) = default;
};

/// Whether x lies in I_0 under p's convention (x must be in the domain).
bool in_first_interval(const IetParams& p, const QuadNumber& x);

QuadNumber iet_map(const IetParams& p, const QuadNumber& x);
std::string generate(const IetParams& p, std::size_t n);
IetParams shift_params(const IetParams& p);

/// Parameters of phi_g(u) given those of u.
IetParams image_params(Gen g, const IetParams& p);
/// Parameters of phi_w(u); the last letter of w acts first.
IetParams image_params(const MorphismWord& w, const IetParams& p);

/// Letters c for which phi_w has a fixed point starting with c.
std::vector<char> fixed_point_starts(const MorphismWord& w);

/// Exact parameters of a fixed point of phi_w, normalized to l0 + l1 = 1.
/// Names over {a, alpha} have two fixed points; `start` selects one.
IetParams fixed_point_params(const MorphismWord& w, std::optional<char> start = std::nullopt);

/// First n letters of the fixed point of phi_w starting with `start`.
std::string fixed_point_prefix(const MorphismWord& w, std::size_t n, std::optional<char> start = std::nullopt);

struct LanguageFlags {
  bool is_factor = false;
  bool is_right_special = false;
  bool is_left_special = false;
  bool is_bispecial = false;
};

/// Special-factor flags of w relative to the finite word u.
LanguageFlags language_query(std::string_view u, std::string_view w);

/// Number of distinct factors of length m in u.
std::size_t factor_complexity(std::string_view u, std::size_t m);

}  // namespace sturmian
