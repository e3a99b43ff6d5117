#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt(D)).
//
// A QuadNumber is c + d*sqrt(D) with c, d rational and D a square-free
// positive integer.  Rationals are embedded with D = 1 and d = 0, so every
// value has exactly one representation.  Two values can be combined when
// their radicands agree or when one of them is rational; anything else would
// need a degree-4 field and is rejected with IncompatibleFields.
//
// Signs and comparisons are decided by integer arithmetic only.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sturmian {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

/// Splits n > 0 into (k, m) with n = k^2 * m and m square-free.
std::pair<Integer, Integer> square_free_decompose(const Integer& n);

class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(std::int64_t value) : c_(value) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(Rational value) : c_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  /// c + d*sqrt(radicand); square factors of the radicand are moved into d.
  QuadNumber(Rational c, Rational d, const Integer& radicand);

  /// sqrt(n) for n >= 0.
  static QuadNumber sqrt(const Integer& n);

  const Rational& rational_part() const noexcept { return c_; }
  const Rational& radical_coefficient() const noexcept { return d_; }
  const Integer& radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return radicand_ == 1; }
  bool is_zero() const noexcept { return c_ == 0 && d_ == 0; }

  QuadNumber conjugate() const;
  Sign sign() const;
  /// c^2 - d^2 D, the field norm.
  Rational norm() const;
  /// Whether x and y live in a common field (same radicand or one rational).
  static bool compatible(const QuadNumber& x, const QuadNumber& y) noexcept;

  double to_double() const;

  QuadNumber operator-() const;
  QuadNumber& operator+=(const QuadNumber& y);
  QuadNumber& operator-=(const QuadNumber& y);
  QuadNumber& operator*=(const QuadNumber& y);
  QuadNumber& operator/=(const QuadNumber& y);

  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }

  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.radicand_ == y.radicand_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  /// Exact order; throws IncompatibleFields for values from different fields.
  friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y);

 private:
  void canonicalize();
  const Integer& common_radicand(const QuadNumber& y) const;

  Rational c_{0};
  Rational d_{0};
  Integer radicand_{1};
};

int sign_value(Sign s) noexcept;

/// Parses "R", "R+R*sqrt(N)", "R-R*sqrt(N)", "R*sqrt(N)" or "sqrt(N)", where R is
/// an integer or p/q.  Whitespace is ignored.
QuadNumber parse_quad(std::string_view text);
/// Canonical text form accepted by parse_quad.
std::string format_quad(const QuadNumber& x);

}  // namespace sturmian
