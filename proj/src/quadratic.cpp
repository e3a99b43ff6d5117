#include "sturmian/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <regex>
#include <sstream>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

// Trial division bound.  Above it a remainder r < kTrialBound^3 has at most two
// prime factors, so r is square-free unless it is a perfect square.
constexpr std::uint64_t kTrialBound = 1u << 21;

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

Sign sign_of(const Rational& r) {
  if (r > 0) return Sign::positive;
  if (r < 0) return Sign::negative;
  return Sign::zero;
}

}  // namespace

int sign_value(Sign s) noexcept { return static_cast<int>(s); }

std::pair<Integer, Integer> square_free_decompose(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::NonPositiveRadicand, "radicand must be positive");
  Integer rest = n;
  Integer square_root_part = 1;
  Integer square_free = 1;
  std::uint64_t p = 2;
  for (; p <= kTrialBound && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    const Integer pp = Integer(p) * p;
    while (rest % pp == 0) {
      rest /= pp;
      square_root_part *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      square_free *= p;
    }
  }
  if (rest > 1 && Integer(p) * p <= rest) {
    // Every prime factor of rest exceeds the trial bound.
    const Integer bound = Integer(kTrialBound);
    if (rest >= bound * bound * bound) {
      throw Error(ErrorKind::ResourceExhausted, "radicand too large to certify square-free");
    }
    Integer root = boost::multiprecision::sqrt(rest);
    if (root * root == rest) {
      square_root_part *= root;
      rest = 1;
    }
  }
  square_free *= rest;
  return {square_root_part, square_free};
}

QuadNumber::QuadNumber(Rational c, Rational d, const Integer& radicand)
    : c_(std::move(c)), d_(std::move(d)) {
  if (radicand < 0) throw Error(ErrorKind::NonPositiveRadicand, "negative radicand");
  if (radicand == 0) {
    d_ = 0;
    radicand_ = 1;
  } else {
    auto [k, m] = square_free_decompose(radicand);
    d_ *= Rational(k);
    radicand_ = m;
  }
  canonicalize();
}

QuadNumber QuadNumber::sqrt(const Integer& n) { return QuadNumber(Rational(0), Rational(1), n); }

void QuadNumber::canonicalize() {
  if (radicand_ == 1) {
    c_ += d_;
    d_ = 0;
  }
  if (d_ == 0) radicand_ = 1;
}

QuadNumber QuadNumber::conjugate() const {
  QuadNumber r = *this;
  r.d_ = -r.d_;
  return r;
}

Sign QuadNumber::sign() const {
  const Sign sc = sign_of(c_);
  const Sign sd = sign_of(d_);
  if (sd == Sign::zero) return sc;
  if (sc == Sign::zero || sc == sd) return sd;
  // Opposite signs: compare c^2 with d^2 D.
  const Rational lhs = c_ * c_;
  const Rational rhs = d_ * d_ * Rational(radicand_);
  return lhs > rhs ? sc : sd;
}

Rational QuadNumber::norm() const { return c_ * c_ - d_ * d_ * Rational(radicand_); }

bool QuadNumber::compatible(const QuadNumber& x, const QuadNumber& y) noexcept {
  return x.radicand_ == y.radicand_ || x.is_rational() || y.is_rational();
}

const Integer& QuadNumber::common_radicand(const QuadNumber& y) const {
  if (!compatible(*this, y)) {
    throw Error(ErrorKind::IncompatibleFields,
                "sqrt(" + radicand_.str() + ") and sqrt(" + y.radicand_.str() + ") do not share a field");
  }
  return is_rational() ? y.radicand_ : radicand_;
}

double QuadNumber::to_double() const {
  return c_.convert_to<double>() + d_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
}

QuadNumber QuadNumber::operator-() const {
  QuadNumber r = *this;
  r.c_ = -r.c_;
  r.d_ = -r.d_;
  return r;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& y) {
  radicand_ = common_radicand(y);
  c_ += y.c_;
  d_ += y.d_;
  canonicalize();
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& y) {
  radicand_ = common_radicand(y);
  c_ -= y.c_;
  d_ -= y.d_;
  canonicalize();
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& y) {
  const Integer radicand = common_radicand(y);
  Rational c = c_ * y.c_ + d_ * y.d_ * Rational(radicand);
  Rational d = c_ * y.d_ + d_ * y.c_;
  c_ = std::move(c);
  d_ = std::move(d);
  radicand_ = radicand;
  canonicalize();
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  common_radicand(y);
  // x / y = x * conj(y) / N(y); N(y) != 0 because sqrt(D) is irrational.
  const Rational n = y.norm();
  *this *= y.conjugate();
  c_ /= n;
  d_ /= n;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
  switch ((x - y).sign()) {
    case Sign::negative: return std::strong_ordering::less;
    case Sign::zero: return std::strong_ordering::equal;
    case Sign::positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

QuadNumber parse_quad(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  static const std::regex kRational(R"(([+-]?\d+(?:/\d+)?))");
  static const std::regex kFull(R"(([+-]?\d+(?:/\d+)?)([+-])(?:(\d+(?:/\d+)?)\*)?sqrt\(([+-]?\d+)\))");
  static const std::regex kRadicalOnly(R"(([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\(([+-]?\d+)\))");
  std::smatch m;
  auto radicand_of = [](const std::string& digits) {
    Integer n(digits);
    if (n <= 0) throw Error(ErrorKind::NonPositiveRadicand, "sqrt argument must be positive, got " + digits);
    return n;
  };
  if (std::regex_match(s, m, kRational)) return QuadNumber(parse_rational(m[1]));
  if (std::regex_match(s, m, kFull)) {
    Rational d = m[3].matched ? parse_rational(m[3]) : Rational(1);
    if (m[2] == "-") d = -d;
    return QuadNumber(parse_rational(m[1]), d, radicand_of(m[4]));
  }
  if (std::regex_match(s, m, kRadicalOnly)) {
    Rational d = m[2].matched ? parse_rational(m[2]) : Rational(1);
    if (m[1] == "-") d = -d;
    return QuadNumber(Rational(0), d, radicand_of(m[3]));
  }
  throw Error(ErrorKind::SyntaxError, "cannot parse quadratic number '" + std::string(text) + "'");
}

std::string format_quad(const QuadNumber& x) {
  if (x.is_rational()) return format_rational(x.rational_part());
  const Rational& d = x.radical_coefficient();
  const Rational magnitude = d < 0 ? Rational(-d) : d;
  std::string radical = format_rational(magnitude) + "*sqrt(" + x.radicand().str() + ")";
  if (x.rational_part() == 0) return (d < 0 ? "-" : "") + radical;
  return format_rational(x.rational_part()) + (d < 0 ? "-" : "+") + radical;
}

}  // namespace sturmian
