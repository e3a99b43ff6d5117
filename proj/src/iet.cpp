#include "sturmian/iet.hpp"

#include <algorithm>
#include <unordered_set>

#include "sturmian/error.hpp"

namespace sturmian {

std::string_view to_string(Boundary b) noexcept { return b == Boundary::lower ? "lower" : "upper"; }

Boundary parse_boundary(std::string_view text) {
  if (text == "lower") return Boundary::lower;
  if (text == "upper") return Boundary::upper;
  throw Error(ErrorKind::SyntaxError, "boundary must be 'lower' or 'upper', got '" + std::string(text) + "'");
}

IetParams IetParams::scaled(const QuadNumber& factor) const {
  return {l0 * factor, l1 * factor, rho * factor, boundary};
}

IetParams IetParams::normalized() const { return scaled(QuadNumber(1) / total()); }

IetParams IetParams::theta_form() const { return scaled(QuadNumber(1) / std::max(l0, l1)); }

QuadNumber IetParams::theta() const { return std::min(l0, l1) / std::max(l0, l1); }

void IetParams::validate() const {
  if (!QuadNumber::compatible(l0, l1) || !QuadNumber::compatible(l0, rho) || !QuadNumber::compatible(l1, rho)) {
    throw Error(ErrorKind::InvalidParams, "l0, l1 and rho must lie in one quadratic field");
  }
  if (l0.sign() != Sign::positive || l1.sign() != Sign::positive) {
    throw Error(ErrorKind::InvalidParams, "interval lengths must be positive");
  }
  const QuadNumber sum = total();
  const bool ok = boundary == Boundary::lower ? (rho.sign() != Sign::negative && rho < sum)
                                              : (rho.sign() == Sign::positive && rho <= sum);
  if (!ok) {
    throw Error(ErrorKind::InvalidParams, "rho = " + format_quad(rho) + " outside the " +
                                              std::string(to_string(boundary)) + " domain");
  }
}

bool IetParams::same_point(const IetParams& other) const {
  return boundary == other.boundary && normalized() == other.normalized();
}

bool in_first_interval(const IetParams& p, const QuadNumber& x) {
  return p.boundary == Boundary::lower ? x < p.l0 : x <= p.l0;
}

QuadNumber iet_map(const IetParams& p, const QuadNumber& x) {
  const bool inside = p.boundary == Boundary::lower ? (x.sign() != Sign::negative && x < p.total())
                                                    : (x.sign() == Sign::positive && x <= p.total());
  if (!inside) throw Error(ErrorKind::OutOfDomain, format_quad(x) + " is outside the domain of T");
  return in_first_interval(p, x) ? x + p.l1 : x - p.l0;
}

std::string generate(const IetParams& p, std::size_t n) {
  p.validate();
  std::string out;
  out.reserve(n);
  QuadNumber x = p.rho;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_first_interval(p, x)) {
      out.push_back('0');
      x += p.l1;
    } else {
      out.push_back('1');
      x -= p.l0;
    }
  }
  return out;
}

IetParams shift_params(const IetParams& p) {
  IetParams q = p;
  q.rho = iet_map(p, p.rho);
  return q;
}

IetParams image_params(Gen g, const IetParams& p) {
  const QuadNumber sum = p.total();
  switch (g) {
    case Gen::b: return {sum, p.l1, p.rho, p.boundary};
    case Gen::a: return {sum, p.l1, p.rho + p.l1, p.boundary};
    case Gen::beta: return {p.l0, sum, p.rho + p.l0, p.boundary};
    case Gen::alpha: return {p.l0, sum, p.rho, p.boundary};
  }
  return p;
}

IetParams image_params(const MorphismWord& w, const IetParams& p) {
  IetParams q = p;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) q = image_params(*it, q);
  return q;
}

std::vector<char> fixed_point_starts(const MorphismWord& w) {
  const SturmianMorphism m = realize(w);
  std::vector<char> starts;
  for (char c : {'0', '1'}) {
    const std::string& img = m.image(c);
    if (img.size() >= 2 && img.front() == c) starts.push_back(c);
  }
  return starts;
}

namespace {

char resolve_start(const MorphismWord& w, std::optional<char> start) {
  if (!is_primitive(w)) throw Error(ErrorKind::NotPrimitive, "name '" + w.to_string() + "' is not primitive");
  const std::vector<char> starts = fixed_point_starts(w);
  if (start) {
    if (std::find(starts.begin(), starts.end(), *start) == starts.end()) {
      throw Error(ErrorKind::NoFixedPointWithStart,
                  "phi_" + w.to_string() + " has no fixed point starting with " + std::string(1, *start));
    }
    return *start;
  }
  if (starts.size() != 1) {
    throw Error(ErrorKind::AmbiguousFixedPoint, "phi_" + w.to_string() + " has two fixed points; choose a start letter");
  }
  return starts.front();
}

}  // namespace

IetParams fixed_point_params(const MorphismWord& w, std::optional<char> start) {
  const char first = resolve_start(w, start);
  const IncidenceMatrix m = incidence_matrix(w);
  const Integer trace = m[0][0] + m[1][1];
  const Integer disc = trace * trace - 4 * determinant(m);
  // Perron eigenvalue (t + sqrt(t^2 - 4 det)) / 2.
  const QuadNumber lambda(Rational(trace, 2), Rational(1, 2), disc);
  if (lambda.is_rational()) {
    throw Error(ErrorKind::InvalidParams, "incidence matrix of " + w.to_string() + " has a rational eigenvalue");
  }
  QuadNumber l0;
  QuadNumber l1;
  if (m[0][1] != 0) {
    l0 = QuadNumber(Rational(m[0][1]));
    l1 = lambda - QuadNumber(Rational(m[0][0]));
  } else {
    l0 = lambda - QuadNumber(Rational(m[1][1]));
    l1 = QuadNumber(Rational(m[1][0]));
  }
  // phi_w maps (l0, l1, rho) to (lambda l0, lambda l1, rho + offset); the fixed
  // point satisfies lambda rho = rho + offset.
  const IetParams image = image_params(w, IetParams{l0, l1, QuadNumber(0), Boundary::lower});
  const QuadNumber rho = image.rho / (lambda - QuadNumber(1));
  IetParams p = IetParams{l0, l1, rho, Boundary::lower}.normalized();

  std::vector<Boundary> candidates;
  if (p.rho < QuadNumber(1)) candidates.push_back(Boundary::lower);
  if (p.rho.sign() == Sign::positive) candidates.push_back(Boundary::upper);
  for (Boundary b : candidates) {
    p.boundary = b;
    if ((in_first_interval(p, p.rho) ? '0' : '1') == first) return p;
  }
  throw Error(ErrorKind::InvalidParams, "no coding of rho = " + format_quad(p.rho) + " starts with " + first);
}

std::string fixed_point_prefix(const MorphismWord& w, std::size_t n, std::optional<char> start) {
  const char first = resolve_start(w, start);
  const SturmianMorphism m = realize(w);
  std::string s(1, first);
  while (s.size() < n) s = m.apply(s);
  s.resize(n);
  return s;
}

LanguageFlags language_query(std::string_view u, std::string_view w) {
  auto occurs = [u](const std::string& x) { return u.find(x) != std::string_view::npos; };
  const std::string word(w);
  LanguageFlags flags;
  flags.is_factor = occurs(word);
  flags.is_right_special = occurs(word + '0') && occurs(word + '1');
  flags.is_left_special = occurs('0' + word) && occurs('1' + word);
  flags.is_bispecial = flags.is_right_special && flags.is_left_special;
  return flags;
}

std::size_t factor_complexity(std::string_view u, std::size_t m) {
  if (m > u.size()) return 0;
  std::unordered_set<std::string_view> factors;
  for (std::size_t i = 0; i + m <= u.size(); ++i) factors.insert(u.substr(i, m));
  return factors.size();
}

}  // namespace sturmian
