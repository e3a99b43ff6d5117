#include "sturmian/closeability.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "sturmian/derived.hpp"
#include "sturmian/error.hpp"
#include "sturmian/normalization.hpp"

namespace sturmian {

namespace {

void require_irrational(const QuadNumber& x, const char* name) {
  if (x.is_rational()) throw Error(ErrorKind::RationalSlope, std::string(name) + " = " + format_quad(x) + " is rational");
}

bool between(const QuadNumber& lo, const QuadNumber& x, const QuadNumber& hi) { return lo <= x && x <= hi; }

}  // namespace

bool yasutomi_gamma(const QuadNumber& gamma, const QuadNumber& delta) {
  require_irrational(gamma, "gamma");
  const QuadNumber one(1);
  if (!(gamma.sign() == Sign::positive && gamma < one)) {
    throw Error(ErrorKind::InvalidParams, "gamma must lie in (0, 1)");
  }
  if (!QuadNumber::compatible(gamma, delta)) return false;

  const QuadNumber g = gamma.conjugate();
  const QuadNumber d = delta.conjugate();
  if (g > one) return between(one - g, d, g);
  if (g.sign() == Sign::negative) return between(g, d, one - g);
  return false;  // conjugate in (0, 1)
}

bool yasutomi_theta(const QuadNumber& theta, const QuadNumber& rho) {
  require_irrational(theta, "theta");
  const QuadNumber one(1);
  if (!(theta.sign() == Sign::positive && theta < one)) {
    throw Error(ErrorKind::InvalidParams, "theta must lie in (0, 1)");
  }
  if (!QuadNumber::compatible(theta, rho)) return false;

  const QuadNumber t = theta.conjugate();
  return t.sign() == Sign::negative && between(t, rho.conjugate(), one);
}

bool fixed_by_primitive_morphism(const IetParams& p) {
  p.validate();
  const IetParams q = p.theta_form();
  return yasutomi_theta(q.theta(), q.rho);
}

bool is_sturm_number(const QuadNumber& gamma) {
  if (gamma.is_rational()) return false;
  const QuadNumber one(1);
  if (!(gamma.sign() == Sign::positive && gamma < one)) return false;
  const QuadNumber g = gamma.conjugate();
  return g.sign() != Sign::positive || g >= one;
}

MorphismWord project_H(const MorphismWord& w) {
  std::vector<Gen> letters(w.begin(), w.end());
  for (Gen& g : letters) {
    if (g == Gen::a) g = Gen::b;
  }
  return MorphismWord(std::move(letters));
}

MorphismWord project_F(const MorphismWord& w) {
  std::vector<Gen> letters(w.begin(), w.end());
  for (Gen& g : letters) {
    if (g == Gen::alpha) g = Gen::beta;
  }
  return MorphismWord(std::move(letters));
}

std::string_view to_string(LetterClass c) noexcept {
  switch (c) {
    case LetterClass::b_beta: return "{b,beta}";
    case LetterClass::b_alpha: return "{b,alpha}";
    case LetterClass::a_beta: return "{a,beta}";
    case LetterClass::a_alpha: return "{a,alpha}";
  }
  return "?";
}

Closeability is_closeable(const MorphismWord& w) {
  if (!is_primitive(w)) throw Error(ErrorKind::NotPrimitive, "name '" + w.to_string() + "' is not primitive");
  Closeability result;
  if (w.distinct_letters() >= 3) {
    result.reason = "at least three distinct generators occur; not closeable under derivation";
    return result;
  }
  // Primitive with two letters: one Latin, one Greek.
  const Gen latin = w.contains(Gen::a) ? Gen::a : Gen::b;
  const Gen greek = w.contains(Gen::alpha) ? Gen::alpha : Gen::beta;
  if (latin == Gen::b) {
    result.letter_class = greek == Gen::beta ? LetterClass::b_beta : LetterClass::b_alpha;
  } else {
    result.letter_class = greek == Gen::beta ? LetterClass::a_beta : LetterClass::a_alpha;
  }
  result.closeable = true;
  result.reason = "name uses only " + std::string(to_string(*result.letter_class)) + "; closeable under derivation";
  return result;
}

bool ClosedSet::add(const MorphismWord& name, std::string provenance) {
  MorphismWord normal = normalize(name);
  if (contains(normal)) return false;
  members.push_back({std::move(normal), std::move(provenance)});
  return true;
}

bool ClosedSet::contains(const MorphismWord& name) const {
  const MorphismWord normal = normalize(name);
  return std::any_of(members.begin(), members.end(), [&](const Member& m) { return m.name == normal; });
}

std::vector<MorphismWord> cyclic_class(const MorphismWord& w) {
  std::vector<MorphismWord> out;
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    MorphismWord v = normalize(cyc(w, k));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

ClosedSet closed_set(const MorphismWord& w) {
  const Closeability c = is_closeable(w);
  if (!c.closeable) throw Error(ErrorKind::NotCloseable, "phi_" + w.to_string() + " is not closeable under derivation");

  ClosedSet set;
  auto add_cyclic = [&set](const MorphismWord& base, const std::string& label) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      set.add(cyc(base, k), label + " = C(" + base.to_string() + "), cyc^" + std::to_string(k));
    }
  };
  add_cyclic(w, "C(w)");
  switch (*c.letter_class) {
    case LetterClass::b_beta: break;
    case LetterClass::b_alpha: add_cyclic(project_F(w), "C(F(w))"); break;
    case LetterClass::a_beta: add_cyclic(project_H(w), "C(H(w))"); break;
    case LetterClass::a_alpha:
      add_cyclic(project_H(w), "C(H(w))");
      add_cyclic(project_F(w), "C(F(w))");
      add_cyclic(project_H(project_F(w)), "C(HF(w))");
      break;
  }
  return set;
}

std::string_view to_string(DeltaClass c) noexcept {
  switch (c) {
    case DeltaClass::zero: return "0";
    case DeltaClass::gamma: return "gamma";
    case DeltaClass::one_minus_gamma: return "1-gamma";
    case DeltaClass::one: return "1";
    case DeltaClass::other: return "other";
  }
  return "?";
}

DeltaClass classify_intercept(const IetParams& p) {
  const IetParams q = p.normalized();
  const QuadNumber& gamma = q.l1;
  const QuadNumber& delta = q.rho;
  if (!QuadNumber::compatible(gamma, delta)) return DeltaClass::other;
  if (delta.is_zero()) return DeltaClass::zero;
  if (delta == gamma) return DeltaClass::gamma;
  if (delta == QuadNumber(1) - gamma) return DeltaClass::one_minus_gamma;
  if (delta == QuadNumber(1)) return DeltaClass::one;
  return DeltaClass::other;
}

InterceptClassification classify_by_intercept(const MorphismWord& w) {
  if (!is_primitive(w)) throw Error(ErrorKind::NotPrimitive, "name '" + w.to_string() + "' is not primitive");
  InterceptClassification result;
  std::optional<DeltaClass> cls;
  for (char start : fixed_point_starts(w)) {
    IetParams p = fixed_point_params(w, start);
    const DeltaClass c = classify_intercept(p);
    if (cls && *cls != c) {
      throw Error(ErrorKind::InvalidParams, "fixed points of " + w.to_string() + " disagree on the intercept class");
    }
    cls = c;
    result.params.push_back(std::move(p));
  }
  result.delta_class = cls.value_or(DeltaClass::other);
  result.closeable = result.delta_class != DeltaClass::other;
  return result;
}

IetParams letter_derived_params(const IetParams& params, char letter) {
  params.validate();
  IetParams p = params;
  if (letter == '1') {
    // Exchange the letters: E(u) has parameters (l1, l0, total - rho) with the
    // opposite boundary convention.
    p = IetParams{params.l1, params.l0, params.total() - params.rho,
                  params.boundary == Boundary::lower ? Boundary::upper : Boundary::lower};
  } else if (letter != '0') {
    throw Error(ErrorKind::SyntaxError, "letter must be '0' or '1'");
  }
  while (!in_first_interval(p, p.rho)) p = shift_params(p);
  // Return words 0 1^k and 0 1^(k+1): undo phi_alpha k times, then phi_b.
  while (p.l1 > p.l0) p.l1 -= p.l0;
  p.l0 -= p.l1;
  p.validate();
  return p;
}

VerificationReport verify_closed_empirically(const ClosedSet& set, std::size_t max_factor_len, std::size_t derive_len) {
  struct FixedPoint {
    std::string name;
    char start;
    std::string prefix;
  };
  struct Task {
    MorphismWord name;
    char start;
  };
  std::vector<FixedPoint> candidates;
  std::vector<Task> tasks;
  for (const ClosedSet::Member& m : set.members) {
    for (char start : fixed_point_starts(m.name)) {
      candidates.push_back({m.name.to_string(), start, fixed_point_prefix(m.name, 2 * derive_len, start)});
      tasks.push_back({m.name, start});
    }
  }

  auto run = [&candidates, max_factor_len, derive_len](const Task& task) {
    std::vector<FactorCheck> checks;
    const WordSource source = WordSource::fixed_point(task.name, task.start);
    const std::string u = source.prefix(language_window(max_factor_len));
    for (std::size_t len = 0; len <= max_factor_len; ++len) {
      std::set<std::string> factors;
      for (std::size_t i = 0; i + len <= u.size(); ++i) factors.insert(u.substr(i, len));
      for (const std::string& v : factors) {
        FactorCheck check;
        check.member = task.name.to_string();
        check.start = task.start;
        check.factor = v;
        if (v.empty()) {
          check.category = "empty";
        } else {
          const LeftExtension ext = extend_to_left_special(source, extend_to_right_special(source, v));
          check.reduced = ext.effective;
          check.category = u.compare(0, ext.effective.size(), ext.effective) == 0 ? "prefix" : "non-prefix";
        }
        const DerivedWordReport d = derived_word(source, v, 2 * derive_len);
        check.return_words = d.return_words.size();
        const std::string_view shortened = std::string_view(d.derived_prefix).substr(0, derive_len);
        for (const FixedPoint& fp : candidates) {
          if (equal_up_to_letter_permutation(shortened, std::string_view(fp.prefix).substr(0, derive_len)) &&
              equal_up_to_letter_permutation(d.derived_prefix, fp.prefix)) {
            check.witness = fp.name;
            check.witness_start = fp.start;
            check.pass = true;
            break;
          }
        }
        checks.push_back(std::move(check));
      }
    }
    return checks;
  };

  std::vector<std::future<std::vector<FactorCheck>>> futures;
  futures.reserve(tasks.size());
  for (const Task& task : tasks) futures.push_back(std::async(std::launch::async, run, task));

  VerificationReport report;
  for (auto& f : futures) {
    for (FactorCheck& c : f.get()) {
      if (!c.pass) ++report.failures;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace sturmian
