#include "sturmian/normalization.hpp"

#include <map>
#include <optional>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

struct Redex {
  std::size_t start;
  std::size_t length;  // k + 2
};

// Left-hand side starting at position i, if any.
std::optional<Redex> redex_at(std::span<const Gen> w, std::size_t i) {
  Gen filler;
  Gen closer;
  if (w[i] == Gen::alpha) {
    filler = Gen::a;
    closer = Gen::beta;
  } else if (w[i] == Gen::a) {
    filler = Gen::alpha;
    closer = Gen::b;
  } else {
    return std::nullopt;
  }
  std::size_t j = i + 1;
  while (j < w.size() && w[j] == filler) ++j;
  if (j < w.size() && w[j] == closer) return Redex{i, j - i + 1};
  return std::nullopt;
}

std::optional<Redex> leftmost_redex(std::span<const Gen> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (auto r = redex_at(w, i)) return r;
  }
  return std::nullopt;
}

}  // namespace

bool is_normalized(const MorphismWord& w) { return !leftmost_redex(w.letters()).has_value(); }

MorphismWord normalize(const MorphismWord& w) {
  std::vector<Gen> letters(w.begin(), w.end());
  while (auto r = leftmost_redex(letters)) {
    const std::size_t last = r->start + r->length - 1;
    // alpha a^k beta -> beta b^k alpha ; a alpha^k b -> b beta^k a
    const bool greek_frame = letters[r->start] == Gen::alpha;
    letters[r->start] = greek_frame ? Gen::beta : Gen::b;
    letters[last] = greek_frame ? Gen::alpha : Gen::a;
    for (std::size_t i = r->start + 1; i < last; ++i) letters[i] = greek_frame ? Gen::b : Gen::beta;
  }
  return MorphismWord(std::move(letters));
}

bool morphisms_equal(const MorphismWord& u, const MorphismWord& v) { return normalize(u) == normalize(v); }

MorphismWord delta(const MorphismWord& w) {
  if (!is_normalized(w)) throw Error(ErrorKind::NotNormalized, "delta needs a normalized name, got " + w.to_string());
  if (!w.contains(Gen::b) && !w.contains(Gen::beta)) {
    throw Error(ErrorKind::NoGreekLatinPivot, "name " + w.to_string() + " has no b or beta");
  }
  // Normalized names outside {a, alpha}* start with a^k beta or alpha^k b.
  const bool latin_run = w[0] == Gen::a || w[0] == Gen::beta;
  const Gen filler = latin_run ? Gen::a : Gen::alpha;
  const Gen pivot = latin_run ? Gen::beta : Gen::b;
  std::size_t k = 0;
  while (k < w.size() && w[k] == filler) ++k;
  if (k == w.size() || w[k] != pivot) {
    throw Error(ErrorKind::NoGreekLatinPivot, "name " + w.to_string() + " has no a^k beta / alpha^k b prefix");
  }
  return normalize(w.substr(k + 1) + w.substr(0, k + 1));
}

DeltaOrbit delta_orbit(const MorphismWord& w) {
  std::map<MorphismWord, std::size_t> seen;
  DeltaOrbit orbit;
  MorphismWord current = normalize(w);
  while (true) {
    auto [it, inserted] = seen.emplace(current, orbit.words.size());
    if (!inserted) {
      orbit.preperiod = it->second;
      orbit.period = orbit.words.size() - it->second;
      return orbit;
    }
    orbit.words.push_back(current);
    current = delta(current);
  }
}

}  // namespace sturmian
