#include "sturmian/morphism.hpp"

#include <algorithm>

#include "sturmian/error.hpp"

namespace sturmian {

char to_ascii(Gen g) noexcept {
  switch (g) {
    case Gen::a: return 'a';
    case Gen::b: return 'b';
    case Gen::alpha: return 'A';
    case Gen::beta: return 'B';
  }
  return '?';
}

MorphismWord MorphismWord::parse(std::string_view text) {
  std::vector<Gen> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    switch (ch) {
      case 'a': letters.push_back(Gen::a); continue;
      case 'b': letters.push_back(Gen::b); continue;
      case 'A': letters.push_back(Gen::alpha); continue;
      case 'B': letters.push_back(Gen::beta); continue;
      default: break;
    }
    // UTF-8 alpha (CE B1) and beta (CE B2).
    if (static_cast<unsigned char>(ch) == 0xCE && i + 1 < text.size()) {
      const auto next = static_cast<unsigned char>(text[i + 1]);
      if (next == 0xB1 || next == 0xB2) {
        letters.push_back(next == 0xB1 ? Gen::alpha : Gen::beta);
        ++i;
        continue;
      }
    }
    throw Error(ErrorKind::SyntaxError, "invalid generator in name '" + std::string(text) + "'");
  }
  return MorphismWord(std::move(letters));
}

bool MorphismWord::contains(Gen g) const noexcept {
  return std::find(letters_.begin(), letters_.end(), g) != letters_.end();
}

std::size_t MorphismWord::distinct_letters() const noexcept {
  return static_cast<std::size_t>(std::count_if(kAllGenerators.begin(), kAllGenerators.end(),
                                                [this](Gen g) { return contains(g); }));
}

bool MorphismWord::only_uses(Gen x, Gen y) const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [=](Gen g) { return g == x || g == y; });
}

MorphismWord MorphismWord::operator+(const MorphismWord& other) const {
  std::vector<Gen> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return MorphismWord(std::move(letters));
}

MorphismWord MorphismWord::repeated(std::size_t times) const {
  std::vector<Gen> letters;
  letters.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) letters.insert(letters.end(), letters_.begin(), letters_.end());
  return MorphismWord(std::move(letters));
}

MorphismWord MorphismWord::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  const std::size_t end = len == std::string::npos ? letters_.size() : std::min(letters_.size(), pos + len);
  return MorphismWord(std::vector<Gen>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string MorphismWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Gen g : letters_) out.push_back(to_ascii(g));
  return out;
}

SturmianMorphism SturmianMorphism::generator(Gen g) {
  switch (g) {
    case Gen::a: return {"0", "10"};
    case Gen::b: return {"0", "01"};
    case Gen::alpha: return {"01", "1"};
    case Gen::beta: return {"10", "1"};
  }
  return identity();
}

std::string SturmianMorphism::apply(std::string_view x) const {
  std::size_t zeros = static_cast<std::size_t>(std::count(x.begin(), x.end(), '0'));
  std::string out;
  out.reserve(zeros * image0.size() + (x.size() - zeros) * image1.size());
  for (char ch : x) out += (ch == '0' ? image0 : image1);
  return out;
}

SturmianMorphism SturmianMorphism::compose(const SturmianMorphism& inner) const {
  return {apply(inner.image0), apply(inner.image1)};
}

void require_binary(std::string_view x) {
  if (!std::all_of(x.begin(), x.end(), [](char ch) { return ch == '0' || ch == '1'; })) {
    throw Error(ErrorKind::SyntaxError, "not a binary word: '" + std::string(x) + "'");
  }
}

std::string apply_morphism(const SturmianMorphism& m, std::string_view x) {
  require_binary(x);
  return m.apply(x);
}

SturmianMorphism realize(const MorphismWord& w) {
  // Innermost generator is the last letter.
  SturmianMorphism result;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    result = SturmianMorphism::generator(*it).compose(result);
  }
  return result;
}

IncidenceMatrix multiply(const IncidenceMatrix& x, const IncidenceMatrix& y) {
  IncidenceMatrix r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return r;
}

Integer determinant(const IncidenceMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

IncidenceMatrix incidence_matrix(const SturmianMorphism& m) {
  auto count = [](const std::string& s, char ch) { return Integer(std::count(s.begin(), s.end(), ch)); };
  return {{{count(m.image0, '0'), count(m.image1, '0')}, {count(m.image0, '1'), count(m.image1, '1')}}};
}

IncidenceMatrix incidence_matrix(const MorphismWord& w) {
  IncidenceMatrix result{{{1, 0}, {0, 1}}};
  for (Gen g : w) result = multiply(result, incidence_matrix(SturmianMorphism::generator(g)));
  return result;
}

bool is_primitive(const MorphismWord& w) {
  const bool latin = std::any_of(w.begin(), w.end(), is_latin);
  const bool greek = std::any_of(w.begin(), w.end(), is_greek);
  return latin && greek;
}

MorphismWord conjugate_by_E(const MorphismWord& w) {
  std::vector<Gen> letters;
  letters.reserve(w.size());
  for (Gen g : w) {
    switch (g) {
      case Gen::a: letters.push_back(Gen::alpha); break;
      case Gen::b: letters.push_back(Gen::beta); break;
      case Gen::alpha: letters.push_back(Gen::a); break;
      case Gen::beta: letters.push_back(Gen::b); break;
    }
  }
  return MorphismWord(std::move(letters));
}

MorphismWord cyc(const MorphismWord& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<Gen> letters(w.begin(), w.end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k % letters.size()), letters.end());
  return MorphismWord(std::move(letters));
}

}  // namespace sturmian
