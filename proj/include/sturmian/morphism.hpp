#pragma once

// Names over the generator alphabet {a, b, alpha, beta} and their realization
// as binary substitutions.
//
// Composition convention: the name w = w_0 w_1 ... w_{n-1} denotes
//   phi_w = phi_{w_0} o phi_{w_1} o ... o phi_{w_{n-1}},
// so realize(uv) = realize(u) o realize(v) and phi_{w_{n-1}} acts first.
//
// Generators:
//   a:     0 -> 0,  1 -> 10        b:    0 -> 0,  1 -> 01
//   alpha: 0 -> 01, 1 -> 1         beta: 0 -> 10, 1 -> 1
//
// ASCII form: 'a', 'b', 'A' (alpha), 'B' (beta).  Parsing also accepts the
// UTF-8 letters α and β.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/quadratic.hpp"

namespace sturmian {

enum class Gen : std::uint8_t { a = 0, b = 1, alpha = 2, beta = 3 };

inline constexpr std::array<Gen, 4> kAllGenerators{Gen::a, Gen::b, Gen::alpha, Gen::beta};

constexpr bool is_latin(Gen g) noexcept { return g == Gen::a || g == Gen::b; }
constexpr bool is_greek(Gen g) noexcept { return !is_latin(g); }
char to_ascii(Gen g) noexcept;

class MorphismWord {
 public:
  MorphismWord() = default;
  explicit MorphismWord(std::vector<Gen> letters) : letters_(std::move(letters)) {}

  /// Parses "aAbB..." (or UTF-8 α/β); throws SyntaxError on any other character.
  static MorphismWord parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Gen operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Gen> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool contains(Gen g) const noexcept;
  /// Number of distinct generators occurring in the word.
  std::size_t distinct_letters() const noexcept;
  /// True iff every letter lies in {x, y}.
  bool only_uses(Gen x, Gen y) const noexcept;

  MorphismWord operator+(const MorphismWord& other) const;
  MorphismWord repeated(std::size_t times) const;
  MorphismWord substr(std::size_t pos, std::size_t len = std::string::npos) const;

  std::string to_string() const;

  /// Lexicographic order with a < b < alpha < beta.  Only compared between words
  /// with the same Latin/Greek skeleton, where it is the a<b, alpha<beta order.
  friend auto operator<=>(const MorphismWord&, const MorphismWord&) = default;
  friend bool operator==(const MorphismWord&, const MorphismWord&) = default;

 private:
  std::vector<Gen> letters_;
};

using IncidenceMatrix = std::array<std::array<Integer, 2>, 2>;

/// A binary substitution given by the images of 0 and 1.
struct SturmianMorphism {
  std::string image0 = "0";
  std::string image1 = "1";

  static SturmianMorphism identity() { return {}; }
  static SturmianMorphism generator(Gen g);

  std::string apply(std::string_view x) const;
  /// (*this o inner)(x) = this(inner(x)).
  SturmianMorphism compose(const SturmianMorphism& inner) const;
  const std::string& image(char letter) const { return letter == '0' ? image0 : image1; }

  friend bool operator==(const SturmianMorphism&, const SturmianMorphism&) = default;
};

/// Throws SyntaxError unless every character is '0' or '1'.
void require_binary(std::string_view x);

std::string apply_morphism(const SturmianMorphism& m, std::string_view x);
SturmianMorphism realize(const MorphismWord& w);

/// Entry (i, j) counts letter i in the image of letter j.
IncidenceMatrix incidence_matrix(const MorphismWord& w);
IncidenceMatrix incidence_matrix(const SturmianMorphism& m);
IncidenceMatrix multiply(const IncidenceMatrix& x, const IncidenceMatrix& y);
Integer determinant(const IncidenceMatrix& m);

/// At least one Latin and one Greek letter.
bool is_primitive(const MorphismWord& w);

/// Letterwise a <-> alpha, b <-> beta; realizes E o phi_w o E.
MorphismWord conjugate_by_E(const MorphismWord& w);

/// k-fold left rotation.
MorphismWord cyc(const MorphismWord& w, std::size_t k = 1);

}  // namespace sturmian
