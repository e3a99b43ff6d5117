#pragma once

// Return words and derived sequences.
//
// A return word of w is a factor between two consecutive occurrences of w.
// The derived word d_u(w) codes the sequence of return words met after the
// first occurrence of w; return words are numbered by first appearance, so
// derived words are compared only up to a permutation of letters.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/iet.hpp"
#include "sturmian/morphism.hpp"

namespace sturmian {

/// A binary word available through prefixes of any requested length.
class WordSource {
 public:
  static WordSource fixed_point(MorphismWord name, std::optional<char> start = std::nullopt);
  static WordSource coding(IetParams params);
  /// A finite word; prefix(n) is truncated to its length.
  static WordSource literal(std::string word);

  /// The first n letters (fewer only for finite sources).
  std::string prefix(std::size_t n) const;
  bool finite() const noexcept { return length_.has_value(); }
  const std::string& label() const noexcept { return label_; }

 private:
  WordSource(std::function<std::string(std::size_t)> generator, std::optional<std::size_t> length, std::string label)
      : generator_(std::move(generator)), length_(length), label_(std::move(label)) {}

  std::function<std::string(std::size_t)> generator_;
  std::optional<std::size_t> length_;
  std::string label_;
};

struct DerivedOptions {
  /// Longest source prefix generated before giving up.
  std::size_t max_source_length = std::size_t{1} << 22;
};

struct DerivedWordReport {
  std::string factor;
  std::vector<std::string> return_words;  // order of first appearance
  std::string derived_prefix;             // letters '0', '1', ...
  std::size_t first_occurrence = 0;
  /// Length of the source prefix spelled by the coded return words.
  std::size_t source_prefix_length = 0;
  std::optional<std::size_t> matched_delta_power;
};

/// Start indices of w in u, ascending.  Every index 0..|u| for empty w.
std::vector<std::size_t> occurrences(std::string_view u, std::string_view w);

/// The first n letters of d_u(w).  The source prefix is doubled until n + 1
/// complete return blocks are visible and the set of return words did not change
/// over the last doubling.
DerivedWordReport derived_word(const WordSource& source, std::string_view w, std::size_t n,
                               const DerivedOptions& options = {});

/// Letter bijection mapping x onto y over their common length, if one exists.
std::optional<std::map<char, char>> equal_up_to_letter_permutation(std::string_view x, std::string_view y);

/// Prefix length used by the special-factor scans below: long enough for the
/// Sturmian words handled here, but answers are relative to that prefix.
std::size_t language_window(std::size_t factor_length);

/// w s with s shortest such that w s is right special.
std::string extend_to_right_special(const WordSource& source, std::string_view w);

struct LeftExtension {
  std::string extended;   // p w, shortest left special extension
  std::string effective;  // p' w for the shortest suffix p' of p making it a prefix, else p w
};

LeftExtension extend_to_left_special(const WordSource& source, std::string_view w);

struct DeltaMatch {
  std::string prefix;
  std::size_t power = 0;
};

/// For the empty prefix and every right special prefix p (|p| <= prefix_len) of
/// the fixed point of phi_w, the least j such that d_u(p) is the fixed point of
/// phi_{Delta^j(N(w))}.  Throws NoMatch if some prefix has none.
std::vector<DeltaMatch> match_derived_to_delta(const MorphismWord& w, std::size_t prefix_len, std::size_t derive_len);

}  // namespace sturmian
