#include "sturmian/derived.hpp"

#include <algorithm>
#include <set>

#include "sturmian/error.hpp"
#include "sturmian/normalization.hpp"

namespace sturmian {

WordSource WordSource::fixed_point(MorphismWord name, std::optional<char> start) {
  // Resolve the start letter eagerly so that errors surface at construction.
  const std::string first = fixed_point_prefix(name, 1, start);
  std::string label = "fixed point of " + name.to_string() + " starting with " + first;
  return WordSource([name = std::move(name), c = first[0]](std::size_t n) { return fixed_point_prefix(name, n, c); },
                    std::nullopt, std::move(label));
}

WordSource WordSource::coding(IetParams params) {
  params.validate();
  std::string label = "coding of (" + format_quad(params.l0) + ", " + format_quad(params.l1) + ", " +
                      format_quad(params.rho) + ", " + std::string(to_string(params.boundary)) + ")";
  return WordSource([params = std::move(params)](std::size_t n) { return generate(params, n); }, std::nullopt,
                    std::move(label));
}

WordSource WordSource::literal(std::string word) {
  require_binary(word);
  const std::size_t length = word.size();
  return WordSource([word = std::move(word)](std::size_t n) { return word.substr(0, n); }, length, "literal word");
}

std::string WordSource::prefix(std::size_t n) const {
  if (length_) n = std::min(n, *length_);
  return generator_(n);
}

std::vector<std::size_t> occurrences(std::string_view u, std::string_view w) {
  std::vector<std::size_t> out;
  if (w.empty()) {
    out.resize(u.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
  for (std::size_t pos = u.find(w); pos != std::string_view::npos; pos = u.find(w, pos + 1)) out.push_back(pos);
  return out;
}

namespace {

char code_letter(std::size_t index) {
  if (index < 10) return static_cast<char>('0' + index);
  if (index < 36) return static_cast<char>('a' + (index - 10));
  throw Error(ErrorKind::ResourceExhausted, "more than 36 return words");
}

}  // namespace

DerivedWordReport derived_word(const WordSource& source, std::string_view w, std::size_t n,
                               const DerivedOptions& options) {
  DerivedWordReport report;
  report.factor = std::string(w);
  require_binary(w);
  if (w.empty()) {
    // d_u(empty) = u itself.
    report.derived_prefix = source.prefix(n);
    if (report.derived_prefix.size() < n) throw Error(ErrorKind::ResourceExhausted, "source shorter than requested");
    report.return_words = {"0", "1"};
    report.source_prefix_length = n;
    return report;
  }

  std::size_t length = std::max<std::size_t>(256, 4 * (n + 1) * (w.size() + 1));
  std::optional<std::set<std::string>> previous;
  while (true) {
    length = std::min(length, options.max_source_length);
    const std::string u = source.prefix(length);
    const bool exhausted = u.size() < length || length >= options.max_source_length;
    const std::vector<std::size_t> occ = occurrences(u, w);
    if (occ.empty()) {
      if (exhausted) throw Error(ErrorKind::FactorAbsent, "'" + std::string(w) + "' does not occur in " + source.label());
      length *= 2;
      continue;
    }
    std::vector<std::string> returns;
    std::string coded;
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
      std::string r = u.substr(occ[i], occ[i + 1] - occ[i]);
      auto it = std::find(returns.begin(), returns.end(), r);
      if (it == returns.end()) {
        returns.push_back(std::move(r));
        it = returns.end() - 1;
      }
      coded.push_back(code_letter(static_cast<std::size_t>(it - returns.begin())));
    }
    const std::set<std::string> current(returns.begin(), returns.end());
    const bool enough = coded.size() >= n + 1;
    const bool stable = previous && *previous == current;
    // A finite word cannot be extended, so stability is not required there.
    const bool accept = enough && returns.size() >= 2 && (stable || source.finite());
    if (accept) {
      report.return_words = std::move(returns);
      report.derived_prefix = coded.substr(0, n);
      report.first_occurrence = occ.front();
      report.source_prefix_length = occ[n];
      return report;
    }
    if (exhausted) {
      if (enough && returns.size() == 1) {
        throw Error(ErrorKind::PeriodicSource, "only the return word '" + returns.front() + "' occurs for '" +
                                                   std::string(w) + "' in " + source.label());
      }
      throw Error(ErrorKind::ResourceExhausted, "derived word of '" + std::string(w) + "' did not stabilize within " +
                                                    std::to_string(u.size()) + " letters of " + source.label());
    }
    previous = current;
    length *= 2;
  }
}

std::optional<std::map<char, char>> equal_up_to_letter_permutation(std::string_view x, std::string_view y) {
  std::map<char, char> forward;
  std::map<char, char> backward;
  const std::size_t len = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    auto [f, f_new] = forward.emplace(x[i], y[i]);
    auto [b, b_new] = backward.emplace(y[i], x[i]);
    if (f->second != y[i] || b->second != x[i]) return std::nullopt;
  }
  return forward;
}

std::size_t language_window(std::size_t factor_length) { return 20000 + 1000 * factor_length; }

std::string extend_to_right_special(const WordSource& source, std::string_view w) {
  std::string ws(w);
  std::string u = source.prefix(language_window(ws.size()));
  if (u.find(ws) == std::string::npos) throw Error(ErrorKind::FactorAbsent, "'" + ws + "' not found in " + source.label());
  while (true) {
    if (ws.size() + 64 > u.size() / 4) u = source.prefix(language_window(ws.size()));
    const bool zero = u.find(ws + '0') != std::string::npos;
    const bool one = u.find(ws + '1') != std::string::npos;
    if (zero && one) return ws;
    if (!zero && !one) {
      throw Error(ErrorKind::ResourceExhausted, "'" + ws + "' has no right extension in the scanned prefix");
    }
    ws.push_back(zero ? '0' : '1');
  }
}

LeftExtension extend_to_left_special(const WordSource& source, std::string_view w) {
  std::string pw(w);
  std::string u = source.prefix(language_window(pw.size()));
  if (u.find(pw) == std::string::npos) throw Error(ErrorKind::FactorAbsent, "'" + pw + "' not found in " + source.label());
  while (true) {
    if (pw.size() + 64 > u.size() / 4) u = source.prefix(language_window(pw.size()));
    const bool zero = u.find('0' + pw) != std::string::npos;
    const bool one = u.find('1' + pw) != std::string::npos;
    if (zero && one) break;
    if (!zero && !one) {
      throw Error(ErrorKind::ResourceExhausted, "'" + pw + "' has no left extension in the scanned prefix");
    }
    pw.insert(pw.begin(), zero ? '0' : '1');
  }
  LeftExtension ext{pw, pw};
  const std::size_t p_len = pw.size() - w.size();
  // Shortest proper suffix p' of p with p'w a prefix of the source.
  for (std::size_t k = 0; k < p_len; ++k) {
    std::string candidate = pw.substr(p_len - k);
    if (u.compare(0, candidate.size(), candidate) == 0) {
      ext.effective = std::move(candidate);
      break;
    }
  }
  return ext;
}

std::vector<DeltaMatch> match_derived_to_delta(const MorphismWord& w, std::size_t prefix_len, std::size_t derive_len) {
  if (!is_primitive(w)) throw Error(ErrorKind::NotPrimitive, "name '" + w.to_string() + "' is not primitive");
  const DeltaOrbit orbit = delta_orbit(w);
  const WordSource source = WordSource::fixed_point(w);
  const std::string u = source.prefix(language_window(prefix_len + 1));

  std::vector<std::string> fixed_points;
  fixed_points.reserve(orbit.words.size());
  for (const MorphismWord& v : orbit.words) fixed_points.push_back(fixed_point_prefix(v, derive_len));

  std::vector<std::string> prefixes{""};
  for (std::size_t len = 1; len <= prefix_len; ++len) {
    if (language_query(u, std::string_view(u).substr(0, len)).is_right_special) prefixes.push_back(u.substr(0, len));
  }

  std::vector<DeltaMatch> matches;
  for (const std::string& p : prefixes) {
    const std::string d = derived_word(source, p, derive_len).derived_prefix;
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < fixed_points.size() && !found; ++j) {
      if (equal_up_to_letter_permutation(d, fixed_points[j])) found = j;
    }
    if (!found) {
      throw Error(ErrorKind::NoMatch, "derived word of prefix '" + p + "' in the fixed point of " + w.to_string() +
                                          " matches no Delta power");
    }
    matches.push_back({p, *found});
  }
  return matches;
}

}  // namespace sturmian
