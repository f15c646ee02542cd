#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/alphabet.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// One line of a pattern table: `pattern -> letter`. Patterns range over
/// alphabet ∪ {'#', '_'}; '_' matches any symbol including '#'.
struct RulePattern {
  std::string pattern;
  char letter;
};

/// Ordered pattern list with a mandatory default; first match wins.
struct RuleTable {
  std::vector<RulePattern> entries;
  char default_letter = '0';
};

/// Radius-N local rule over an alphabet: a total map from windows of length
/// 2N+1 over alphabet ∪ {'#'} to letters. Immutable and shareable across
/// threads once built.
class LocalRule {
public:
  using Eval = std::function<char(std::string_view window)>;

  LocalRule(Alphabet alphabet, std::size_t radius, Eval eval);
  static LocalRule from_table(Alphabet alphabet, std::size_t radius, RuleTable table);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t width() const noexcept { return 2 * radius_ + 1; }

  /// window.size() must equal width().
  char operator()(std::string_view window) const { return eval_(window); }

  /// Backing table, or nullptr for rules defined by code.
  const RuleTable* table() const noexcept { return table_.get(); }

private:
  Alphabet alphabet_;
  std::size_t radius_;
  Eval eval_;
  std::shared_ptr<const RuleTable> table_;
};

bool pattern_matches(std::string_view pattern, std::string_view window) noexcept;

/// (s(i-N), ..., s(i+N)) with '#' at negative positions.
std::string neighborhood(const Stream& s, std::size_t radius, std::size_t i);

/// Global update: result(i) = rule(neighborhood(s, N, i)). Lazy.
Stream apply(const LocalRule& rule, const Stream& s);
/// t-fold application.
Stream apply_n(const LocalRule& rule, const Stream& s, std::size_t times);

/// Rule of radius N1+N2 equal to applying `first` and then `second`. Inner
/// windows centred on a negative position yield '#', exactly as the
/// sequential application sees the boundary.
LocalRule compose(const LocalRule& first, const LocalRule& second);

LocalRule identity_rule(const Alphabet& alphabet);
LocalRule const_rule(const Alphabet& alphabet, char letter);
/// δ(_, _, x) = x.
LocalRule tail_rule(const Alphabet& alphabet);
/// Radius |w| rule producing w · σ.
LocalRule prepend_rule(const Alphabet& alphabet, const std::string& word);
/// Binary δ(_, x, y) = x ⊕ y.
LocalRule xor_rule();
/// Wolfram elementary rule n; '#' reads as 0.
LocalRule eca_rule(unsigned number);

/// Number of windows a materialized table enumerates (center never '#').
std::size_t window_count(std::size_t alphabet_size, std::size_t radius);

inline constexpr std::size_t kMaterializeLimit = std::size_t{1} << 22;

/// Enumerates every window whose '#'s form a prefix shorter than N+1 and
/// records the non-default outputs. The default is the alphabet's first
/// letter. Throws when more than `limit` windows would be visited.
RuleTable materialize(const LocalRule& rule, std::size_t limit = kMaterializeLimit);

/// Rule file (%ca) text for a rule; code-defined rules are materialized.
std::string write_rule_file(const LocalRule& rule);
LocalRule parse_rule_file(std::string_view text);
LocalRule read_rule_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace streamlab
