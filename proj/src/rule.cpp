#include "streamlab/rule.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

// Exact (wildcard-free) patterns go through a hash map; wildcard patterns are
// scanned in order, but only those listed before the exact hit can win.
class TableMatcher {
public:
  explicit TableMatcher(std::shared_ptr<const RuleTable> table) : table_(std::move(table)) {
    for (std::size_t k = 0; k < table_->entries.size(); ++k) {
      const std::string& p = table_->entries[k].pattern;
      if (p.find(kWildcard) == std::string::npos)
        exact_.emplace(p, k);  // keeps the earliest duplicate
      else
        wild_.push_back(k);
    }
  }

  char operator()(std::string_view window) const {
    std::size_t hit = table_->entries.size();
    if (!exact_.empty()) {
      auto it = exact_.find(std::string(window));
      if (it != exact_.end()) hit = it->second;
    }
    for (std::size_t k : wild_) {
      if (k > hit) break;
      if (pattern_matches(table_->entries[k].pattern, window)) return table_->entries[k].letter;
    }
    return hit < table_->entries.size() ? table_->entries[hit].letter : table_->default_letter;
  }

private:
  std::shared_ptr<const RuleTable> table_;
  std::unordered_map<std::string, std::size_t> exact_;
  std::vector<std::size_t> wild_;
};

void check_letter(const Alphabet& a, char c, const char* what) {
  if (!a.contains(c)) throw Error(std::string(what) + ": letter outside alphabet: " + c);
}

}  // namespace

LocalRule::LocalRule(Alphabet alphabet, std::size_t radius, Eval eval)
    : alphabet_(std::move(alphabet)), radius_(radius), eval_(std::move(eval)) {}

LocalRule LocalRule::from_table(Alphabet alphabet, std::size_t radius, RuleTable table) {
  check_letter(alphabet, table.default_letter, "rule table default");
  for (const RulePattern& e : table.entries) {
    if (e.pattern.size() != 2 * radius + 1)
      throw Error("rule table: pattern '" + e.pattern + "' has wrong length");
    for (char c : e.pattern)
      if (c != kBoundary && c != kWildcard) check_letter(alphabet, c, "rule pattern");
    check_letter(alphabet, e.letter, "rule output");
  }
  auto shared = std::make_shared<const RuleTable>(std::move(table));
  LocalRule rule(std::move(alphabet), radius, TableMatcher(shared));
  rule.table_ = std::move(shared);
  return rule;
}

bool pattern_matches(std::string_view pattern, std::string_view window) noexcept {
  if (pattern.size() != window.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k)
    if (pattern[k] != kWildcard && pattern[k] != window[k]) return false;
  return true;
}

std::string neighborhood(const Stream& s, std::size_t radius, std::size_t i) {
  std::string w(2 * radius + 1, kBoundary);
  const std::size_t first = i >= radius ? 0 : radius - i;
  for (std::size_t k = first; k < w.size(); ++k) w[k] = s(i + k - radius);
  return w;
}

Stream apply(const LocalRule& rule, const Stream& s) {
  if (!(rule.alphabet() == s.alphabet())) throw AlphabetMismatch("apply: rule and stream alphabets differ");
  return from_function(rule.alphabet(), [rule, s](std::size_t i) {
    return rule(neighborhood(s, rule.radius(), i));
  });
}

Stream apply_n(const LocalRule& rule, const Stream& s, std::size_t times) {
  Stream out = s;
  for (std::size_t t = 0; t < times; ++t) out = apply(rule, out);
  return out;
}

LocalRule compose(const LocalRule& first, const LocalRule& second) {
  if (!(first.alphabet() == second.alphabet())) throw AlphabetMismatch("compose: alphabets differ");
  const std::size_t n1 = first.radius();
  const std::size_t n2 = second.radius();
  return LocalRule(first.alphabet(), n1 + n2, [first, second, n1, n2](std::string_view x) {
    std::string inner(2 * n2 + 1, kBoundary);
    for (std::size_t t = 0; t < inner.size(); ++t) {
      if (x[t + n1] == kBoundary) continue;
      inner[t] = first(x.substr(t, 2 * n1 + 1));
    }
    return second(inner);
  });
}

LocalRule identity_rule(const Alphabet& alphabet) {
  return LocalRule(alphabet, 0, [](std::string_view x) { return x[0]; });
}

LocalRule const_rule(const Alphabet& alphabet, char letter) {
  check_letter(alphabet, letter, "const_rule");
  return LocalRule::from_table(alphabet, 0, RuleTable{{}, letter});
}

LocalRule tail_rule(const Alphabet& alphabet) {
  return LocalRule(alphabet, 1, [](std::string_view x) { return x[2]; });
}

LocalRule prepend_rule(const Alphabet& alphabet, const std::string& word) {
  if (!alphabet.contains_all(word)) throw Error("prepend_rule: letter outside alphabet");
  const std::size_t k = word.size();
  return LocalRule(alphabet, k, [word, k, first = alphabet.first()](std::string_view x) {
    std::size_t hashes = 0;
    while (hashes < x.size() && x[hashes] == kBoundary) ++hashes;
    if (hashes == 0) return x[0];
    // Windows centred on a '#' never occur in a global update.
    return hashes <= k ? word[k - hashes] : first;
  });
}

LocalRule xor_rule() {
  RuleTable t;
  t.entries = {{"_00", '0'}, {"_01", '1'}, {"_10", '1'}, {"_11", '0'}};
  t.default_letter = '0';
  return LocalRule::from_table(Alphabet::binary(), 1, std::move(t));
}

LocalRule eca_rule(unsigned number) {
  if (number > 255) throw Error("eca_rule: number must be in 0..255");
  return LocalRule(Alphabet::binary(), 1, [number](std::string_view x) {
    const unsigned l = x[0] == '1', c = x[1] == '1', r = x[2] == '1';
    return ((number >> (4 * l + 2 * c + r)) & 1u) ? '1' : '0';
  });
}

std::size_t window_count(std::size_t alphabet_size, std::size_t radius) {
  std::size_t total = 0;
  for (std::size_t h = 0; h <= radius; ++h) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < 2 * radius + 1 - h; ++k) {
      if (n > (std::size_t{1} << 40)) return std::size_t(-1);
      n *= alphabet_size;
    }
    total += n;
  }
  return total;
}

RuleTable materialize(const LocalRule& rule, std::size_t limit) {
  const Alphabet& a = rule.alphabet();
  const std::size_t n = rule.radius();
  const std::size_t width = rule.width();
  if (window_count(a.size(), n) > limit)
    throw Error("materialize: radius " + std::to_string(n) + " table exceeds limit");
  RuleTable table;
  table.default_letter = a.first();
  // Lexicographic over '#' < alphabet order, '#' only as a prefix.
  for (std::size_t h = n + 1; h-- > 0;) {
    std::string w(width, kBoundary);
    std::vector<std::size_t> digit(width - h, 0);
    for (std::size_t k = h; k < width; ++k) w[k] = a[0];
    for (;;) {
      const char out = rule(w);
      if (out != table.default_letter) table.entries.push_back({w, out});
      std::size_t pos = digit.size();
      while (pos > 0) {
        --pos;
        if (++digit[pos] < a.size()) {
          w[h + pos] = a[digit[pos]];
          break;
        }
        digit[pos] = 0;
        w[h + pos] = a[0];
        if (pos == 0) goto next_h;
      }
      if (digit.empty()) break;
    }
  next_h:;
  }
  return table;
}

std::string write_rule_file(const LocalRule& rule) {
  RuleTable owned;
  const RuleTable* t = rule.table();
  if (t == nullptr) {
    owned = materialize(rule);
    t = &owned;
  }
  std::ostringstream out;
  out << "%ca\n"
      << "alphabet: " << rule.alphabet().letters() << "\n"
      << "radius: " << rule.radius() << "\n";
  for (const RulePattern& e : t->entries) out << e.pattern << " -> " << e.letter << "\n";
  out << "default -> " << t->default_letter << "\n";
  return out.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::string expect_field(const std::string& line, const std::string& key, std::size_t lineno) {
  const std::string prefix = key + ": ";
  if (line.rfind(prefix, 0) != 0)
    throw FormatError("line " + std::to_string(lineno) + ": expected '" + prefix + "'");
  return line.substr(prefix.size());
}

std::size_t parse_count(const std::string& s, std::size_t lineno) {
  std::size_t value = 0;
  if (s.empty()) throw FormatError("line " + std::to_string(lineno) + ": expected a number");
  for (char c : s) {
    if (c < '0' || c > '9') throw FormatError("line " + std::to_string(lineno) + ": expected a number");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

LocalRule parse_rule_file(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4 || lines[0] != "%ca") throw FormatError("rule file: missing %ca header");
  const Alphabet alphabet(expect_field(lines[1], "alphabet", 2));
  const std::size_t radius = parse_count(expect_field(lines[2], "radius", 3), 3);
  RuleTable table;
  bool have_default = false;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    const std::size_t arrow = line.find(" -> ");
    if (have_default) throw FormatError("rule file: content after default line");
    if (arrow == std::string::npos || line.size() != arrow + 5)
      throw FormatError("line " + std::to_string(k + 1) + ": expected '<pattern> -> <letter>'");
    const std::string lhs = line.substr(0, arrow);
    const char letter = line.back();
    if (lhs == "default") {
      table.default_letter = letter;
      have_default = true;
    } else {
      table.entries.push_back({lhs, letter});
    }
  }
  if (!have_default) throw FormatError("rule file: missing default line");
  try {
    return LocalRule::from_table(alphabet, radius, std::move(table));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("rule file: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LocalRule read_rule_file(const std::string& path) { return parse_rule_file(read_text_file(path)); }

}  // namespace streamlab
