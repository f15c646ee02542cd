#include "streamlab/variants.hpp"

#include <sstream>
#include <unordered_map>

#include "streamlab/error.hpp"

namespace streamlab {

HybridRule::HybridRule(std::vector<LocalRule> phases) : phases_(std::move(phases)) {
  if (phases_.empty()) throw Error("hybrid rule needs at least one phase");
  for (const LocalRule& r : phases_) {
    if (!(r.alphabet() == phases_.front().alphabet())) throw AlphabetMismatch("hybrid rule: phase alphabets differ");
    radius_ = std::max(radius_, r.radius());
  }
}

char HybridRule::eval(std::size_t k, std::string_view window) const {
  const LocalRule& r = phases_[k];
  return r(window.substr(radius_ - r.radius(), r.width()));
}

Stream apply_hybrid(const HybridRule& h, const Stream& s) {
  if (!(h.alphabet() == s.alphabet())) throw AlphabetMismatch("apply_hybrid: alphabets differ");
  return from_function(h.alphabet(), [h, s](std::size_t i) {
    return h.eval(i % h.phase_count(), neighborhood(s, h.radius(), i));
  });
}

HybridRule compose_hybrid(const HybridRule& h1, const HybridRule& h2) {
  if (!(h1.alphabet() == h2.alphabet())) throw AlphabetMismatch("compose_hybrid: alphabets differ");
  const std::size_t n1 = h1.radius();
  const std::size_t n2 = h2.radius();
  const std::size_t k1 = h1.phase_count();
  const std::size_t k2 = h2.phase_count();
  std::vector<LocalRule> phases;
  for (std::size_t p = 0; p < k1 * k2; ++p) {
    phases.emplace_back(h1.alphabet(), n1 + n2, [h1, h2, n1, n2, k1, k2, p](std::string_view x) {
      std::string inner(2 * n2 + 1, kBoundary);
      for (std::size_t t = 0; t < inner.size(); ++t) {
        if (x[n1 + t] == kBoundary) continue;
        // Inner position i - n2 + t, and K1 divides K.
        const std::size_t phase = (p + k1 * (n2 / k1 + 1) + t - n2) % k1;
        inner[t] = h1.eval(phase, x.substr(t, 2 * n1 + 1));
      }
      return h2.eval(p % k2, inner);
    });
  }
  return HybridRule(std::move(phases));
}

std::string write_hybrid_file(const HybridRule& h) {
  std::ostringstream out;
  out << "%hca\nalphabet: " << h.alphabet().letters() << "\nradius: " << h.radius()
      << "\nphases: " << h.phase_count() << "\n";
  for (std::size_t k = 0; k < h.phase_count(); ++k) {
    const LocalRule& r = h.phase(k);
    const RuleTable t = r.table() ? *r.table() : materialize(r);
    const std::string pad(h.radius() - r.radius(), kWildcard);
    out << "phase " << k + 1 << ":\n";
    for (const auto& e : t.entries) out << pad << e.pattern << pad << " -> " << e.letter << "\n";
    out << "default -> " << t.default_letter << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string field(const std::vector<std::string>& lines, std::size_t k, const std::string& key) {
  const std::string prefix = key + ": ";
  if (k >= lines.size() || lines[k].rfind(prefix, 0) != 0)
    throw FormatError("line " + std::to_string(k + 1) + ": expected '" + prefix + "'");
  return lines[k].substr(prefix.size());
}

std::size_t number(const std::string& s, std::size_t k) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw FormatError("line " + std::to_string(k + 1) + ": expected a number");
  return std::stoul(s);
}

std::pair<std::string, std::string> split_arrow(const std::string& line, std::size_t k) {
  const auto arrow = line.find(" -> ");
  if (arrow == std::string::npos) throw FormatError("line " + std::to_string(k + 1) + ": expected '<pattern> -> <output>'");
  return {line.substr(0, arrow), line.substr(arrow + 4)};
}

}  // namespace

HybridRule parse_hybrid_file(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "%hca") throw FormatError("hybrid file: missing %hca header");
  const Alphabet alphabet(field(lines, 1, "alphabet"));
  const std::size_t radius = number(field(lines, 2, "radius"), 2);
  const std::size_t count = number(field(lines, 3, "phases"), 3);
  if (count == 0) throw FormatError("hybrid file: phases must be at least 1");
  std::vector<LocalRule> phases;
  std::size_t k = 4;
  for (std::size_t p = 1; p <= count; ++p) {
    if (k >= lines.size() || lines[k] != "phase " + std::to_string(p) + ":")
      throw FormatError("line " + std::to_string(k + 1) + ": expected 'phase " + std::to_string(p) + ":'");
    ++k;
    RuleTable t;
    bool closed = false;
    for (; k < lines.size() && !closed; ++k) {
      auto [lhs, rhs] = split_arrow(lines[k], k);
      if (rhs.size() != 1) throw FormatError("line " + std::to_string(k + 1) + ": output must be one letter");
      if (lhs == "default") {
        t.default_letter = rhs[0];
        closed = true;
      } else {
        t.entries.push_back({lhs, rhs[0]});
      }
    }
    if (!closed) throw FormatError("hybrid file: phase " + std::to_string(p) + " lacks a default line");
    try {
      phases.push_back(LocalRule::from_table(alphabet, radius, std::move(t)));
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError(std::string("hybrid file: ") + e.what());
    }
  }
  if (k != lines.size()) throw FormatError("hybrid file: trailing content");
  return HybridRule(std::move(phases));
}

FiniteWordRule::FiniteWordRule(Alphabet alphabet, std::size_t radius, Eval eval)
    : alphabet_(std::move(alphabet)), radius_(radius), eval_(std::move(eval)) {}

FiniteWordRule finite_word_rule(const Alphabet& alphabet, std::size_t radius, WordTable table) {
  if (!alphabet.contains_all(table.default_word)) throw Error("finite-word rule: default outside alphabet");
  for (const auto& [pattern, word] : table.entries) {
    if (pattern.size() != 2 * radius + 1) throw Error("finite-word rule: pattern '" + pattern + "' has wrong length");
    for (char c : pattern)
      if (c != kBoundary && c != kWildcard && !alphabet.contains(c))
        throw Error("finite-word rule: pattern letter outside alphabet");
    if (!alphabet.contains_all(word)) throw Error("finite-word rule: output outside alphabet");
  }
  return FiniteWordRule(alphabet, radius, [t = std::move(table)](std::string_view x) {
    for (const auto& [pattern, word] : t.entries)
      if (pattern_matches(pattern, x)) return word;
    return t.default_word;
  });
}

std::string write_fword_file(const Alphabet& alphabet, std::size_t radius, const WordTable& table) {
  auto word = [](const std::string& w) { return w.empty() ? std::string("-") : w; };
  std::ostringstream out;
  out << "%fca\nalphabet: " << alphabet.letters() << "\nradius: " << radius << "\n";
  for (const auto& [pattern, w] : table.entries) out << pattern << " -> " << word(w) << "\n";
  out << "default -> " << word(table.default_word) << "\n";
  return out.str();
}

FiniteWordRule parse_fword_file(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "%fca") throw FormatError("finite-word file: missing %fca header");
  const Alphabet alphabet(field(lines, 1, "alphabet"));
  const std::size_t radius = number(field(lines, 2, "radius"), 2);
  WordTable t;
  bool closed = false;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    if (closed) throw FormatError("finite-word file: content after default line");
    auto [lhs, rhs] = split_arrow(lines[k], k);
    if (rhs.empty()) throw FormatError("line " + std::to_string(k + 1) + ": empty output (use '-')");
    if (rhs == "-") rhs.clear();
    if (lhs == "default") {
      t.default_word = rhs;
      closed = true;
    } else {
      t.entries.emplace_back(lhs, rhs);
    }
  }
  if (!closed) throw FormatError("finite-word file: missing default line");
  try {
    return finite_word_rule(alphabet, radius, std::move(t));
  } catch (const Error& e) {
    throw FormatError(std::string("finite-word file: ") + e.what());
  }
}

FwordRun apply_fword(const FiniteWordRule& f, const Stream& s, std::size_t min_out, std::size_t stall_window) {
  if (!(f.alphabet() == s.alphabet())) throw AlphabetMismatch("apply_fword: alphabets differ");
  if (stall_window == 0) throw Error("apply_fword: stall window must be at least 1");
  FwordRun run;
  std::size_t silent = 0;
  while (run.output.size() < min_out) {
    const std::string w = f(neighborhood(s, f.radius(), run.consumed++));
    run.output += w;
    silent = w.empty() ? silent + 1 : 0;
    if (silent >= stall_window) {
      run.stalled = true;
      break;
    }
  }
  return run;
}

Stream interleave_twos(const Stream& xi) {
  if (!xi.alphabet().is_binary()) throw AlphabetMismatch("interleave_twos: ξ must be binary");
  return concat_blocks(Alphabet("012"), [xi](std::size_t i) {
    Block b(std::string(1, xi(i)));
    b.append("2", i);
    return b;
  });
}

std::size_t interleave_position(std::size_t i) { return i == 0 ? 0 : i + i * (i - 1) / 2; }

FiniteWordRule erase_twos_rule() {
  return FiniteWordRule(Alphabet("012"), 0, [](std::string_view x) {
    return x[0] == '2' ? std::string() : std::string(1, x[0]);
  });
}

std::optional<AlignedConflict> find_aligned_conflict(const Stream& xi, std::size_t radius, std::size_t horizon) {
  const Stream rho = interleave_twos(xi);
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < horizon; ++i) {
    // Δξ(i) = ξ(i) ⊕ ξ(i+1).
    const char target = xi(i) == xi(i + 1) ? '0' : '1';
    std::string w = neighborhood(rho, radius, interleave_position(i));
    auto [it, fresh] = seen.emplace(w, i);
    if (fresh) continue;
    const std::size_t j = it->second;
    if ((xi(j) == xi(j + 1) ? '0' : '1') != target) return AlignedConflict{radius, j, i, std::move(w)};
  }
  return std::nullopt;
}

}  // namespace streamlab
