#include "streamlab/reducer.hpp"

#include <algorithm>
#include <sstream>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

void check_alphabets(const Stream& a, const Stream& b, const char* who) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch(std::string(who) + ": alphabets differ");
}

/// Grows a materialized copy of a stream's prefix geometrically.
class PrefixCache {
public:
  explicit PrefixCache(const Stream& s) : s_(s) {}
  std::string_view upto(std::size_t end) {
    if (end > text_.size()) {
      const std::size_t goal = std::max(end, std::min(2 * text_.size() + 64, index_ceiling()));
      text_ += s_.slice(text_.size(), goal - text_.size());
    }
    return text_;
  }

private:
  const Stream& s_;
  std::string text_;
};

InferResult infer_on_prefix(std::string_view source, std::string_view target, std::size_t radius,
                            std::size_t horizon) {
  InferResult r;
  r.table.radius = radius;
  const std::string p = std::string(radius, kBoundary) + std::string(source.substr(0, horizon + radius));
  std::unordered_map<std::string_view, std::size_t> seen;  // window -> entry
  for (std::size_t i = 0; i < horizon; ++i) {
    const std::string_view w = std::string_view(p).substr(i, 2 * radius + 1);
    auto [it, fresh] = seen.emplace(w, r.table.entries.size());
    r.scanned = i + 1;
    if (fresh) {
      r.table.entries.push_back({std::string(w), target[i], i});
    } else if (r.table.entries[it->second].letter != target[i]) {
      r.conflict = Conflict{radius, r.table.entries[it->second].first, i};
      return r;
    }
  }
  return r;
}

}  // namespace

Algorithm1Result algorithm1(const Stream& sigma, const Stream& tau, std::size_t cmax, const Rational& alpha) {
  check_alphabets(sigma, tau, "algorithm1");
  if (cmax == 0) throw Error("algorithm1: c_max must be at least 1");
  const std::uint64_t letters = sigma.alphabet().size();
  PrefixCache src(sigma);
  PrefixCache dst(tau);
  Algorithm1Result r;
  std::size_t c = 0;
  for (std::size_t n = 0;; ++n) {
    // window -> (letter, index of first sighting)
    std::unordered_map<std::string, std::pair<char, std::size_t>> cache;
    r.radii.push_back({n, c + 1, std::nullopt});
    for (std::size_t i = n;; ++i) {
      if (++c > cmax) {
        r.yes = at_least_scaled_power(i, alpha, letters, 2 * static_cast<std::uint64_t>(n) + 1);
        r.radius = n;
        r.index = i;
        return r;
      }
      std::string window(src.upto(i + n + 1).substr(i - n, 2 * n + 1));
      const char letter = dst.upto(i + 1)[i];
      auto [it, fresh] = cache.try_emplace(std::move(window), letter, i);
      if (!fresh && it->second.first != letter) {
        r.radii.back().conflict = Conflict{n, it->second.second, i};
        break;
      }
    }
  }
}

InferResult infer_rule(const Stream& sigma, const Stream& tau, std::size_t radius, std::size_t horizon) {
  check_alphabets(sigma, tau, "infer_rule");
  if (horizon == 0) throw Error("infer_rule: horizon must be at least 1");
  return infer_on_prefix(sigma.prefix(horizon + radius), tau.prefix(horizon), radius, horizon);
}

LocalRule complete_rule(const Alphabet& alphabet, const PartialRuleTable& table) {
  RuleTable t;
  t.default_letter = alphabet.first();
  for (const auto& e : table.entries)
    if (e.letter != t.default_letter) t.entries.push_back({e.window, e.letter});
  return LocalRule::from_table(alphabet, table.radius, std::move(t));
}

Verdict synthesize(const Stream& sigma, const Stream& tau, std::size_t max_radius, std::size_t horizon, Sweep sweep) {
  check_alphabets(sigma, tau, "synthesize");
  if (horizon == 0) throw Error("synthesize: horizon must be at least 1");
  const std::string src = sigma.prefix(horizon + max_radius);
  const std::string dst = tau.prefix(horizon);
  const auto scans = sweep == Sweep::parallel ? kernels::sweep_parallel(src, dst, max_radius, horizon)
                                              : kernels::sweep_serial(src, dst, max_radius, horizon);
  Verdict v;
  for (const auto& s : scans)
    if (s.conflict) v.witnesses.push_back(*s.conflict);
  v.radius = scans.back().radius;
  v.scanned = scans.back().scanned;
  if (scans.back().conflict) return v;

  const InferResult inferred = infer_on_prefix(src, dst, v.radius, horizon);
  if (inferred.conflict) throw Error("synthesize: sweep and table disagree");
  LocalRule rule = complete_rule(sigma.alphabet(), inferred.table);
  const std::string replay = kernels::apply_prefix_serial(rule, std::string_view(src).substr(0, horizon + v.radius));
  if (replay.substr(0, horizon) != dst) throw Error("synthesize: completed rule fails verification");
  v.yes = true;
  v.rule = std::move(rule);
  return v;
}

std::optional<Shift> congruent(const Stream& sigma, const Stream& tau, std::size_t max_shift, std::size_t horizon) {
  check_alphabets(sigma, tau, "congruent");
  if (max_shift == 0 || horizon == 0) throw Error("congruent: max_shift and horizon must be at least 1");
  const std::string a = sigma.prefix(max_shift + horizon);
  const std::string b = tau.prefix(max_shift + horizon);
  for (std::size_t total = 0; total <= max_shift; ++total)
    for (std::size_t n = 0; n <= total; ++n)
      if (a.compare(n, horizon, b, total - n, horizon) == 0) return Shift{n, total - n};
  return std::nullopt;
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "answer: " << (v.yes ? "yes" : "no") << "\n"
      << "radius: " << v.radius << "\n"
      << "scanned: " << v.scanned << "\n";
  for (const auto& w : v.witnesses) out << "witness: " << w.radius << " " << w.first << " " << w.second << "\n";
  if (v.rule) out << write_rule_file(*v.rule);
  return out.str();
}

std::string format_algorithm1(const Algorithm1Result& r) {
  std::ostringstream out;
  out << (r.yes ? "Yes" : "No") << "\n"
      << "radius: " << r.radius << "\n"
      << "index: " << r.index << "\n";
  // Every radius below the final one was refuted; list the last few.
  constexpr std::size_t kShown = 8;
  const std::size_t refuted = r.radii.size() - 1;
  out << "refuted: " << refuted << "\n";
  for (std::size_t k = refuted > kShown ? refuted - kShown : 0; k < refuted; ++k) {
    const auto& c = *r.radii[k].conflict;
    out << "witness: " << c.radius << " " << c.first << " " << c.second << "\n";
  }
  return out.str();
}

}  // namespace streamlab
