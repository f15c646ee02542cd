#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// K local rules used round-robin by output index: position i uses phase
/// (i mod K), i.e. δ_{(i mod K)+1} in 1-based numbering.
class HybridRule {
public:
  /// Phases may have different radii; the hybrid radius is the largest and
  /// each phase reads its own centered sub-window.
  explicit HybridRule(std::vector<LocalRule> phases);

  const Alphabet& alphabet() const noexcept { return phases_.front().alphabet(); }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t phase_count() const noexcept { return phases_.size(); }
  const LocalRule& phase(std::size_t k) const { return phases_[k]; }

  /// Phase k on a window of width 2·radius()+1.
  char eval(std::size_t k, std::string_view window) const;

private:
  std::vector<LocalRule> phases_;
  std::size_t radius_ = 0;
};

Stream apply_hybrid(const HybridRule& h, const Stream& s);

/// K = K1·K2 phases of radius N1+N2 equal to applying h1 then h2.
HybridRule compose_hybrid(const HybridRule& h1, const HybridRule& h2);

std::string write_hybrid_file(const HybridRule& h);
HybridRule parse_hybrid_file(std::string_view text);

/// Local rule whose outputs are finite words, possibly empty.
class FiniteWordRule {
public:
  using Eval = std::function<std::string(std::string_view window)>;
  FiniteWordRule(Alphabet alphabet, std::size_t radius, Eval eval);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t radius() const noexcept { return radius_; }
  std::string operator()(std::string_view window) const { return eval_(window); }

private:
  Alphabet alphabet_;
  std::size_t radius_;
  Eval eval_;
};

/// Word-valued table: patterns as in rule files, outputs may be empty.
struct WordTable {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string default_word;
};
FiniteWordRule finite_word_rule(const Alphabet& alphabet, std::size_t radius, WordTable table);

std::string write_fword_file(const Alphabet& alphabet, std::size_t radius, const WordTable& table);
FiniteWordRule parse_fword_file(std::string_view text);

struct FwordRun {
  std::string output;
  std::size_t consumed = 0;
  bool stalled = false;
};

inline constexpr std::size_t kDefaultFwordStall = std::size_t{1} << 16;

/// Concatenates δ(V(0)) δ(V(1)) ... until at least min_out letters exist or
/// stall_window consecutive windows produced ε.
FwordRun apply_fword(const FiniteWordRule& f, const Stream& s, std::size_t min_out,
                     std::size_t stall_window = kDefaultFwordStall);

/// ρ = Π ξ(i)·2^i over {0,1,2}.
Stream interleave_twos(const Stream& xi);
/// Index of ξ(i) inside ρ.
std::size_t interleave_position(std::size_t i);

/// Radius-0 finite-word rule erasing the letter 2.
FiniteWordRule erase_twos_rule();

/// Two letters of Δξ that a finite-word rule on ρ would have to emit from
/// identical radius-N windows (the windows centred on ξ(i) and ξ(i')).
struct AlignedConflict {
  std::size_t radius;
  std::size_t first;
  std::size_t second;
  std::string window;
};

std::optional<AlignedConflict> find_aligned_conflict(const Stream& xi, std::size_t radius, std::size_t horizon);

}  // namespace streamlab
