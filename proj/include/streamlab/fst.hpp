#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "streamlab/alphabet.hpp"
#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

struct FstEdge {
  std::size_t next;
  std::string output;
};

/// Deterministic letter-to-word transducer. Implementations may create
/// states lazily, so a Transducer is single-threaded.
class Transducer {
public:
  virtual ~Transducer() = default;
  virtual const Alphabet& alphabet() const = 0;
  virtual std::size_t start() const = 0;
  virtual const FstEdge& step(std::size_t state, char letter) const = 0;
  /// States known so far.
  virtual std::size_t state_count() const = 0;
  virtual std::size_t max_output_length() const = 0;
};

/// Explicit machine with a total transition table.
class Fst final : public Transducer {
public:
  Fst(Alphabet alphabet, std::vector<std::string> state_names, std::size_t start,
      std::vector<FstEdge> edges);

  const Alphabet& alphabet() const override { return alphabet_; }
  std::size_t start() const override { return start_; }
  const FstEdge& step(std::size_t state, char letter) const override {
    return edges_[state * alphabet_.size() + static_cast<std::size_t>(alphabet_.index_of(letter))];
  }
  std::size_t state_count() const override { return names_.size(); }
  std::size_t max_output_length() const override { return max_out_; }

  const std::vector<std::string>& state_names() const noexcept { return names_; }

private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::size_t start_;
  std::vector<FstEdge> edges_;  // state-major, alphabet order
  std::size_t max_out_ = 0;
};

/// Accumulates `from letter -> to / output` lines and checks totality.
class FstBuilder {
public:
  explicit FstBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  FstBuilder& edge(const std::string& from, char letter, const std::string& to, const std::string& output);
  /// Throws FormatError if some (state, letter) pair is missing.
  Fst build(const std::string& start) const;

private:
  std::size_t intern(const std::string& name);

  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::vector<std::unique_ptr<FstEdge>>> table_;
};

std::string write_fst_file(const Fst& fst);
Fst parse_fst_file(std::string_view text);
Fst read_fst_file(const std::string& path);

/// Splits zip(σ, τ) back into σ.
Fst fig1_fst();
/// Reduces the period-doubling word to Thue-Morse.
Fst fig2_fst();
/// Reduces fig3:src to fig3:dst.
Fst fig3_fst();

struct FstRun {
  std::string output;
  std::size_t steps = 0;
  bool stalled = false;
};

/// 0 selects 4·|states|·(1 + max output length), re-evaluated as lazily
/// built machines discover states.
inline constexpr std::size_t kAutoStall = 0;

/// Feeds max_steps letters of s and concatenates the outputs; stops early
/// with stalled = true once stall_window consecutive steps emit nothing.
FstRun apply_fst(const Transducer& machine, const Stream& s, std::size_t max_steps,
                 std::size_t stall_window = kAutoStall);

/// The transducer simulating a local rule: states are the last 2N+1 symbols
/// read ('#'-padded), created on first visit.
class CaTransducer final : public Transducer {
public:
  explicit CaTransducer(LocalRule rule);

  const Alphabet& alphabet() const override { return rule_.alphabet(); }
  std::size_t start() const override { return 0; }
  const FstEdge& step(std::size_t state, char letter) const override;
  std::size_t state_count() const override { return windows_.size(); }
  std::size_t max_output_length() const override { return 1; }

  const std::string& window(std::size_t state) const { return windows_[state]; }

  /// Explores every reachable state; throws Error past `limit` states.
  Fst materialize(std::size_t limit = std::size_t{1} << 20) const;

private:
  std::size_t intern(std::string window) const;

  LocalRule rule_;
  mutable std::vector<std::string> windows_;
  mutable std::unordered_map<std::string, std::size_t> ids_;
  mutable std::vector<std::unique_ptr<FstEdge>> edges_;
};

CaTransducer compile_ca_to_fst(const LocalRule& rule);

}  // namespace streamlab
