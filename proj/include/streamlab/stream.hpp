#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/alphabet.hpp"

namespace streamlab {

inline constexpr std::size_t kDefaultIndexCeiling = std::size_t{1} << 24;

/// Process-wide bound on stream indices; queries at or past it throw
/// CeilingExceeded.
std::size_t index_ceiling() noexcept;
void set_index_ceiling(std::size_t ceiling) noexcept;

namespace detail {

/// Memoizing letter producer behind a Stream. Not thread-safe: the prefix
/// buffer grows on demand.
class StreamSource {
public:
  explicit StreamSource(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  virtual ~StreamSource() = default;
  StreamSource(const StreamSource&) = delete;
  StreamSource& operator=(const StreamSource&) = delete;

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  char at(std::size_t i) {
    if (i < buffer_.size()) return buffer_[i];
    return grow(i);
  }

protected:
  /// Appends letters to buf until buf.size() > target (may overshoot).
  virtual void extend(std::string& buf, std::size_t target) = 0;

private:
  char grow(std::size_t i);

  Alphabet alphabet_;
  std::string buffer_;
};

}  // namespace detail

/// Deterministic, lazily evaluated infinite word. Copies share one memo
/// buffer, so a Stream value must stay on one thread.
class Stream {
public:
  explicit Stream(std::shared_ptr<detail::StreamSource> source);

  const Alphabet& alphabet() const noexcept { return source_->alphabet(); }
  char at(std::size_t i) const { return source_->at(i); }
  char operator()(std::size_t i) const { return source_->at(i); }
  std::string prefix(std::size_t n) const;
  std::string slice(std::size_t from, std::size_t length) const;

private:
  std::shared_ptr<detail::StreamSource> source_;
};

/// Stream from a pure index function. The function must return letters of
/// the alphabet and be deterministic.
Stream from_function(Alphabet alphabet, std::function<char(std::size_t)> letter_at);

/// A piece `word` repeated `repeat` times; blocks are built from pieces so
/// long padding runs never have to be materialized.
struct Piece {
  std::string word;
  std::size_t repeat = 1;
};

struct Block {
  Block() = default;
  Block(std::string word) { pieces.push_back({std::move(word), 1}); }  // NOLINT
  Block(const char* word) : Block(std::string(word)) {}                 // NOLINT
  Block& append(std::string word, std::size_t repeat = 1) {
    if (repeat > 0 && !word.empty()) pieces.push_back({std::move(word), repeat});
    return *this;
  }
  std::size_t length() const noexcept;
  std::string str() const;

  std::vector<Piece> pieces;
};

/// Infinite sequence of finite blocks, at least infinitely many nonempty.
using WordSeq = std::function<Block(std::size_t)>;

inline constexpr std::size_t kDefaultEmptyBlockScan = std::size_t{1} << 20;

/// Concatenation of all blocks. Throws Error when `empty_scan` consecutive
/// blocks are empty.
Stream concat_blocks(Alphabet alphabet, WordSeq blocks,
                     std::size_t empty_scan = kDefaultEmptyBlockScan);

/// w^ω.
Stream periodic(Alphabet alphabet, std::string word);
Stream constant(Alphabet alphabet, char letter);

/// result(2i) = a(i), result(2i+1) = b(i).
Stream zip(Stream a, Stream b);
/// Bitwise complement of a binary stream.
Stream inv(Stream a);
/// Pointwise override at finitely many indices.
Stream mutate(Stream a, std::map<std::size_t, char> edits);
/// result(i) = a(i + n).
Stream drop(Stream a, std::size_t n);
/// w followed by a.
Stream cons(std::string word, Stream a);

}  // namespace streamlab
