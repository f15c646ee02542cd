#include "streamlab/stream.hpp"

#include <algorithm>
#include <atomic>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

std::atomic<std::size_t> g_ceiling{kDefaultIndexCeiling};

constexpr std::size_t kChunk = 4096;

class FunctionSource final : public detail::StreamSource {
public:
  FunctionSource(Alphabet alphabet, std::function<char(std::size_t)> fn)
      : StreamSource(std::move(alphabet)), fn_(std::move(fn)) {}

protected:
  void extend(std::string& buf, std::size_t target) override {
    while (buf.size() <= target) buf.push_back(fn_(buf.size()));
  }

private:
  std::function<char(std::size_t)> fn_;
};

class ConcatSource final : public detail::StreamSource {
public:
  ConcatSource(Alphabet alphabet, WordSeq blocks, std::size_t empty_scan)
      : StreamSource(std::move(alphabet)), blocks_(std::move(blocks)), empty_scan_(empty_scan) {}

protected:
  void extend(std::string& buf, std::size_t target) override {
    // Emit at least up to target, in bounded chunks so huge padding runs
    // are only expanded as far as they are read.
    const std::size_t goal = std::max(target + 1, std::min(buf.size() + kChunk, index_ceiling()));
    while (buf.size() < goal) {
      if (piece_ >= current_.pieces.size()) {
        next_block();
        continue;
      }
      const Piece& p = current_.pieces[piece_];
      while (buf.size() < goal && repeat_ < p.repeat) {
        const std::size_t take = std::min(p.word.size() - offset_, goal - buf.size());
        buf.append(p.word, offset_, take);
        offset_ += take;
        if (offset_ == p.word.size()) {
          offset_ = 0;
          ++repeat_;
        }
      }
      if (repeat_ >= p.repeat) {
        ++piece_;
        repeat_ = 0;
        offset_ = 0;
      }
    }
  }

private:
  void next_block() {
    std::size_t empties = 0;
    for (;;) {
      current_ = blocks_(block_++);
      if (current_.length() > 0) break;
      if (++empties >= empty_scan_)
        throw Error("concat_blocks: " + std::to_string(empties) + " consecutive empty blocks");
    }
    for (const Piece& p : current_.pieces)
      if (!alphabet().contains_all(p.word)) throw Error("concat_blocks: letter outside alphabet");
    piece_ = repeat_ = offset_ = 0;
  }

  WordSeq blocks_;
  std::size_t empty_scan_;
  std::size_t block_ = 0;
  Block current_;
  std::size_t piece_ = 0;
  std::size_t repeat_ = 0;
  std::size_t offset_ = 0;
};

}  // namespace

std::size_t index_ceiling() noexcept { return g_ceiling.load(std::memory_order_relaxed); }

void set_index_ceiling(std::size_t ceiling) noexcept {
  g_ceiling.store(ceiling, std::memory_order_relaxed);
}

char detail::StreamSource::grow(std::size_t i) {
  const std::size_t ceiling = index_ceiling();
  if (i >= ceiling) throw CeilingExceeded(i, ceiling);
  extend(buffer_, i);
  return buffer_[i];
}

Stream::Stream(std::shared_ptr<detail::StreamSource> source) : source_(std::move(source)) {}

std::string Stream::prefix(std::size_t n) const { return slice(0, n); }

std::string Stream::slice(std::size_t from, std::size_t length) const {
  std::string out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(source_->at(from + i));
  return out;
}

std::size_t Block::length() const noexcept {
  std::size_t n = 0;
  for (const Piece& p : pieces) n += p.word.size() * p.repeat;
  return n;
}

std::string Block::str() const {
  std::string out;
  for (const Piece& p : pieces)
    for (std::size_t r = 0; r < p.repeat; ++r) out += p.word;
  return out;
}

Stream from_function(Alphabet alphabet, std::function<char(std::size_t)> letter_at) {
  return Stream(std::make_shared<FunctionSource>(std::move(alphabet), std::move(letter_at)));
}

Stream concat_blocks(Alphabet alphabet, WordSeq blocks, std::size_t empty_scan) {
  return Stream(std::make_shared<ConcatSource>(std::move(alphabet), std::move(blocks), empty_scan));
}

Stream periodic(Alphabet alphabet, std::string word) {
  if (word.empty()) throw Error("periodic: empty word");
  if (!alphabet.contains_all(word)) throw Error("periodic: letter outside alphabet");
  return from_function(std::move(alphabet),
                       [w = std::move(word)](std::size_t i) { return w[i % w.size()]; });
}

Stream constant(Alphabet alphabet, char letter) { return periodic(std::move(alphabet), std::string(1, letter)); }

Stream zip(Stream a, Stream b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("zip: alphabets differ");
  Alphabet alpha = a.alphabet();
  return from_function(std::move(alpha), [a, b](std::size_t i) { return i % 2 == 0 ? a(i / 2) : b(i / 2); });
}

Stream inv(Stream a) {
  if (!a.alphabet().is_binary()) throw AlphabetMismatch("inv: alphabet must be {0,1}");
  return from_function(Alphabet::binary(), [a](std::size_t i) { return a(i) == '0' ? '1' : '0'; });
}

Stream mutate(Stream a, std::map<std::size_t, char> edits) {
  for (const auto& [i, c] : edits)
    if (!a.alphabet().contains(c)) throw Error(std::string("mutate: letter outside alphabet: ") + c);
  Alphabet alpha = a.alphabet();
  return from_function(std::move(alpha), [a, e = std::move(edits)](std::size_t i) {
    auto it = e.find(i);
    return it == e.end() ? a(i) : it->second;
  });
}

Stream drop(Stream a, std::size_t n) {
  Alphabet alpha = a.alphabet();
  return from_function(std::move(alpha), [a, n](std::size_t i) { return a(i + n); });
}

Stream cons(std::string word, Stream a) {
  if (!a.alphabet().contains_all(word)) throw Error("cons: letter outside alphabet");
  Alphabet alpha = a.alphabet();
  return from_function(std::move(alpha), [a, w = std::move(word)](std::size_t i) {
    return i < w.size() ? w[i] : a(i - w.size());
  });
}

}  // namespace streamlab
