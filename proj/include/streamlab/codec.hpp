#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// Self-delimiting binary block code φ(a) = 1·γ(a)·1·0^{2^d+1} with
/// d = ⌈log2 |Σ|⌉, so every block has length L = d + 2^d + 3.
class Codec {
public:
  /// γ assigns the binary numerals 0, 1, 2, ... in alphabet order.
  explicit Codec(Alphabet source);
  /// Explicit γ; must cover Σ injectively with words of length d.
  Codec(Alphabet source, const std::map<char, std::string>& gamma);

  const Alphabet& source() const noexcept { return source_; }
  std::size_t code_bits() const noexcept { return d_; }
  std::size_t block_length() const noexcept { return block_; }
  const std::string& gamma(char letter) const;
  const std::string& phi(char letter) const;
  /// γ⁻¹, or 0 when the word is no code word.
  char letter_of(std::string_view code) const;

private:
  Alphabet source_;
  std::size_t d_;
  std::size_t block_;
  std::map<char, std::string> gamma_;
  std::map<char, std::string> phi_;
  std::map<std::string, char, std::less<>> inverse_;
};

/// Parses "A=00,B=01,C=10".
std::map<char, std::string> parse_gamma(const std::string& text);

Stream encode(const Codec& codec, const Stream& s);
/// Blockwise γ⁻¹. A malformed block raises FormatError naming its index.
Stream decode(const Codec& codec, const Stream& b);

/// Binary rule of radius (N+1)·L acting on φ-images as `rule` acts on Σ
/// streams. The block phase is recovered from the stream start or from the
/// delimiter 0^{2^d+1}·1, so the result is exact from index 0.
LocalRule transport_rule(const Codec& codec, const LocalRule& rule);

/// ψ(A) = 00, ψ(B) = 01, ψ(C) = 10 on streams over ABC.
Stream naive_encode(const Stream& s);

}  // namespace streamlab
