#include "streamlab/codec.hpp"

#include <set>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  return d;
}

std::string numeral(std::size_t value, std::size_t width) {
  std::string w(width, '0');
  for (std::size_t k = 0; k < width; ++k)
    if ((value >> (width - 1 - k)) & 1u) w[k] = '1';
  return w;
}

std::map<char, std::string> default_gamma(const Alphabet& a) {
  std::map<char, std::string> g;
  const std::size_t d = ceil_log2(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) g[a[k]] = numeral(k, d);
  return g;
}

}  // namespace

Codec::Codec(Alphabet source) : Codec(source, default_gamma(source)) {}

Codec::Codec(Alphabet source, const std::map<char, std::string>& gamma)
    : source_(std::move(source)), d_(ceil_log2(source_.size())), block_(d_ + (std::size_t{1} << d_) + 3) {
  if (d_ > 16) throw Error("codec: alphabet too large");
  for (char a : source_.letters()) {
    auto it = gamma.find(a);
    if (it == gamma.end()) throw Error(std::string("codec: no code word for ") + a);
    const std::string& w = it->second;
    if (w.size() != d_ || !Alphabet::binary().contains_all(w))
      throw Error(std::string("codec: code word for ") + a + " must be " + std::to_string(d_) + " bits");
    if (!inverse_.emplace(w, a).second) throw Error("codec: code word " + w + " used twice");
    gamma_[a] = w;
    phi_[a] = "1" + w + "1" + std::string((std::size_t{1} << d_) + 1, '0');
  }
  if (gamma.size() != source_.size()) throw Error("codec: code words for letters outside the alphabet");
}

const std::string& Codec::gamma(char letter) const {
  auto it = gamma_.find(letter);
  if (it == gamma_.end()) throw Error(std::string("codec: letter outside alphabet: ") + letter);
  return it->second;
}

const std::string& Codec::phi(char letter) const {
  auto it = phi_.find(letter);
  if (it == phi_.end()) throw Error(std::string("codec: letter outside alphabet: ") + letter);
  return it->second;
}

char Codec::letter_of(std::string_view code) const {
  auto it = inverse_.find(code);
  return it == inverse_.end() ? 0 : it->second;
}

std::map<char, std::string> parse_gamma(const std::string& text) {
  std::map<char, std::string> g;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    if (item.size() < 3 || item[1] != '=') throw Error("malformed --gamma item '" + item + "' (want X=bits)");
    if (!g.emplace(item[0], item.substr(2)).second) throw Error(std::string("--gamma repeats ") + item[0]);
    start = end + 1;
  }
  return g;
}

Stream encode(const Codec& codec, const Stream& s) {
  if (!(s.alphabet() == codec.source())) throw AlphabetMismatch("encode: stream alphabet differs from codec");
  return from_function(Alphabet::binary(), [codec, s](std::size_t i) {
    return codec.phi(s(i / codec.block_length()))[i % codec.block_length()];
  });
}

Stream decode(const Codec& codec, const Stream& b) {
  if (!b.alphabet().is_binary()) throw AlphabetMismatch("decode: binary stream expected");
  return from_function(codec.source(), [codec, b](std::size_t i) {
    const std::string block = b.slice(i * codec.block_length(), codec.block_length());
    const char a = codec.letter_of(std::string_view(block).substr(1, codec.code_bits()));
    if (a == 0 || block != codec.phi(a))
      throw FormatError("decode: malformed block " + std::to_string(i) + " '" + block + "'");
    return a;
  });
}

LocalRule transport_rule(const Codec& codec, const LocalRule& rule) {
  if (!(rule.alphabet() == codec.source())) throw AlphabetMismatch("transport_rule: rule alphabet differs from codec");
  const std::size_t n = rule.radius();
  const std::size_t len = codec.block_length();
  const std::size_t d = codec.code_bits();
  const std::size_t gap = (std::size_t{1} << d) + 1;
  const std::size_t radius = (n + 1) * len;
  return LocalRule(Alphabet::binary(), radius, [codec, rule, n, len, d, gap, radius](std::string_view x) -> char {
    // Any block start in the window fixes the phase: the stream start, or
    // the 1 after a delimiter run 0^{2^d+1}. The next block start always lies
    // within reach.
    std::size_t start = x.size();
    for (std::size_t q = 1; q < x.size() && start == x.size(); ++q) {
      if (x[q] == kBoundary) continue;
      if (x[q - 1] == kBoundary ||
          (x[q] == '1' && q >= gap && x.substr(q - gap, gap).find_first_not_of('0') == std::string_view::npos))
        start = q;
    }
    if (start == x.size()) return '0';  // not a φ-image around here
    const std::size_t o = (radius + len * (x.size() / len + 1) - start) % len;
    if (o == 0 || o == d + 1) return '1';
    if (o > d + 1) return '0';
    const std::size_t first = radius - o;  // start of the center's block
    std::string window(rule.width(), kBoundary);
    for (std::size_t k = 0; k < window.size(); ++k) {
      // Block offset k - n relative to the center block.
      const long pos = static_cast<long>(first) + (static_cast<long>(k) - static_cast<long>(n)) * static_cast<long>(len);
      if (pos < 0 || x[static_cast<std::size_t>(pos)] == kBoundary) continue;
      const char a = codec.letter_of(x.substr(static_cast<std::size_t>(pos) + 1, d));
      window[k] = a == 0 ? codec.source().first() : a;
    }
    return codec.gamma(rule(window))[o - 1];
  });
}

Stream naive_encode(const Stream& s) {
  if (s.alphabet().letters() != "ABC") throw AlphabetMismatch("naive_encode: alphabet must be ABC");
  return from_function(Alphabet::binary(), [s](std::size_t i) {
    const int k = s.alphabet().index_of(s(i / 2));
    return ((k >> (1 - i % 2)) & 1) ? '1' : '0';
  });
}

}  // namespace streamlab
