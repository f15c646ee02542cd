#include "streamlab/alphabet.hpp"

#include <cctype>

#include "streamlab/error.hpp"

namespace streamlab {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  index_.fill(-1);
  if (letters_.size() < 2) throw Error("alphabet needs at least two letters");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto c = static_cast<unsigned char>(letters_[i]);
    if (letters_[i] == kBoundary || letters_[i] == kWildcard)
      throw Error(std::string("reserved symbol in alphabet: ") + letters_[i]);
    if (!std::isgraph(c)) throw Error("alphabet letters must be printable");
    if (index_[c] >= 0) throw Error(std::string("duplicate letter: ") + letters_[i]);
    index_[c] = static_cast<int>(i);
  }
}

const Alphabet& Alphabet::binary() {
  static const Alphabet kBinary("01");
  return kBinary;
}

bool Alphabet::contains_all(std::string_view word) const noexcept {
  for (char c : word)
    if (!contains(c)) return false;
  return true;
}

}  // namespace streamlab
