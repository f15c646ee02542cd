#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace streamlab {

inline constexpr char kBoundary = '#';
inline constexpr char kWildcard = '_';

/// Ordered set of single-character letters. At least two letters, no
/// duplicates, and never the reserved boundary or wildcard symbols.
class Alphabet {
public:
  explicit Alphabet(std::string_view letters);

  static const Alphabet& binary();

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letters() const noexcept { return letters_; }
  char operator[](std::size_t i) const { return letters_[i]; }
  char first() const noexcept { return letters_.front(); }

  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Position of c in the ordering, or -1.
  int index_of(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
  bool contains_all(std::string_view word) const noexcept;

  bool is_binary() const noexcept { return letters_ == "01"; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.letters_ == b.letters_;
  }

private:
  std::string letters_;
  std::array<int, 256> index_{};
};

}  // namespace streamlab
