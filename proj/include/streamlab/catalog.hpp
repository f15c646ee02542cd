#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "streamlab/rational.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// Named stream generator addressable from the expression language as
/// `name` or `name:p1/p2/...`.
struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter synopsis
  std::string doc;
  std::function<Stream(const std::vector<std::string>&)> build;
};

const std::vector<CatalogEntry>& catalog();

/// Throws Error for unknown names or malformed parameters.
Stream build(const std::string& name, const std::vector<std::string>& params);

// Direct constructors behind the catalog entries.

/// popcount(i) mod 2.
Stream thue_morse();
/// 1 iff the 2-adic valuation of i+1 is even.
Stream period_doubling();
/// Fixed point of 0 -> 001, 1 -> 110.
Stream mephisto();

inline constexpr const char* kSierpinskiPrefix = "00111100011000011";
/// The 17-letter fixture; indices past it throw Error.
Stream sierpinski_prefix();

/// (1 0^{k-1})^ω.
Stream tau(std::size_t k);

enum class GapLaw { linear, square, pow2 };
GapLaw parse_gap_law(const std::string& name);
std::uint64_t gap_length(GapLaw law, std::size_t i);
/// Π_{i≥0} 1·0^{c(i)}.
Stream sparse(GapLaw law);

/// Π_{j≥0} (1 0^{i-1})^j 0^{2^j}.
Stream sigma_weak(std::size_t i);

/// Block schedule of the descending chain: the k of block t (1-based), rows
/// (2), (2,3), (2,3,4), ...
std::size_t mu_block_period(std::size_t t);
/// Block t is the length-t prefix of τ_k, with k replaced by 1 when k ≤ j.
Stream mu(std::size_t j);

Stream primes();

/// Incomparable pair: σ_i = 0^{5i+2} 1 0^i and τ_i = 0^{3i+1} 1 0^{3i+1}.
Stream diag_a();
Stream diag_b();

/// Π 0^{i+1} 1 ξ(i+1) and Π 0^{i+1} 1 ξ(i), ξ = (001)^ω.
Stream fig3_source();
Stream fig3_target();

/// Aligned enumeration of all binary word pairs (w1, w2) with |w1| = |w2|,
/// lengths ascending, pairs in lexicographic order.
Stream unipair_a();
Stream unipair_b();

/// Π 0^{⌈α·s^{2i+1}⌉} 1 over the binary alphabet.
Stream algoctr(const Rational& alpha, std::size_t sigma_size);

/// 1·v·1·0^{|v|+1}: a binary word that cannot overlap its own shifts.
std::string unoverlapping_hat(const std::string& v);

/// Scans base left to right for non-overlapping occurrences of w and
/// replaces every k-th of them by v̂ (|w| must equal |v̂|).
Stream maximal_variant(Stream base, std::string w, const std::string& v, std::size_t every);

}  // namespace streamlab
