#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// True when w is not a proper power of a shorter word.
bool is_primitive(const std::string& w);

/// Radius |wm|-1 table rule sending wm^ω to wn^ω: each rotation of wm seen
/// from the center emits the aligned letter of wn. Requires |wn| to divide
/// |wm| and wm to be primitive.
LocalRule periodic_rule(const Alphabet& alphabet, const std::string& wm, const std::string& wn);

/// Radius 2i+1 rule collapsing the τ_{i+1} patches of mu:i into runs of 1s.
LocalRule mu_chain_rule(std::size_t i);

/// Image of an isolated 1 under a binary rule: w = Π_{k=0}^{2N} δ(0^{2N-k} 1 0^k).
std::string sparse_extract_w(const LocalRule& rule);

/// Radius (|w|-1)/2 rule emitting 1 exactly on the window equal to w.
/// Throws for even-length or all-zero w.
LocalRule sparse_recover_rule(const std::string& w);

/// Joint encoding of two sparse binary streams.
struct SupremaEncoding {
  Stream xi;
  /// Position from which both inputs keep their 1s at least 8 apart; ξ is 0
  /// before it.
  std::size_t start;
};

inline constexpr std::size_t kSupremaScan = std::size_t{1} << 16;
/// Maximum distance between a σ-1 and a τ-1 that share one code word.
inline constexpr std::size_t kSupremaPairing = 7;

/// Throws Error if a gap shorter than 8 appears within [scan, 2·scan).
SupremaEncoding suprema_encode(const Stream& sigma, const Stream& tau, std::size_t scan = kSupremaScan);

/// Rules recovering σ and τ from ξ at every index ≥ start.
std::pair<LocalRule, LocalRule> suprema_decode_rules();

/// Radius |v̂|-1 rule that writes w back over every occurrence of v̂.
LocalRule maximal_inverse_rule(const std::string& w, const std::string& hat);

}  // namespace streamlab
