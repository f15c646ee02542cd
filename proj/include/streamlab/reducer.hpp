#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamlab/kernels.hpp"
#include "streamlab/rational.hpp"
#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

using kernels::Conflict;

/// One radius visited by Algorithm 1.
struct RadiusRecord {
  std::size_t radius;
  /// Value of the query counter c at the radius's first inner iteration.
  std::size_t first_query;
  /// Set when the radius was abandoned: the earlier and the mismatching index.
  std::optional<Conflict> conflict;
};

struct Algorithm1Result {
  bool yes = false;
  /// Radius and index i at which the budget ran out.
  std::size_t radius = 0;
  std::size_t index = 0;
  std::vector<RadiusRecord> radii;
};

/// Algorithm 1 as written: radii from 0, indices from i = N, one counter
/// increment per inner iteration, and on exhaustion "Yes" iff
/// i ≥ α·|Σ|^{2N+1}. CeilingExceeded propagates.
Algorithm1Result algorithm1(const Stream& sigma, const Stream& tau, std::size_t cmax, const Rational& alpha);

/// Neighborhood -> letter observations with the index of first sighting.
struct PartialRuleTable {
  struct Entry {
    std::string window;
    char letter;
    std::size_t first;
  };
  std::size_t radius = 0;
  std::vector<Entry> entries;  // in order of first sighting
};

struct InferResult {
  PartialRuleTable table;            // observations before any conflict
  std::optional<Conflict> conflict;  // first mismatch, if any
  std::size_t scanned = 0;
};

/// Scans i = 0..H-1, boundary windows included.
InferResult infer_rule(const Stream& sigma, const Stream& tau, std::size_t radius, std::size_t horizon);

/// Completes an observed table to a total rule: unseen windows map to the
/// alphabet's first letter.
LocalRule complete_rule(const Alphabet& alphabet, const PartialRuleTable& table);

enum class Sweep { serial, parallel };

struct Verdict {
  bool yes = false;
  std::size_t radius = 0;
  std::size_t scanned = 0;
  std::vector<Conflict> witnesses;  // one per refuted radius
  std::optional<LocalRule> rule;
};

/// Tries N = 0..max_radius and returns the first conflict-free radius as a
/// completed rule, verified to reproduce τ on every scanned index.
Verdict synthesize(const Stream& sigma, const Stream& tau, std::size_t max_radius, std::size_t horizon,
                   Sweep sweep = Sweep::serial);

struct Shift {
  std::size_t n;
  std::size_t m;
  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Least (n, m), ordered by n+m then n, with n+m ≤ max_shift and
/// σ(n+i) = τ(m+i) for all i < horizon.
std::optional<Shift> congruent(const Stream& sigma, const Stream& tau, std::size_t max_shift, std::size_t horizon);

std::string format_verdict(const Verdict& v);
std::string format_algorithm1(const Algorithm1Result& r);

}  // namespace streamlab
