#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/rule.hpp"

namespace streamlab::kernels {

// Kernels over materialized prefixes. Each has a serial reference and an
// OpenMP version; both produce identical results.

/// out[i] = rule(window at i) for every i whose window ends inside `row`,
/// i.e. |out| = max(0, |row| - N). Negative positions read '#'.
std::string apply_prefix_serial(const LocalRule& rule, std::string_view row);
std::string apply_prefix_parallel(const LocalRule& rule, std::string_view row);

/// Indices first < second with equal windows and differing target letters.
struct Conflict {
  std::size_t radius;
  std::size_t first;
  std::size_t second;
};

/// Outcome of scanning indices 0..horizon-1 at one radius. On conflict,
/// `scanned` counts the indices visited including the conflicting one.
struct RadiusScan {
  std::size_t radius;
  std::size_t scanned;
  std::optional<Conflict> conflict;
};

/// Scans one radius. Requires |source| ≥ horizon + radius and
/// |target| ≥ horizon.
RadiusScan scan_radius(std::string_view source, std::string_view target, std::size_t radius,
                       std::size_t horizon);

/// Radii 0, 1, ... up to the first conflict-free one or max_radius.
std::vector<RadiusScan> sweep_serial(std::string_view source, std::string_view target,
                                     std::size_t max_radius, std::size_t horizon);
/// Same result; radii are scanned concurrently.
std::vector<RadiusScan> sweep_parallel(std::string_view source, std::string_view target,
                                       std::size_t max_radius, std::size_t horizon);

/// Threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

}  // namespace streamlab::kernels
