#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "streamlab/kernels.hpp"
#include "streamlab/rule.hpp"
#include "streamlab/stream.hpp"

namespace streamlab {

/// Space-time diagram: rows[t] is the width-W prefix of the t-th iterate.
struct Orbit {
  std::size_t width = 0;
  std::vector<std::string> rows;
};

enum class Exec { serial, parallel };

/// Iterates on a materialized prefix of length W + T·N, so every row is an
/// exact prefix of the genuine iterate (no right-edge truncation).
Orbit orbit(const LocalRule& rule, const Stream& s, std::size_t width, std::size_t steps,
            Exec exec = Exec::serial);

/// PBM P1 text; 1 is black.
std::string to_pbm(const Orbit& o);
/// One row of 0/1 per line.
std::string to_ascii(const Orbit& o);

}  // namespace streamlab
