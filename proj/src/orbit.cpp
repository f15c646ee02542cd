#include "streamlab/orbit.hpp"

#include "streamlab/error.hpp"

namespace streamlab {

Orbit orbit(const LocalRule& rule, const Stream& s, std::size_t width, std::size_t steps, Exec exec) {
  if (!s.alphabet().is_binary() || !rule.alphabet().is_binary())
    throw AlphabetMismatch("orbit: rendering needs binary streams");
  if (width == 0 || steps == 0) throw Error("orbit: width and steps must be at least 1");
  Orbit o;
  o.width = width;
  std::string row = s.prefix(width + steps * rule.radius());
  o.rows.push_back(row.substr(0, width));
  for (std::size_t t = 0; t < steps; ++t) {
    row = exec == Exec::parallel ? kernels::apply_prefix_parallel(rule, row) : kernels::apply_prefix_serial(rule, row);
    o.rows.push_back(row.substr(0, width));
  }
  return o;
}

std::string to_pbm(const Orbit& o) {
  std::string out = "P1\n" + std::to_string(o.width) + " " + std::to_string(o.rows.size()) + "\n";
  for (const std::string& row : o.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ' ';
      out += row[k];
    }
    out += '\n';
  }
  return out;
}

std::string to_ascii(const Orbit& o) {
  std::string out;
  for (const std::string& row : o.rows) out += row + "\n";
  return out;
}

}  // namespace streamlab
