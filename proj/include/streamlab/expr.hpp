#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/stream.hpp"

namespace streamlab {

/// Stream expression:
///   atom      name[:p1/p2/...]         catalog entry
///   zip(e,e)  inv(e)  xor(e)  naive(e)
///   drop(n,e) cons(w,e) mutate(e, i->a, ...)
///   applyca(file,e) encode(letters,e) maxvar(e,w,v,k)
struct Expr {
  enum class Kind { atom, zip, inv, xor_delta, naive, drop, cons, mutate, applyca, encode, maxvar };

  Kind kind = Kind::atom;
  std::string name;                 // atom name, word, file, or alphabet
  std::vector<std::string> params;  // atom parameters; maxvar's w, v, k
  std::vector<Expr> args;
  std::size_t count = 0;            // drop
  std::map<std::size_t, char> edits;
  std::size_t offset = 0;           // position in the source text
};

/// Throws ParseError carrying the byte offset.
Expr parse_expr(std::string_view text);

/// Structural rendering, e.g. "Zip(Atom tm, Atom pd)".
std::string describe(const Expr& e);

Stream eval(const Expr& e);
Stream eval_expr(std::string_view text);

}  // namespace streamlab
