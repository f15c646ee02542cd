#include "streamlab/expr.hpp"

#include <cctype>

#include "streamlab/catalog.hpp"
#include "streamlab/codec.hpp"
#include "streamlab/error.hpp"
#include "streamlab/rule.hpp"

namespace streamlab {

namespace {

struct Function {
  const char* name;
  Expr::Kind kind;
};

constexpr Function kFunctions[] = {
    {"zip", Expr::Kind::zip},         {"inv", Expr::Kind::inv},       {"xor", Expr::Kind::xor_delta},
    {"naive", Expr::Kind::naive},     {"drop", Expr::Kind::drop},     {"cons", Expr::Kind::cons},
    {"mutate", Expr::Kind::mutate},   {"applyca", Expr::Kind::applyca}, {"encode", Expr::Kind::encode},
    {"maxvar", Expr::Kind::maxvar},
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_delim(char c) { return c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c)); }

  std::string token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number(const std::string& s, std::size_t at) const {
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a number, got '" + s + "'", at);
    return std::stoull(s);
  }

  Expr expr() {
    skip_space();
    const std::size_t at = pos_;
    std::string head = token();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      for (const Function& f : kFunctions)
        if (head == f.name) return call(f.kind, at);
      throw ParseError("unknown function '" + head + "'", at);
    }
    if (head.empty()) throw ParseError("expected a stream expression", at);
    Expr e;
    e.offset = at;
    const auto colon = head.find(':');
    e.name = head.substr(0, colon);
    if (e.name.empty()) throw ParseError("empty stream name", at);
    if (colon != std::string::npos) {
      const std::string rest = head.substr(colon + 1);
      std::size_t start = 0;
      for (;;) {
        const auto slash = rest.find('/', start);
        e.params.push_back(rest.substr(start, slash - start));
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
    }
    return e;
  }

  Expr call(Expr::Kind kind, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.offset = at;
    expect('(');
    switch (kind) {
      case Expr::Kind::zip:
        e.args.push_back(expr());
        expect(',');
        e.args.push_back(expr());
        break;
      case Expr::Kind::inv:
      case Expr::Kind::xor_delta:
      case Expr::Kind::naive:
        e.args.push_back(expr());
        break;
      case Expr::Kind::drop: {
        skip_space();
        const std::size_t n_at = pos_;
        e.count = number(token(), n_at);
        expect(',');
        e.args.push_back(expr());
        break;
      }
      case Expr::Kind::cons:
      case Expr::Kind::applyca:
      case Expr::Kind::encode:
        e.name = token();
        if (kind != Expr::Kind::cons && e.name.empty()) fail("expected a file name or alphabet");
        expect(',');
        e.args.push_back(expr());
        break;
      case Expr::Kind::mutate:
        e.args.push_back(expr());
        for (;;) {
          skip_space();
          if (pos_ < text_.size() && text_[pos_] == ')') break;
          expect(',');
          skip_space();
          const std::size_t edit_at = pos_;
          const std::string edit = token();
          const auto arrow = edit.find("->");
          if (arrow == std::string::npos || arrow + 3 != edit.size())
            throw ParseError("expected an edit 'index->letter', got '" + edit + "'", edit_at);
          e.edits[number(edit.substr(0, arrow), edit_at)] = edit.back();
        }
        break;
      case Expr::Kind::maxvar:
        e.args.push_back(expr());
        for (int k = 0; k < 3; ++k) {
          expect(',');
          e.params.push_back(token());
        }
        number(e.params[2], at);
        break;
      case Expr::Kind::atom:
        break;
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* kind_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::atom: return "Atom";
    case Expr::Kind::zip: return "Zip";
    case Expr::Kind::inv: return "Inv";
    case Expr::Kind::xor_delta: return "Xor";
    case Expr::Kind::naive: return "Naive";
    case Expr::Kind::drop: return "Drop";
    case Expr::Kind::cons: return "Cons";
    case Expr::Kind::mutate: return "Mutate";
    case Expr::Kind::applyca: return "ApplyCa";
    case Expr::Kind::encode: return "Encode";
    case Expr::Kind::maxvar: return "MaxVar";
  }
  return "?";
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string describe(const Expr& e) {
  std::string out = kind_name(e.kind);
  if (e.kind == Expr::Kind::atom) {
    out += " " + e.name;
    if (!e.params.empty()) {
      out += "(";
      for (std::size_t k = 0; k < e.params.size(); ++k) out += (k ? ", \"" : "\"") + e.params[k] + "\"";
      out += ")";
    }
    return out;
  }
  std::vector<std::string> parts;
  if (e.kind == Expr::Kind::drop) parts.push_back(std::to_string(e.count));
  if (e.kind == Expr::Kind::cons || e.kind == Expr::Kind::applyca || e.kind == Expr::Kind::encode)
    parts.push_back("\"" + e.name + "\"");
  for (const Expr& a : e.args) parts.push_back(describe(a));
  for (const auto& [i, c] : e.edits) parts.push_back(std::to_string(i) + "->" + c);
  for (const std::string& p : e.params) parts.push_back("\"" + p + "\"");
  out += "(";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out + ")";
}

Stream eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::atom: return build(e.name, e.params);
    case Expr::Kind::zip: return zip(eval(e.args[0]), eval(e.args[1]));
    case Expr::Kind::inv: return inv(eval(e.args[0]));
    case Expr::Kind::xor_delta: return apply(xor_rule(), eval(e.args[0]));
    case Expr::Kind::naive: return naive_encode(eval(e.args[0]));
    case Expr::Kind::drop: return drop(eval(e.args[0]), e.count);
    case Expr::Kind::cons: return cons(e.name, eval(e.args[0]));
    case Expr::Kind::mutate: return mutate(eval(e.args[0]), e.edits);
    case Expr::Kind::applyca: return apply(read_rule_file(e.name), eval(e.args[0]));
    case Expr::Kind::encode: return encode(Codec(Alphabet(e.name)), eval(e.args[0]));
    case Expr::Kind::maxvar:
      return maximal_variant(eval(e.args[0]), e.params[0], e.params[1], std::stoull(e.params[2]));
  }
  throw Error("unreachable expression kind");
}

Stream eval_expr(std::string_view text) { return eval(parse_expr(text)); }

}  // namespace streamlab
