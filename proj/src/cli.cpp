#include "streamlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "streamlab/catalog.hpp"
#include "streamlab/codec.hpp"
#include "streamlab/error.hpp"
#include "streamlab/expr.hpp"
#include "streamlab/fst.hpp"
#include "streamlab/orbit.hpp"
#include "streamlab/reducer.hpp"
#include "streamlab/rule.hpp"

namespace streamlab::cli {

namespace {

struct Stalled : Error {
  using Error::Error;
};

class CeilingScope {
public:
  CeilingScope() : saved_(index_ceiling()) {
    if (const char* env = std::getenv("STREAMLAB_MAX_PREFIX")) {
      const std::string v = env;
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18)
        throw Error("STREAMLAB_MAX_PREFIX must be a positive integer");
      set_index_ceiling(std::stoull(v));
    }
  }
  ~CeilingScope() { set_index_ceiling(saved_); }
  CeilingScope(const CeilingScope&) = delete;
  CeilingScope& operator=(const CeilingScope&) = delete;

private:
  std::size_t saved_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cellular-automaton reducibility of infinite words", "streamlab"};
  app.require_subcommand(1);
  int code = kOk;

  std::size_t len = 64;
  std::string expr1, expr2, file1, file2, output;

  auto* gen = app.add_subcommand("gen", "Print a stream prefix");
  gen->add_option("expr", expr1, "stream expression")->required();
  gen->add_option("--len", len, "prefix length")->capture_default_str();

  auto* apply_ca = app.add_subcommand("apply-ca", "Apply a rule file to a stream");
  apply_ca->add_option("rule", file1, "rule file (%ca)")->required();
  apply_ca->add_option("expr", expr1, "stream expression")->required();
  apply_ca->add_option("--len", len, "prefix length")->capture_default_str();

  std::size_t steps = 64;
  std::size_t stall = kAutoStall;
  auto* apply_fst_cmd = app.add_subcommand("apply-fst", "Run a transducer file on a stream");
  apply_fst_cmd->add_option("machine", file1, "transducer file (%fst)")->required();
  apply_fst_cmd->add_option("expr", expr1, "stream expression")->required();
  apply_fst_cmd->add_option("--steps", steps, "input letters to consume")->capture_default_str();
  apply_fst_cmd->add_option("--stall", stall, "silent steps before reporting a stall (0 = automatic)");

  auto* compose_cmd = app.add_subcommand("compose", "Compose two rule files (first, then second)");
  compose_cmd->add_option("first", file1, "rule applied first")->required();
  compose_cmd->add_option("second", file2, "rule applied second")->required();
  compose_cmd->add_option("-o,--output", output, "output rule file")->required();

  std::size_t cmax = 100000;
  std::string alpha = "1";
  auto* check = app.add_subcommand("check", "Algorithm 1 estimate of src ▷ dst");
  check->add_option("src", expr1)->required();
  check->add_option("dst", expr2)->required();
  check->add_option("--cmax", cmax, "query budget")->capture_default_str();
  check->add_option("--alpha", alpha, "confidence factor p/q")->capture_default_str();

  std::size_t max_radius = 4, horizon = 1000;
  bool parallel = false;
  auto* synth = app.add_subcommand("synth", "Synthesize a rule or report conflict witnesses");
  synth->add_option("src", expr1)->required();
  synth->add_option("dst", expr2)->required();
  synth->add_option("--max-radius", max_radius)->capture_default_str();
  synth->add_option("--horizon", horizon)->capture_default_str();
  synth->add_flag("--parallel", parallel, "scan radii concurrently");

  std::optional<unsigned> eca;
  std::vector<std::string> orbit_args;
  std::size_t width = 64;
  bool ascii = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "Render a space-time diagram");
  orbit_cmd->add_option("--eca", eca, "elementary rule number 0..255");
  orbit_cmd->add_option("args", orbit_args, "[rule.ca] expr")->required();
  orbit_cmd->add_option("--width", width)->capture_default_str();
  orbit_cmd->add_option("--steps", steps)->capture_default_str();
  orbit_cmd->add_option("-o,--output", output, "PBM output file");
  orbit_cmd->add_flag("--ascii", ascii, "print rows of 0/1");

  std::string letters, gamma;
  auto* encode_cmd = app.add_subcommand("encode", "Binary block encoding of a stream");
  encode_cmd->add_option("expr", expr1)->required();
  encode_cmd->add_option("--alphabet", letters, "source alphabet")->required();
  encode_cmd->add_option("--gamma", gamma, "code words, e.g. A=00,B=01,C=10");
  encode_cmd->add_option("--len", len)->capture_default_str();

  std::size_t max_shift = 10;
  auto* congruent_cmd = app.add_subcommand("congruent", "Find shifts making two streams agree");
  congruent_cmd->add_option("first", expr1)->required();
  congruent_cmd->add_option("second", expr2)->required();
  congruent_cmd->add_option("--max-shift", max_shift)->capture_default_str();
  congruent_cmd->add_option("--horizon", horizon)->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "List named streams");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    CeilingScope ceiling;
    if (*gen) {
      out << eval_expr(expr1).prefix(len) << "\n";
    } else if (*apply_ca) {
      out << apply(read_rule_file(file1), eval_expr(expr1)).prefix(len) << "\n";
    } else if (*apply_fst_cmd) {
      const FstRun r = apply_fst(read_fst_file(file1), eval_expr(expr1), steps, stall);
      out << r.output << "\n";
      if (r.stalled) throw Stalled("stall after " + std::to_string(r.steps) + " steps");
    } else if (*compose_cmd) {
      write_file(output, write_rule_file(compose(read_rule_file(file1), read_rule_file(file2))));
    } else if (*check) {
      const auto r = algorithm1(eval_expr(expr1), eval_expr(expr2), cmax, parse_rational(alpha));
      out << format_algorithm1(r);
      code = r.yes ? kOk : kNegative;
    } else if (*synth) {
      const Verdict v = synthesize(eval_expr(expr1), eval_expr(expr2), max_radius, horizon,
                                   parallel ? Sweep::parallel : Sweep::serial);
      out << format_verdict(v);
      code = v.yes ? kOk : kNegative;
    } else if (*orbit_cmd) {
      const std::size_t want = eca ? 1 : 2;
      if (orbit_args.size() != want)
        throw Error(eca ? "orbit --eca takes one stream expression" : "orbit takes <rule.ca> <expr> or --eca n <expr>");
      if (eca && *eca > 255) throw Error("--eca must be in 0..255");
      const LocalRule rule = eca ? eca_rule(*eca) : read_rule_file(orbit_args[0]);
      const Orbit o = orbit(rule, eval_expr(orbit_args.back()), width, steps);
      if (!output.empty()) write_file(output, to_pbm(o));
      if (ascii) out << to_ascii(o);
      if (output.empty() && !ascii) out << to_pbm(o);
    } else if (*encode_cmd) {
      const Alphabet a(letters);
      const Codec codec = gamma.empty() ? Codec(a) : Codec(a, parse_gamma(gamma));
      out << encode(codec, eval_expr(expr1)).prefix(len) << "\n";
    } else if (*congruent_cmd) {
      if (auto s = congruent(eval_expr(expr1), eval_expr(expr2), max_shift, horizon)) {
        out << s->n << " " << s->m << "\n";
      } else {
        out << "absent\n";
        code = kNegative;
      }
    } else if (*catalog_cmd) {
      for (const CatalogEntry& e : catalog())
        out << e.name << (e.params.empty() ? "" : ":" + e.params) << "\t" << e.doc << "\n";
    }
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kAborted;
  } catch (const Stalled& e) {
    err << "error: " << e.what() << "\n";
    return kAborted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace streamlab::cli
