#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "streamlab/catalog.hpp"
#include "streamlab/cli.hpp"
#include "streamlab/error.hpp"
#include "streamlab/expr.hpp"
#include "streamlab/fst.hpp"
#include "streamlab/orbit.hpp"
#include "streamlab/rule.hpp"

using namespace streamlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "streamlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("expression parsing") {
  CHECK(describe(parse_expr("zip(tm,pd)")) == "Zip(Atom tm, Atom pd)");
  CHECK(describe(parse_expr("periodic:011101")) == "Atom periodic(\"011101\")");
  CHECK(describe(parse_expr("drop(3, xor(tm))")) == "Drop(3, Xor(Atom tm))");
  CHECK(describe(parse_expr("mutate(zeros, 0->1, 4->1)")) == "Mutate(Atom zeros, 0->1, 4->1)");
  CHECK(describe(parse_expr("cons(ab, periodic:c/abc)")) == "Cons(\"ab\", Atom periodic(\"c\", \"abc\"))");
  CHECK(eval_expr("mutate(tm, 0->1)").prefix(4) == "1110");
  CHECK(eval_expr("drop(1, tm)").prefix(3) == "110");
  CHECK(eval_expr("inv(pd)").prefix(8) == "01000101");
  CHECK(eval_expr("xor(tm)").prefix(15) == "101110101011101");
  CHECK(eval_expr("naive(periodic:B/ABC)").prefix(6) == "010101");
  CHECK(eval_expr("encode(ABC, periodic:A/ABC)").prefix(9) == "100100000");
  CHECK(eval_expr("cons(ab, periodic:c/abc)").prefix(4) == "abcc");
  CHECK(eval_expr("maxvar(tm, 011010011, 000, 2)").prefix(9) == "011010011");
}

TEST_CASE("expression errors carry offsets") {
  auto offset_of = [](const std::string& text) -> long {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("zip(tm pd)") == 7);
  CHECK(offset_of("frob(tm)") == 0);
  CHECK(offset_of("drop(x, tm)") == 5);
  CHECK(offset_of("tm)") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("mutate(tm, 3=1)") == 11);
  CHECK_THROWS_AS(eval_expr("nosuch"), Error);
}

TEST_CASE("gen") {
  CHECK(run({"gen", "tm", "--len", "16"}).out == "0110100110010110\n");
  CHECK(run({"gen", "pd", "--len", "16"}).out == "1011101010111011\n");
  CHECK(run({"gen", "tm"}).out.size() == 65);
  const Result bad = run({"gen", "zip(tm"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("offset") != std::string::npos);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"gen", "tm", "--len", "x"}).code == cli::kUsage);
}

TEST_CASE("apply-ca, compose") {
  const std::string x = write("xor.ca", write_rule_file(xor_rule()));
  CHECK(run({"apply-ca", x, "tm", "--len", "15"}).out == "101110101011101\n");
  const std::string out = (scratch() / "xx.ca").string();
  CHECK(run({"compose", x, x, "-o", out}).code == cli::kOk);
  const LocalRule xx = read_rule_file(out);
  CHECK(xx.radius() == 2);
  CHECK(apply(xx, thue_morse()).prefix(14) == apply_n(xor_rule(), thue_morse(), 2).prefix(14));
  CHECK(run({"apply-ca", write("bad.ca", "%ca\nalphabet: 01\n"), "tm"}).code == cli::kUsage);
  CHECK(run({"apply-ca", "/nonexistent.ca", "tm"}).code == cli::kUsage);
}

TEST_CASE("apply-fst") {
  const std::string f1 = write("fig1.fst", write_fst_file(fig1_fst()));
  CHECK(run({"apply-fst", f1, "zip(tm,pd)", "--steps", "32"}).out == "0110100110010110\n");
  const std::string silent = write("silent.fst", "%fst\nalphabet: 01\nstart: q\nq 0 -> q / -\nq 1 -> q / -\n");
  const Result r = run({"apply-fst", silent, "tm", "--steps", "100"});
  CHECK(r.code == cli::kAborted);
  CHECK(r.err.find("stall") != std::string::npos);
}

TEST_CASE("check and synth") {
  const Result no = run({"check", "periodic:10", "periodic:100100", "--cmax", "100000", "--alpha", "1"});
  CHECK(no.code == cli::kNegative);
  CHECK(no.out.rfind("No\n", 0) == 0);
  const Result yes = run({"check", "tau:6", "tau:2", "--cmax", "100000", "--alpha", "1"});
  CHECK(yes.code == cli::kOk);
  CHECK(yes.out.rfind("Yes\n", 0) == 0);
  CHECK(run({"check", "tau:6", "tau:2", "--alpha", "0"}).code == cli::kUsage);

  const Result s = run({"synth", "tau:4", "tau:2", "--max-radius", "5", "--horizon", "500"});
  CHECK(s.code == cli::kOk);
  CHECK(s.out.find("answer: yes") == 0);
  // The embedded rule file parses back.
  const LocalRule r = parse_rule_file(s.out.substr(s.out.find("%ca")));
  CHECK(apply(r, tau(4)).prefix(500) == tau(2).prefix(500));
  const Result sp = run({"synth", "tau:4", "tau:2", "--max-radius", "5", "--horizon", "500", "--parallel"});
  CHECK(sp.out == s.out);
  CHECK(run({"synth", "diag:a", "diag:b", "--max-radius", "3"}).code == cli::kNegative);
}

TEST_CASE("orbit") {
  const Result a = run({"orbit", "--eca", "102", "tm", "--width", "15", "--steps", "1", "--ascii"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == "011010011001011\n101110101011101\n");
  const Result p = run({"orbit", "--eca", "102", "tm", "--width", "32", "--steps", "8"});
  CHECK(p.out == read_text_file(std::string(GOLDEN_DIR) + "/rule102_tm_32x9.pbm"));
  const std::string file = (scratch() / "o.pbm").string();
  CHECK(run({"orbit", "--eca", "102", "tm", "--width", "32", "--steps", "8", "-o", file}).out.empty());
  CHECK(read_text_file(file) == p.out);
  const std::string x = write("xor2.ca", write_rule_file(xor_rule()));
  CHECK(run({"orbit", x, "tm", "--width", "32", "--steps", "8"}).out == p.out);
  CHECK(run({"orbit", "--eca", "300", "tm"}).code == cli::kUsage);
  CHECK(run({"orbit", "tm"}).code == cli::kUsage);
}

TEST_CASE("encode, congruent, catalog") {
  CHECK(run({"encode", "periodic:A/ABC", "--alphabet", "ABC", "--len", "9"}).out == "100100000\n");
  CHECK(run({"encode", "periodic:A/ABC", "--alphabet", "ABC", "--gamma", "A=11,B=01,C=10", "--len", "9"}).out ==
        "111100000\n");
  CHECK(run({"encode", "tm", "--alphabet", "ABC"}).code == cli::kUsage);
  const Result c = run({"congruent", "drop(5,tm)", "tm", "--max-shift", "10", "--horizon", "500"});
  CHECK(c.out == "0 5\n");
  CHECK(c.code == cli::kOk);
  const Result n = run({"congruent", "zeros", "ones", "--max-shift", "10", "--horizon", "100"});
  CHECK(n.out == "absent\n");
  CHECK(n.code == cli::kNegative);
  const Result cat = run({"catalog"});
  for (const auto& e : catalog()) CHECK(cat.out.find(e.name) != std::string::npos);
}

TEST_CASE("index ceiling from the environment") {
  ::setenv("STREAMLAB_MAX_PREFIX", "100", 1);
  const Result r = run({"gen", "tm", "--len", "1000"});
  CHECK(r.code == cli::kAborted);
  CHECK(r.err.find("ceiling") != std::string::npos);
  CHECK(run({"gen", "tm", "--len", "50"}).code == cli::kOk);
  ::setenv("STREAMLAB_MAX_PREFIX", "lots", 1);
  CHECK(run({"gen", "tm", "--len", "5"}).code == cli::kUsage);
  ::unsetenv("STREAMLAB_MAX_PREFIX");
  CHECK(index_ceiling() == std::size_t{1} << 24);
  CHECK(run({"gen", "tm", "--len", "1000"}).code == cli::kOk);
}
