#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "streamlab/catalog.hpp"
#include "streamlab/error.hpp"
#include "streamlab/fst.hpp"
#include "streamlab/kernels.hpp"

using namespace streamlab;

TEST_CASE("figure machines") {
  CHECK(apply_fst(fig1_fst(), zip(thue_morse(), period_doubling()), 32).output == "0110100110010110");
  CHECK(apply_fst(fig1_fst(), zip(period_doubling(), thue_morse()), 32).output == "1011101010111011");
  const FstRun r2 = apply_fst(fig2_fst(), period_doubling(), 512);
  CHECK_FALSE(r2.stalled);
  REQUIRE(r2.output.size() >= 16);
  CHECK(r2.output.substr(0, 16) == "0110100110010110");
  CHECK(r2.output == thue_morse().prefix(r2.output.size()));
  const FstRun r3 = apply_fst(fig3_fst(), fig3_source(), 4000);
  REQUIRE(r3.output.size() >= 30);
  CHECK(r3.output.substr(0, 30) == "010001000011000010000001000000");
  CHECK(r3.output == fig3_target().prefix(r3.output.size()));
}

TEST_CASE("the fig3 reduction is beyond every small radius") {
  const std::string src = fig3_source().prefix(20 * 9 * 9 * 9 + 10);
  const std::string dst = fig3_target().prefix(20 * 9 * 9 * 9 + 10);
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::size_t h = 20 * (n + 3) * (n + 3) * (n + 3);
    const auto scan = kernels::scan_radius(src, dst, n, h);
    REQUIRE(scan.conflict.has_value());
    CHECK(oracle::window(src, n, scan.conflict->first) == oracle::window(src, n, scan.conflict->second));
    CHECK(dst[scan.conflict->first] != dst[scan.conflict->second]);
  }
}

TEST_CASE("fst files round trip") {
  for (const Fst& m : {fig1_fst(), fig2_fst(), fig3_fst()}) {
    const std::string text = write_fst_file(m);
    CHECK(text.rfind("%fst\n", 0) == 0);
    const Fst back = parse_fst_file(text);
    CHECK(back.state_count() == m.state_count());
    CHECK(write_fst_file(back) == text);
    CHECK(apply_fst(back, thue_morse(), 200).output == apply_fst(m, thue_morse(), 200).output);
  }
  const Fst swap = parse_fst_file("%fst\nalphabet: ab\nstart: q\nq a -> q / b\nq b -> q / -\n");
  CHECK(apply_fst(swap, periodic(Alphabet("ab"), "aab"), 6).output == "bbbb");
}

TEST_CASE("fst file errors") {
  CHECK_THROWS_AS(parse_fst_file("%ca\n"), FormatError);
  CHECK_THROWS_AS(parse_fst_file("%fst\nalphabet: 01\nstart: q\nq 0 -> q / 0\n"), FormatError);
  CHECK_THROWS_AS(parse_fst_file("%fst\nalphabet: 01\nstart: q\nq 0 -> q / 0\nq 1 -> q / 2\n"), FormatError);
  CHECK_THROWS_AS(parse_fst_file("%fst\nalphabet: 01\nstart: q\nq 0 q / 0\nq 1 -> q / 1\n"), FormatError);
  CHECK_THROWS_AS(parse_fst_file("%fst\nalphabet: 01\nstart: p\nq 0 -> q / 0\nq 1 -> q / 1\n"), FormatError);
  CHECK_THROWS_AS(read_fst_file("/nonexistent.fst"), Error);
}

TEST_CASE("stall detection") {
  const Fst silent = parse_fst_file("%fst\nalphabet: 01\nstart: q\nq 0 -> q / -\nq 1 -> q / -\n");
  const FstRun r = apply_fst(silent, thue_morse(), 1000);
  CHECK(r.stalled);
  CHECK(r.output.empty());
  CHECK(r.steps == 4 * 1 * (1 + 0));
  CHECK(apply_fst(silent, thue_morse(), 1000, 50).steps == 50);
  CHECK_THROWS_AS(apply_fst(silent, periodic(Alphabet("ab"), "ab"), 10), AlphabetMismatch);
}

TEST_CASE("compiled local rules") {
  CHECK(apply_fst(compile_ca_to_fst(xor_rule()), thue_morse(), 16).output == "101110101011101");
  CHECK(apply_fst(compile_ca_to_fst(identity_rule(Alphabet::binary())), thue_morse(), 16).output ==
        thue_morse().prefix(16));
  CHECK(apply_fst(compile_ca_to_fst(const_rule(Alphabet::binary(), '0')), thue_morse(), 16).output ==
        std::string(16, '0'));
  // Lead-in: N silent steps.
  CHECK(apply_fst(compile_ca_to_fst(eca_rule(30)), thue_morse(), 1).output.empty());

  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = trial % 3;
    const oracle::Table t = oracle::random_table(rng, n, "01", 8);
    RuleTable rt;
    rt.default_letter = t.fallback;
    for (const auto& [p, c] : t.rows) rt.entries.push_back({p, c});
    const LocalRule rule = LocalRule::from_table(Alphabet::binary(), n, rt);
    const std::string w = oracle::random_word(rng, 200 + n, "01");
    const Stream s = periodic(Alphabet::binary(), w);
    const FstRun run = apply_fst(compile_ca_to_fst(rule), s, 200 + n);
    CHECK(run.output == oracle::apply(t, n, w, 200));
  }
}

TEST_CASE("compiled machine materializes") {
  const CaTransducer lazy = compile_ca_to_fst(xor_rule());
  const Fst m = lazy.materialize();
  // "###", "##a", "#ab", "abc" windows over a binary alphabet.
  CHECK(m.state_count() == 1 + 2 + 4 + 8);
  CHECK(apply_fst(m, thue_morse(), 64).output == period_doubling().prefix(63));
  CHECK_THROWS_AS(compile_ca_to_fst(eca_rule(30)).materialize(4), Error);
}
