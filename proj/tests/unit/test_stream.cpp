#include <doctest.h>

#include "oracles.hpp"
#include "streamlab/catalog.hpp"
#include "streamlab/error.hpp"
#include "streamlab/stream.hpp"

using namespace streamlab;

namespace {

struct CeilingGuard {
  explicit CeilingGuard(std::size_t c) : saved(index_ceiling()) { set_index_ceiling(c); }
  ~CeilingGuard() { set_index_ceiling(saved); }
  std::size_t saved;
};

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK(Alphabet("01").is_binary());
  CHECK(Alphabet("ABC").index_of('C') == 2);
  CHECK(Alphabet("ABC").index_of('D') == -1);
  CHECK_THROWS_AS(Alphabet("0"), Error);
  CHECK_THROWS_AS(Alphabet("00"), Error);
  CHECK_THROWS_AS(Alphabet("0#"), Error);
  CHECK_THROWS_AS(Alphabet("0_"), Error);
  CHECK_THROWS_AS(Alphabet("0 "), Error);
}

TEST_CASE("letter access and prefixes") {
  const Stream tm = thue_morse();
  CHECK(tm(0) == '0');
  CHECK(tm.prefix(16) == "0110100110010110");
  CHECK(tm.prefix(0).empty());
  CHECK(constant(Alphabet::binary(), '1')(1'000'000) == '1');
  CHECK(period_doubling().prefix(16) == "1011101010111011");
  // Prefixes extend each other and repeated reads agree.
  const std::string p = tm.prefix(300);
  CHECK(tm.prefix(301).substr(0, 300) == p);
  CHECK(tm.slice(100, 50) == p.substr(100, 50));
  CHECK(tm(123) == p[123]);
}

TEST_CASE("index ceiling is an error, not an answer") {
  CeilingGuard guard(100);
  const Stream tm = thue_morse();
  CHECK(tm(99) == oracle::thue_morse(100)[99]);
  CHECK_THROWS_AS(tm(100), CeilingExceeded);
  try {
    tm.prefix(200);
  } catch (const CeilingExceeded& e) {
    CHECK(e.index() == 100);
    CHECK(e.ceiling() == 100);
  }
  // Chunked concatenations stop at the ceiling as well.
  const Stream s = sparse(GapLaw::linear);
  CHECK(s.prefix(100).size() == 100);
  CHECK_THROWS_AS(s(100), CeilingExceeded);
}

TEST_CASE("zip") {
  const Stream z = zip(constant(Alphabet::binary(), '0'), constant(Alphabet::binary(), '1'));
  CHECK(z.prefix(6) == "010101");
  CHECK(zip(thue_morse(), period_doubling()).prefix(8) == "01101101");
  const Stream tp = zip(thue_morse(), period_doubling());
  const std::string tm = oracle::thue_morse(256);
  const std::string pd = oracle::period_doubling(256);
  for (std::size_t i = 0; i < 256; ++i) {
    CHECK(tp(2 * i) == tm[i]);
    CHECK(tp(2 * i + 1) == pd[i]);
  }
  CHECK_THROWS_AS(zip(thue_morse(), periodic(Alphabet("ab"), "ab")), AlphabetMismatch);
}

TEST_CASE("inv") {
  CHECK(inv(constant(Alphabet::binary(), '0')).prefix(8) == "11111111");
  CHECK(inv(inv(thue_morse())).prefix(16) == "0110100110010110");
  CHECK(inv(period_doubling()).prefix(8) == "01000101");
  CHECK_THROWS_AS(inv(periodic(Alphabet("ab"), "ab")), AlphabetMismatch);
}

TEST_CASE("concat_blocks") {
  const Stream s = concat_blocks(Alphabet::binary(), [](std::size_t i) {
    Block b("1");
    b.append("0", i);
    return b;
  });
  CHECK(s.prefix(15) == "110100100010000");

  const Stream late = concat_blocks(Alphabet("ab"), [](std::size_t i) { return i < 5 ? Block() : Block("a"); });
  CHECK(late.prefix(10) == "aaaaaaaaaa");

  CHECK(sigma_weak(2).prefix(13) == "0100010100000");

  const Stream empty = concat_blocks(Alphabet::binary(), [](std::size_t) { return Block(); }, 1000);
  CHECK_THROWS_AS(empty(0), Error);

  const Stream bad = concat_blocks(Alphabet::binary(), [](std::size_t) { return Block("2"); });
  CHECK_THROWS_AS(bad(0), Error);

  // Long repeated pieces are not materialized beyond what is read.
  const Stream huge = concat_blocks(Alphabet::binary(), [](std::size_t) {
    Block b("1");
    b.append("0", std::size_t{1} << 40);
    return b;
  });
  CHECK(huge.prefix(5) == "10000");
}

TEST_CASE("mutate") {
  const Stream z = constant(Alphabet::binary(), '0');
  CHECK(mutate(z, {{0, '1'}}).prefix(4) == "1000");
  CHECK(mutate(thue_morse(), {}).prefix(64) == thue_morse().prefix(64));
  CHECK(mutate(thue_morse(), {{0, '1'}}).prefix(4) == "1110");
  CHECK_THROWS_AS(mutate(z, {{3, 'x'}}), Error);
}

TEST_CASE("drop and cons") {
  const Stream tm = thue_morse();
  CHECK(drop(tm, 1).prefix(3) == "110");
  CHECK(drop(tm, 0).prefix(32) == tm.prefix(32));
  CHECK(cons("ab", constant(Alphabet("abc"), 'c')).prefix(4) == "abcc");
  CHECK(cons("", tm).prefix(32) == tm.prefix(32));
  CHECK(cons("0", drop(tm, 1)).prefix(16) == tm.prefix(16));
  const Stream abc = periodic(Alphabet("abc"), "cab");
  CHECK(drop(cons("ab", abc), 2).prefix(40) == abc.prefix(40));
  CHECK_THROWS_AS(cons("2", tm), Error);
}

TEST_CASE("periodic") {
  CHECK(periodic(Alphabet::binary(), "011101").prefix(12) == "011101011101");
  CHECK_THROWS_AS(periodic(Alphabet::binary(), ""), Error);
  CHECK_THROWS_AS(periodic(Alphabet::binary(), "012"), Error);
}
