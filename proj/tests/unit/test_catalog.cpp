#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "streamlab/catalog.hpp"
#include "streamlab/error.hpp"
#include "streamlab/kernels.hpp"

using namespace streamlab;

TEST_CASE("automatic and morphic words against oracles") {
  CHECK(build("tm", {}).prefix(4096) == oracle::thue_morse(4096));
  CHECK(build("pd", {}).prefix(4096) == oracle::period_doubling(4096));
  CHECK(build("mephisto", {}).prefix(4096) == oracle::mephisto(4096));
  CHECK(mephisto().prefix(16) == "0010011100010011");
  CHECK(build("pd", {}).prefix(16) == "1011101010111011");
}

TEST_CASE("periodic families") {
  CHECK(build("periodic", {"011101"}).prefix(12) == "011101011101");
  CHECK(build("periodic", {"A", "ABC"}).prefix(3) == "AAA");
  CHECK_THROWS_AS(build("periodic", {"AB"}), Error);
  CHECK(build("ultper", {"111", "01"}).prefix(9) == "111010101");
  CHECK(build("ones", {}).prefix(3) == "111");
  CHECK(build("zeros", {}).prefix(3) == "000");

  for (std::size_t k = 1; k <= 32; ++k) {
    const std::string p = tau(k).prefix(4 * k);
    std::size_t period = 1;
    for (; period <= 4 * k; ++period) {
      bool ok = true;
      for (std::size_t i = period; i < p.size() && ok; ++i) ok = p[i] == p[i - period];
      if (ok) break;
    }
    CHECK(period == k);
  }
}

TEST_CASE("sparse gap laws") {
  CHECK(sparse(GapLaw::linear).prefix(15) == "110100100010000");
  CHECK(sparse(GapLaw::square).prefix(17) == "11010000100000000");
  CHECK(sparse(GapLaw::pow2).prefix(12) == "101001000010");
  // After the d-th 1 every 1 is followed by at least d zeros.
  for (GapLaw law : {GapLaw::linear, GapLaw::square, GapLaw::pow2}) {
    const std::string p = sparse(law).prefix(5000);
    for (std::size_t d = 1; d <= 12; ++d) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != '1') continue;
        if (ones++ < d) continue;  // n0(d): position of the d-th 1
        const std::size_t run = p.find('1', i + 1);
        if (run != std::string::npos) CHECK(run - i - 1 >= d);
      }
    }
  }
  CHECK_THROWS_AS(parse_gap_law("cubic"), Error);
}

TEST_CASE("descending chain schedule") {
  CHECK(mu_block_period(1) == 2);
  CHECK(mu_block_period(2) == 2);
  CHECK(mu_block_period(3) == 3);
  CHECK(mu_block_period(6) == 4);
  CHECK(mu_block_period(7) == 2);
  CHECK(mu_block_period(10) == 5);
  // μ_1 = τ2^{≤1} τ2^{≤2} τ3^{≤3} τ2^{≤4} τ3^{≤5} τ4^{≤6} τ2^{≤7} τ3^{≤8}
  CHECK(mu(1).prefix(36) == std::string("1") + "10" + "100" + "1010" + "10010" + "100010" + "1010101" + "10010010");
  CHECK(mu(2).prefix(36) == std::string("1") + "11" + "100" + "1111" + "10010" + "100010" + "1111111" + "10010010");
  CHECK(mu(3).prefix(36) == std::string("1") + "11" + "111" + "1111" + "11111" + "100010" + "1111111" + "11111111");
}

TEST_CASE("diag pair conflicts in both directions") {
  CHECK(diag_a().prefix(12) == "001" + std::string("000000010"));
  CHECK(diag_b().prefix(12) == "010" + std::string("000010000"));
  for (std::size_t n = 0; n <= 8; ++n) {
    const std::size_t h = 10 * (6 * n + 3) * (6 * n + 3);
    const std::string a = diag_a().prefix(h + n);
    const std::string b = diag_b().prefix(h + n);
    CHECK(kernels::scan_radius(a, b, n, h).conflict.has_value());
    CHECK(kernels::scan_radius(b, a, n, h).conflict.has_value());
  }
}

TEST_CASE("unipair streams align every pair of short words") {
  std::size_t horizon = 0;
  for (std::size_t k = 1; k <= 4; ++k) horizon += k << (2 * k);
  const std::string a = unipair_a().prefix(horizon);
  const std::string b = unipair_b().prefix(horizon);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i + k <= horizon; ++i) seen.emplace(a.substr(i, k), b.substr(i, k));
    CHECK(seen.size() == (std::size_t{1} << (2 * k)));
  }
  CHECK(a.substr(0, 4) == "0011");
  CHECK(b.substr(0, 4) == "0101");
}

TEST_CASE("primes, sierpinski fixture, fig3 pair") {
  CHECK(primes().prefix(20) == "00110101000101000101");
  CHECK(sierpinski_prefix().prefix(17) == "00111100011000011");
  CHECK_THROWS_AS(sierpinski_prefix()(17), Error);
  CHECK(fig3_source().prefix(12) == "010001100010");
  CHECK(fig3_target().prefix(12) == "010001000011");
}

TEST_CASE("algoctr padding") {
  // α = 1, |Σ| = 2: runs of 2, 8, 32 zeros.
  const std::string p = algoctr({1, 1}, 2).prefix(45);
  CHECK(p == std::string(2, '0') + "1" + std::string(8, '0') + "1" + std::string(32, '0') + "1");
  CHECK(build("algoctr", {"1", "2"}).prefix(45) == p);
  CHECK(build("algoctr", {"1", "2", "2"}).prefix(7) == "0100001");
  CHECK(build("algoctr", {"0.5", "2"}).prefix(7) == "0100001");
}

TEST_CASE("maximal variant replaces every k-th occurrence") {
  const std::string hat = unoverlapping_hat("000");
  CHECK(hat == "100010000");
  const std::string w = thue_morse().prefix(9);
  const std::string base = thue_morse().prefix(4000);
  const std::string var = maximal_variant(thue_morse(), w, "000", 2).prefix(4000);
  std::size_t occurrences = 0;
  for (std::size_t i = 0; i + 9 <= 4000;) {
    if (base.compare(i, 9, w) == 0) {
      ++occurrences;
      CHECK(var.substr(i, 9) == (occurrences % 2 == 0 ? hat : w));
      i += 9;
    } else {
      CHECK(var[i] == base[i]);
      ++i;
    }
  }
  CHECK(occurrences > 10);
  CHECK_THROWS_AS(maximal_variant(thue_morse(), "01", "000", 1), Error);
}

TEST_CASE("catalog lookup errors") {
  CHECK_THROWS_AS(build("nosuch", {}), Error);
  CHECK_THROWS_AS(build("tm", {"x"}), Error);
  CHECK_THROWS_AS(build("tau", {"x"}), Error);
  CHECK_THROWS_AS(build("tau", {"0"}), Error);
  CHECK_THROWS_AS(build("diag", {"c"}), Error);
  std::set<std::string> names;
  for (const auto& e : catalog()) CHECK(names.insert(e.name).second);
}
