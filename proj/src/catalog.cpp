#include "streamlab/catalog.hpp"

#include <bit>
#include <limits>
#include <memory>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

const Alphabet& bin() { return Alphabet::binary(); }

std::size_t parse_size(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 18) throw Error("malformed " + what + ": '" + s + "'");
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("malformed " + what + ": '" + s + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

void expect_arity(const std::string& name, const std::vector<std::string>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi)
    throw Error("catalog entry '" + name + "' takes " + std::to_string(lo) +
                (hi != lo ? ".." + std::to_string(hi) : std::string()) + " parameters, got " +
                std::to_string(p.size()));
}

Alphabet alphabet_for(const std::vector<std::string>& p, std::size_t index, const std::string& words) {
  if (p.size() > index) return Alphabet(p[index]);
  for (char c : words)
    if (c != '0' && c != '1') throw Error("non-binary word needs an explicit alphabet parameter");
  return bin();
}

Block zeros_then(std::uint64_t zeros, const char* tail) {
  Block b;
  b.append("0", zeros);
  b.append(tail);
  return b;
}

std::string binary_word(std::uint64_t bits, std::size_t len) {
  std::string w(len, '0');
  for (std::size_t k = 0; k < len; ++k)
    if ((bits >> (len - 1 - k)) & 1u) w[k] = '1';
  return w;
}

Stream unipair(bool first) {
  return concat_blocks(bin(), [first](std::size_t b) -> Block {
    std::size_t k = 1;
    std::size_t base = 0;
    while (k < 31 && b - base >= (std::size_t{1} << (2 * k))) {
      base += std::size_t{1} << (2 * k);
      ++k;
    }
    const std::size_t pair = b - base;
    return Block(binary_word(first ? pair >> k : pair & ((std::size_t{1} << k) - 1), k));
  });
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::size_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&c](std::string name, std::string params, std::string doc,
                  std::function<Stream(const std::vector<std::string>&)> fn) {
    c.push_back({std::move(name), std::move(params), std::move(doc), std::move(fn)});
  };
  auto nullary = [](const std::string& name, Stream (*fn)()) {
    return [name, fn](const std::vector<std::string>& p) {
      expect_arity(name, p, 0, 0);
      return fn();
    };
  };
  add("tm", "", "Thue-Morse word", nullary("tm", thue_morse));
  add("pd", "", "period-doubling word", nullary("pd", period_doubling));
  add("ones", "", "1^ω", [](const std::vector<std::string>& p) {
    expect_arity("ones", p, 0, 0);
    return constant(bin(), '1');
  });
  add("zeros", "", "0^ω", [](const std::vector<std::string>& p) {
    expect_arity("zeros", p, 0, 0);
    return constant(bin(), '0');
  });
  add("periodic", "w[/letters]", "w^ω", [](const std::vector<std::string>& p) {
    expect_arity("periodic", p, 1, 2);
    return periodic(alphabet_for(p, 1, p[0]), p[0]);
  });
  add("ultper", "x/y[/letters]", "x·y^ω", [](const std::vector<std::string>& p) {
    expect_arity("ultper", p, 2, 3);
    return cons(p[0], periodic(alphabet_for(p, 2, p[0] + p[1]), p[1]));
  });
  add("tau", "k", "(1 0^{k-1})^ω", [](const std::vector<std::string>& p) {
    expect_arity("tau", p, 1, 1);
    return tau(parse_size(p[0], "period"));
  });
  add("sparse", "linear|square|pow2", "Π 1·0^{c(i)}", [](const std::vector<std::string>& p) {
    expect_arity("sparse", p, 1, 1);
    return sparse(parse_gap_law(p[0]));
  });
  add("sigma_weak", "i", "weakly sparse Π (1 0^{i-1})^j 0^{2^j}", [](const std::vector<std::string>& p) {
    expect_arity("sigma_weak", p, 1, 1);
    return sigma_weak(parse_size(p[0], "period"));
  });
  add("mu", "j", "descending-chain stream", [](const std::vector<std::string>& p) {
    expect_arity("mu", p, 1, 1);
    return mu(parse_size(p[0], "chain index"));
  });
  add("primes", "", "1 at prime indices", nullary("primes", primes));
  add("diag", "a|b", "incomparable sparse pair", [](const std::vector<std::string>& p) {
    expect_arity("diag", p, 1, 1);
    if (p[0] == "a") return diag_a();
    if (p[0] == "b") return diag_b();
    throw Error("diag takes 'a' or 'b'");
  });
  add("fig3", "src|dst", "transducer-only pair", [](const std::vector<std::string>& p) {
    expect_arity("fig3", p, 1, 1);
    if (p[0] == "src") return fig3_source();
    if (p[0] == "dst") return fig3_target();
    throw Error("fig3 takes 'src' or 'dst'");
  });
  add("unipair", "a|b", "aligned all-pairs streams", [](const std::vector<std::string>& p) {
    expect_arity("unipair", p, 1, 1);
    if (p[0] == "a") return unipair_a();
    if (p[0] == "b") return unipair_b();
    throw Error("unipair takes 'a' or 'b'");
  });
  add("algoctr", "alpha/sigmasize", "Π 0^{⌈α·s^{2i+1}⌉} 1", [](const std::vector<std::string>& p) {
    if (p.size() == 3) return algoctr(parse_rational(p[0] + "/" + p[1]), parse_size(p[2], "alphabet size"));
    expect_arity("algoctr", p, 2, 2);
    return algoctr(parse_rational(p[0]), parse_size(p[1], "alphabet size"));
  });
  add("mephisto", "", "fixed point of 0->001, 1->110", nullary("mephisto", mephisto));
  add("sierpinski", "", "17-letter fixture prefix only", nullary("sierpinski", sierpinski_prefix));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> kCatalog = make_catalog();
  return kCatalog;
}

Stream build(const std::string& name, const std::vector<std::string>& params) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e.build(params);
  throw Error("unknown stream '" + name + "'");
}

Stream thue_morse() {
  return from_function(bin(), [](std::size_t i) { return std::popcount(i) % 2 ? '1' : '0'; });
}

Stream period_doubling() {
  return from_function(bin(), [](std::size_t i) { return std::countr_zero(i + 1) % 2 == 0 ? '1' : '0'; });
}

Stream mephisto() {
  return from_function(bin(), [](std::size_t i) {
    unsigned twos = 0;
    for (; i > 0; i /= 3) twos += (i % 3 == 2);
    return twos % 2 ? '1' : '0';
  });
}

Stream sierpinski_prefix() {
  return from_function(bin(), [](std::size_t i) -> char {
    static const std::string kFixture = kSierpinskiPrefix;
    if (i >= kFixture.size())
      throw Error("sierpinski: only the " + std::to_string(kFixture.size()) + "-letter fixture is available");
    return kFixture[i];
  });
}

Stream tau(std::size_t k) {
  if (k == 0) throw Error("tau: period must be at least 1");
  return from_function(bin(), [k](std::size_t i) { return i % k == 0 ? '1' : '0'; });
}

GapLaw parse_gap_law(const std::string& name) {
  if (name == "linear") return GapLaw::linear;
  if (name == "square") return GapLaw::square;
  if (name == "pow2") return GapLaw::pow2;
  throw Error("unknown gap law '" + name + "' (linear, square, pow2)");
}

std::uint64_t gap_length(GapLaw law, std::size_t i) {
  switch (law) {
    case GapLaw::linear: return i;
    case GapLaw::square: return static_cast<std::uint64_t>(i) * i;
    case GapLaw::pow2: return i < 63 ? std::uint64_t{1} << i : std::numeric_limits<std::uint64_t>::max();
  }
  return 0;
}

Stream sparse(GapLaw law) {
  return concat_blocks(bin(), [law](std::size_t i) {
    Block b("1");
    b.append("0", gap_length(law, i));
    return b;
  });
}

Stream sigma_weak(std::size_t i) {
  if (i == 0) throw Error("sigma_weak: i must be at least 1");
  const std::string unit = "1" + std::string(i - 1, '0');
  return concat_blocks(bin(), [unit](std::size_t j) {
    Block b;
    b.append(unit, j);
    b.append("0", j < 63 ? std::uint64_t{1} << j : std::numeric_limits<std::uint64_t>::max());
    return b;
  });
}

std::size_t mu_block_period(std::size_t t) {
  if (t == 0) throw Error("mu: blocks are numbered from 1");
  std::size_t row = 1;
  std::size_t before = 0;  // blocks in rows < row
  while (before + row < t) {
    before += row;
    ++row;
  }
  return t - before + 1;
}

Stream mu(std::size_t j) {
  if (j == 0) throw Error("mu: chain index starts at 1");
  return concat_blocks(bin(), [j](std::size_t b) {
    const std::size_t t = b + 1;
    std::size_t k = mu_block_period(t);
    if (k <= j) k = 1;
    std::string block(t, '0');
    for (std::size_t x = 0; x < t; x += k) block[x] = '1';
    return Block(std::move(block));
  });
}

Stream primes() {
  return from_function(bin(), [](std::size_t i) { return is_prime(i) ? '1' : '0'; });
}

Stream diag_a() {
  return concat_blocks(bin(), [](std::size_t i) {
    Block b;
    b.append("0", 5 * i + 2).append("1").append("0", i);
    return b;
  });
}

Stream diag_b() {
  return concat_blocks(bin(), [](std::size_t i) {
    Block b;
    b.append("0", 3 * i + 1).append("1").append("0", 3 * i + 1);
    return b;
  });
}

Stream fig3_source() {
  return concat_blocks(bin(), [](std::size_t i) {
    return zeros_then(i + 1, (i + 1) % 3 == 2 ? "11" : "10");
  });
}

Stream fig3_target() {
  return concat_blocks(bin(), [](std::size_t i) {
    return zeros_then(i + 1, i % 3 == 2 ? "11" : "10");
  });
}

Stream unipair_a() { return unipair(true); }
Stream unipair_b() { return unipair(false); }

Stream algoctr(const Rational& alpha, std::size_t sigma_size) {
  if (sigma_size < 2) throw Error("algoctr: alphabet size must be at least 2");
  return concat_blocks(bin(), [alpha, sigma_size](std::size_t i) {
    return zeros_then(ceil_scaled_power(alpha, sigma_size, 2 * static_cast<std::uint64_t>(i) + 1), "1");
  });
}

std::string unoverlapping_hat(const std::string& v) {
  return "1" + v + "1" + std::string(v.size() + 1, '0');
}

Stream maximal_variant(Stream base, std::string w, const std::string& v, std::size_t every) {
  if (!base.alphabet().is_binary()) throw AlphabetMismatch("maxvar: base stream must be binary");
  if (!Alphabet::binary().contains_all(v) || !Alphabet::binary().contains_all(w))
    throw Error("maxvar: words must be binary");
  std::string hat = unoverlapping_hat(v);
  if (w.size() != hat.size())
    throw Error("maxvar: |w| must equal |v̂| = " + std::to_string(hat.size()));
  if (every == 0) throw Error("maxvar: selector must be at least 1");
  struct Scan {
    Stream base;
    std::string w, hat;
    std::size_t every;
    std::size_t pos = 0;
    std::size_t seen = 0;
    std::size_t next_block = 0;
  };
  auto st = std::make_shared<Scan>(Scan{std::move(base), std::move(w), std::move(hat), every});
  return concat_blocks(bin(), [st](std::size_t b) -> Block {
    // Blocks are requested strictly in order, so the scan state advances once per call.
    if (b != st->next_block) throw Error("maxvar: out-of-order block request");
    ++st->next_block;
    if (st->base.slice(st->pos, st->w.size()) == st->w) {
      st->pos += st->w.size();
      return Block(++st->seen % st->every == 0 ? st->hat : st->w);
    }
    return Block(std::string(1, st->base(st->pos++)));
  });
}

}  // namespace streamlab
