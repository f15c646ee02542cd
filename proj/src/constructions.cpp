#include "streamlab/constructions.hpp"

#include <array>
#include <memory>
#include <optional>

#include "streamlab/error.hpp"

namespace streamlab {

bool is_primitive(const std::string& w) {
  return !w.empty() && (w + w).find(w, 1) == w.size();
}

LocalRule periodic_rule(const Alphabet& alphabet, const std::string& wm, const std::string& wn) {
  if (wm.empty() || wn.empty()) throw Error("periodic_rule: words must be nonempty");
  if (!alphabet.contains_all(wm) || !alphabet.contains_all(wn))
    throw Error("periodic_rule: letter outside alphabet");
  if (wm.size() % wn.size() != 0)
    throw Error("periodic_rule: |" + wn + "| does not divide |" + wm + "|");
  if (!is_primitive(wm)) throw Error("periodic_rule: '" + wm + "' has a proper subperiod");
  const std::size_t m = wm.size();
  RuleTable table;
  table.default_letter = alphabet.first();
  for (std::size_t r = 0; r < m; ++r)
    table.entries.push_back({std::string(m - 1, kWildcard) + wm.substr(r) + wm.substr(0, r), wn[r % wn.size()]});
  return LocalRule::from_table(alphabet, m - 1, std::move(table));
}

LocalRule mu_chain_rule(std::size_t i) {
  if (i == 0) throw Error("mu_chain_rule: i must be at least 1");
  const std::size_t radius = 2 * i + 1;
  return LocalRule(Alphabet::binary(), radius, [i, radius](std::string_view x) {
    if (x[radius] == '1') return '1';
    std::size_t l = radius;
    std::size_t r = radius;
    while (l > 0 && x[l - 1] == '0') --l;
    while (r + 1 < x.size() && x[r + 1] == '0') ++r;
    if (l == 0 || r + 1 == x.size() || x[l - 1] != '1' || x[r + 1] != '1') return '0';
    if (r - l + 1 > i) return '0';
    // l - 1 holds the 1 that opens the patch.
    if (l >= 2 && x[l - 2] == '1') return '1';
    if (l >= i + 2 && x[l - 2 - i] == '1') {
      bool zeros = true;
      for (std::size_t k = l - 1 - i; k + 1 < l; ++k) zeros = zeros && x[k] == '0';
      if (zeros) return '1';
    }
    // The first patch of a block has no period-(i+1) context on its left
    // when the previous block ends in zeros; look right instead.
    if (r - l + 1 == i && r + i + 2 < x.size() && x[r + i + 2] == '1') {
      bool zeros = true;
      for (std::size_t k = r + 2; k < r + i + 2; ++k) zeros = zeros && x[k] == '0';
      if (zeros) return '1';
    }
    return '0';
  });
}

std::string sparse_extract_w(const LocalRule& rule) {
  if (!rule.alphabet().is_binary()) throw AlphabetMismatch("sparse_extract_w: binary rule expected");
  const std::size_t n = rule.radius();
  std::string w;
  for (std::size_t k = 0; k <= 2 * n; ++k)
    w.push_back(rule(std::string(2 * n - k, '0') + "1" + std::string(k, '0')));
  return w;
}

LocalRule sparse_recover_rule(const std::string& w) {
  if (w.size() % 2 == 0) throw Error("sparse_recover_rule: |w| must be odd");
  if (!Alphabet::binary().contains_all(w)) throw Error("sparse_recover_rule: w must be binary");
  if (w.find('1') == std::string::npos) throw Error("sparse_recover_rule: w is all zeros");
  RuleTable table;
  table.entries.push_back({w, '1'});
  table.default_letter = '0';
  return LocalRule::from_table(Alphabet::binary(), (w.size() - 1) / 2, std::move(table));
}

namespace {

// One code word per anchor. Offsets are relative to the anchor; -1 = absent.
struct Code {
  const char* word;
  int sigma;
  int tau;
};

// The first seven words are padded with "00" to six letters: every code is
// followed by at least two zeros before the next anchor.
constexpr std::array<Code, 17> kCodes{{
    {"100000", 0, 0}, {"110000", 0, 1}, {"101000", 0, 2}, {"111000", 0, 3},
    {"100100", 1, 0}, {"110100", 2, 0}, {"101100", 3, 0},
    {"111100", 0, 4}, {"111110", 0, 5}, {"111111", 0, 6}, {"101010", 0, 7},
    {"110110", 4, 0}, {"110111", 5, 0}, {"111010", 6, 0}, {"111011", 7, 0},
    {"111101", 0, -1}, {"101101", -1, 0},
}};

std::string code_for(int sigma, int tau) {
  for (const Code& c : kCodes)
    if (c.sigma == sigma && c.tau == tau) {
      std::string w = c.word;
      if (sigma <= 3 && tau <= 3 && sigma >= 0 && tau >= 0) w.resize(4);
      return w;
    }
  throw Error("suprema: no code word");
}

std::size_t next_one(const Stream& s, std::size_t from) {
  while (s(from) != '1') ++from;
  return from;
}

std::optional<std::size_t> last_close_pair(const Stream& s, std::size_t from, std::size_t to) {
  std::optional<std::size_t> last;
  std::optional<std::size_t> prev;
  for (std::size_t i = from; i < to; ++i) {
    if (s(i) != '1') continue;
    if (prev && i - *prev <= kSupremaPairing) last = i;
    prev = i;
  }
  return last;
}

constexpr std::size_t kDecodeRadius = 12;

char bit(std::string_view x, long offset) {
  const char c = x[static_cast<std::size_t>(static_cast<long>(kDecodeRadius) + offset)];
  return c == '1' ? '1' : '0';
}

bool is_anchor(std::string_view x, long p) {
  if (bit(x, p) != '1' || bit(x, p - 1) != '0' || bit(x, p - 2) != '0') return false;
  // The last 1 of the code 1001 is also preceded by two zeros.
  return !(bit(x, p - 3) == '1' && bit(x, p - 4) == '0' && bit(x, p - 5) == '0');
}

const Code* code_at(std::string_view x, long p) {
  std::string w;
  for (long k = 0; k < 6; ++k) w.push_back(bit(x, p + k));
  for (const Code& c : kCodes)
    if (w == c.word) return &c;
  return nullptr;
}

LocalRule decoder(bool want_sigma) {
  return LocalRule(Alphabet::binary(), kDecodeRadius, [want_sigma](std::string_view x) {
    for (long o = 0; o <= static_cast<long>(kSupremaPairing); ++o) {
      if (!is_anchor(x, -o)) continue;
      const Code* c = code_at(x, -o);
      if (c != nullptr && (want_sigma ? c->sigma : c->tau) == o) return '1';
    }
    return '0';
  });
}

}  // namespace

SupremaEncoding suprema_encode(const Stream& sigma, const Stream& tau, std::size_t scan) {
  if (!sigma.alphabet().is_binary() || !tau.alphabet().is_binary())
    throw AlphabetMismatch("suprema_encode: binary streams expected");
  std::size_t start = 0;
  for (const Stream* s : {&sigma, &tau}) {
    if (auto p = last_close_pair(*s, 0, scan)) start = std::max(start, *p + 1);
    if (last_close_pair(*s, scan, 2 * scan))
      throw Error("suprema_encode: gaps below 8 persist past the scan bound");
  }
  struct State {
    Stream sigma, tau;
    std::size_t cursor, ns, nt;
  };
  auto st = std::make_shared<State>(State{sigma, tau, 0, next_one(sigma, start), next_one(tau, start)});
  Stream xi = concat_blocks(Alphabet::binary(), [st](std::size_t) {
    const std::size_t p = std::min(st->ns, st->nt);
    std::string code;
    if (st->ns <= st->nt) {
      const std::size_t d = st->nt - st->ns;
      code = code_for(0, d <= kSupremaPairing ? static_cast<int>(d) : -1);
      if (d <= kSupremaPairing) st->nt = next_one(st->tau, st->nt + 1);
      st->ns = next_one(st->sigma, st->ns + 1);
    } else {
      const std::size_t d = st->ns - st->nt;
      code = code_for(d <= kSupremaPairing ? static_cast<int>(d) : -1, 0);
      if (d <= kSupremaPairing) st->ns = next_one(st->sigma, st->ns + 1);
      st->nt = next_one(st->tau, st->nt + 1);
    }
    Block b;
    b.append("0", p - st->cursor).append(code);
    st->cursor = p + code.size();
    return b;
  });
  return {std::move(xi), start};
}

std::pair<LocalRule, LocalRule> suprema_decode_rules() { return {decoder(true), decoder(false)}; }

LocalRule maximal_inverse_rule(const std::string& w, const std::string& hat) {
  if (w.size() != hat.size() || hat.empty()) throw Error("maximal_inverse_rule: |w| must equal |v̂|");
  if (!Alphabet::binary().contains_all(w) || !Alphabet::binary().contains_all(hat))
    throw Error("maximal_inverse_rule: words must be binary");
  const std::size_t radius = hat.size() - 1;
  return LocalRule(Alphabet::binary(), radius, [w, hat, radius](std::string_view x) {
    for (std::size_t o = 0; o <= radius; ++o)
      if (x.substr(radius - o, hat.size()) == hat) return w[o];
    return x[radius];
  });
}

}  // namespace streamlab
