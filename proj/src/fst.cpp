#include "streamlab/fst.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "streamlab/error.hpp"

namespace streamlab {

Fst::Fst(Alphabet alphabet, std::vector<std::string> state_names, std::size_t start,
         std::vector<FstEdge> edges)
    : alphabet_(std::move(alphabet)), names_(std::move(state_names)), start_(start), edges_(std::move(edges)) {
  if (names_.empty() || start_ >= names_.size()) throw Error("fst: bad start state");
  if (edges_.size() != names_.size() * alphabet_.size()) throw Error("fst: transition table is not total");
  for (const FstEdge& e : edges_) {
    if (e.next >= names_.size()) throw Error("fst: edge to unknown state");
    if (!alphabet_.contains_all(e.output)) throw Error("fst: output letter outside alphabet");
    max_out_ = std::max(max_out_, e.output.size());
  }
}

std::size_t FstBuilder::intern(const std::string& name) {
  auto [it, fresh] = ids_.emplace(name, names_.size());
  if (fresh) {
    names_.push_back(name);
    table_.emplace_back(alphabet_.size());
  }
  return it->second;
}

FstBuilder& FstBuilder::edge(const std::string& from, char letter, const std::string& to,
                             const std::string& output) {
  const int a = alphabet_.index_of(letter);
  if (a < 0) throw FormatError(std::string("fst: letter outside alphabet: ") + letter);
  const std::size_t s = intern(from);
  const std::size_t t = intern(to);
  auto& slot = table_[s][static_cast<std::size_t>(a)];
  if (slot) throw FormatError("fst: duplicate edge for " + from + " " + letter);
  slot = std::make_unique<FstEdge>(FstEdge{t, output});
  return *this;
}

Fst FstBuilder::build(const std::string& start) const {
  auto it = ids_.find(start);
  if (it == ids_.end()) throw FormatError("fst: start state '" + start + "' has no edges");
  std::vector<FstEdge> edges;
  for (std::size_t s = 0; s < names_.size(); ++s)
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      if (!table_[s][a])
        throw FormatError("fst: no edge for state " + names_[s] + " on letter " + alphabet_[a]);
      edges.push_back(*table_[s][a]);
    }
  return Fst(alphabet_, names_, it->second, std::move(edges));
}

std::string write_fst_file(const Fst& fst) {
  std::ostringstream out;
  out << "%fst\nalphabet: " << fst.alphabet().letters() << "\nstart: " << fst.state_names()[fst.start()] << "\n";
  for (std::size_t s = 0; s < fst.state_count(); ++s)
    for (char a : fst.alphabet().letters()) {
      const FstEdge& e = fst.step(s, a);
      out << fst.state_names()[s] << " " << a << " -> " << fst.state_names()[e.next] << " / "
          << (e.output.empty() ? "-" : e.output) << "\n";
    }
  return out.str();
}

Fst parse_fst_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](std::size_t& no) {
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  std::size_t no = 0;
  if (!next_line(no) || line != "%fst") throw FormatError("fst file: missing %fst header");
  if (!next_line(no) || line.rfind("alphabet: ", 0) != 0) throw FormatError("fst file: expected 'alphabet: '");
  const Alphabet alphabet = [&] {
    try {
      return Alphabet(line.substr(10));
    } catch (const Error& e) {
      throw FormatError(std::string("fst file: ") + e.what());
    }
  }();
  FstBuilder builder{alphabet};
  if (!next_line(no) || line.rfind("start: ", 0) != 0) throw FormatError("fst file: expected 'start: '");
  const std::string start = line.substr(7);
  while (next_line(no)) {
    std::istringstream fields(line);
    std::string from, letter, arrow, to, slash, output, extra;
    if (!(fields >> from >> letter >> arrow >> to >> slash >> output) || (fields >> extra) ||
        letter.size() != 1 || arrow != "->" || slash != "/")
      throw FormatError("fst file line " + std::to_string(no) + ": expected '<state> <letter> -> <state> / <output>'");
    try {
      builder.edge(from, letter[0], to, output == "-" ? "" : output);
    } catch (const Error& e) {
      throw FormatError("fst file line " + std::to_string(no) + ": " + e.what());
    }
  }
  try {
    return builder.build(start);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("fst file: ") + e.what());
  }
}

Fst read_fst_file(const std::string& path) { return parse_fst_file(read_text_file(path)); }

Fst fig1_fst() {
  FstBuilder b(Alphabet::binary());
  b.edge("q0", '0', "q1", "0").edge("q0", '1', "q1", "1");
  b.edge("q1", '0', "q0", "").edge("q1", '1', "q0", "");
  return b.build("q0");
}

Fst fig2_fst() {
  FstBuilder b(Alphabet::binary());
  b.edge("q0", '0', "q1", "00").edge("q0", '1', "q2", "01");
  b.edge("q1", '0', "q1", "0").edge("q1", '1', "q2", "1");
  b.edge("q2", '0', "q2", "1").edge("q2", '1', "q1", "0");
  return b.build("q0");
}

Fst fig3_fst() {
  FstBuilder b(Alphabet::binary());
  b.edge("q0", '0', "q0", "0").edge("q0", '1', "q2", "1");
  b.edge("q2", '0', "q0", "0").edge("q2", '1', "q1", "0");
  b.edge("q1", '0', "q1", "0").edge("q1", '1', "q3", "1");
  b.edge("q3", '0', "q0", "1").edge("q3", '1', "q1", "1");
  return b.build("q0");
}

FstRun apply_fst(const Transducer& machine, const Stream& s, std::size_t max_steps, std::size_t stall_window) {
  if (!(machine.alphabet() == s.alphabet())) throw AlphabetMismatch("apply_fst: alphabets differ");
  if (max_steps == 0) throw Error("apply_fst: max_steps must be at least 1");
  FstRun run;
  std::size_t state = machine.start();
  std::size_t silent = 0;
  std::size_t window = stall_window;
  for (; run.steps < max_steps; ++run.steps) {
    const FstEdge& e = machine.step(state, s(run.steps));
    run.output += e.output;
    state = e.next;
    if (!e.output.empty()) {
      silent = 0;
      continue;
    }
    ++silent;
    if (stall_window == kAutoStall) window = 4 * machine.state_count() * (1 + machine.max_output_length());
    if (silent >= window) {
      ++run.steps;
      run.stalled = true;
      break;
    }
  }
  return run;
}

CaTransducer::CaTransducer(LocalRule rule) : rule_(std::move(rule)) {
  intern(std::string(rule_.width(), kBoundary));
}

std::size_t CaTransducer::intern(std::string window) const {
  auto [it, fresh] = ids_.emplace(window, windows_.size());
  if (fresh) {
    windows_.push_back(std::move(window));
    edges_.resize(windows_.size() * rule_.alphabet().size());
  }
  return it->second;
}

const FstEdge& CaTransducer::step(std::size_t state, char letter) const {
  const int a = rule_.alphabet().index_of(letter);
  if (a < 0) throw AlphabetMismatch(std::string("ca transducer: letter outside alphabet: ") + letter);
  const std::size_t slot = state * rule_.alphabet().size() + static_cast<std::size_t>(a);
  if (!edges_[slot]) {
    std::string next = windows_[state].substr(1) + letter;
    // The window is complete once its center has been read.
    std::string out = next[rule_.radius()] == kBoundary ? std::string() : std::string(1, rule_(next));
    const std::size_t id = intern(std::move(next));
    edges_[slot] = std::make_unique<FstEdge>(FstEdge{id, std::move(out)});
  }
  return *edges_[slot];
}

Fst CaTransducer::materialize(std::size_t limit) const {
  std::deque<std::size_t> queue{start()};
  std::vector<bool> seen(1, true);
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (char a : rule_.alphabet().letters()) {
      const std::size_t t = step(s, a).next;
      if (t >= seen.size()) seen.resize(t + 1, false);
      if (!seen[t]) {
        if (windows_.size() > limit) throw Error("compile_ca_to_fst: more than " + std::to_string(limit) + " states");
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<std::string> names;
  std::vector<FstEdge> edges;
  for (std::size_t s = 0; s < windows_.size(); ++s) {
    names.push_back("w" + windows_[s]);
    for (char a : rule_.alphabet().letters()) edges.push_back(step(s, a));
  }
  return Fst(rule_.alphabet(), std::move(names), start(), std::move(edges));
}

CaTransducer compile_ca_to_fst(const LocalRule& rule) { return CaTransducer(rule); }

}  // namespace streamlab
