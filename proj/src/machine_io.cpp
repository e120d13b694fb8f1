#include "f2wp/machine_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace f2wp {

namespace {

struct RawLine {
  std::string directive;            // without the trailing colon
  std::vector<std::string> tokens;  // remaining tokens
  int number = 0;
};

std::vector<RawLine> tokenize(std::string_view text) {
  std::vector<RawLine> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    RawLine raw;
    raw.number = number;
    while (ls >> tok) raw.tokens.push_back(tok);
    if (raw.tokens.empty()) continue;
    std::string head = raw.tokens.front();
    if (head.size() < 2 || head.back() != ':') {
      throw FormatError("line " + std::to_string(number) + ": expected a directive, got '" + head + "'");
    }
    raw.directive = head.substr(0, head.size() - 1);
    raw.tokens.erase(raw.tokens.begin());
    lines.push_back(std::move(raw));
  }
  return lines;
}

char single_char(const std::string& tok, const RawLine& l) {
  if (tok.size() != 1) {
    throw FormatError("line " + std::to_string(l.number) + ": tape symbols are single characters, got '" + tok + "'");
  }
  return tok[0];
}

std::string one_token(const RawLine& l) {
  if (l.tokens.size() != 1) {
    throw FormatError("line " + std::to_string(l.number) + ": directive '" + l.directive + "' takes exactly one token");
  }
  return l.tokens[0];
}

// Shared directive scaffolding for both machine kinds. Returns delta lines.
template <typename Def>
std::vector<RawLine> parse_directives(std::string_view text, Def& def, int expected_tapes) {
  int seen_states = 0, seen_start = 0, seen_accept = 0, seen_reject = 0;
  int seen_blank = 0, seen_alphabet = 0, seen_tapes = 0;
  int tapes = 1;
  std::vector<RawLine> deltas;

  for (auto& l : tokenize(text)) {
    if (l.directive == "states") {
      ++seen_states;
      def.states = l.tokens;
    } else if (l.directive == "start") {
      ++seen_start;
      def.start = one_token(l);
    } else if (l.directive == "accept") {
      ++seen_accept;
      def.accept = one_token(l);
    } else if (l.directive == "reject") {
      ++seen_reject;
      def.reject = one_token(l);
    } else if (l.directive == "blank") {
      ++seen_blank;
      def.blank = single_char(one_token(l), l);
    } else if (l.directive == "tape_alphabet") {
      ++seen_alphabet;
      def.tape_alphabet.clear();
      for (const auto& t : l.tokens) def.tape_alphabet.push_back(single_char(t, l));
    } else if (l.directive == "tapes") {
      ++seen_tapes;
      const std::string v = one_token(l);
      if (v != "1" && v != "2") {
        throw FormatError("line " + std::to_string(l.number) + ": tapes must be 1 or 2");
      }
      tapes = v[0] - '0';
    } else if (l.directive == "delta") {
      deltas.push_back(std::move(l));
    } else {
      throw FormatError("line " + std::to_string(l.number) + ": unknown directive '" + l.directive + "'");
    }
  }

  auto exactly_once = [](int count, const char* name) {
    if (count != 1) {
      throw FormatError(std::string(count == 0 ? "missing" : "repeated") + " directive '" + name + "'");
    }
  };
  exactly_once(seen_states, "states");
  exactly_once(seen_start, "start");
  exactly_once(seen_accept, "accept");
  exactly_once(seen_reject, "reject");
  exactly_once(seen_blank, "blank");
  exactly_once(seen_alphabet, "tape_alphabet");
  if (seen_tapes > 1) throw FormatError("repeated directive 'tapes'");
  if (tapes != expected_tapes) {
    throw FormatError("this is a " + std::to_string(tapes) + "-tape description; expected " +
                      std::to_string(expected_tapes) + "-tape");
  }
  return deltas;
}

}  // namespace

MachineDef parse_machine_def(std::string_view text) {
  MachineDef def;
  for (const auto& l : parse_directives(text, def, 1)) {
    if (l.tokens.size() != 6 || l.tokens[2] != "->") {
      throw FormatError("line " + std::to_string(l.number) + ": delta needs 'q s -> q' s' M'");
    }
    DeltaRule r;
    r.from = l.tokens[0];
    r.read = single_char(l.tokens[1], l);
    r.to = l.tokens[3];
    r.write = single_char(l.tokens[4], l);
    r.move = single_char(l.tokens[5], l);
    def.rules.push_back(std::move(r));
  }
  return def;
}

TwoTapeDef parse_two_tape_def(std::string_view text) {
  TwoTapeDef def;
  for (const auto& l : parse_directives(text, def, 2)) {
    if (l.tokens.size() != 9 || l.tokens[3] != "->") {
      throw FormatError("line " + std::to_string(l.number) +
                        ": delta needs 'q s1 s2 -> q' w1 w2 M1 M2'");
    }
    TwoTapeRule r;
    r.from = l.tokens[0];
    r.read1 = single_char(l.tokens[1], l);
    r.read2 = single_char(l.tokens[2], l);
    r.to = l.tokens[4];
    r.write1 = single_char(l.tokens[5], l);
    r.write2 = single_char(l.tokens[6], l);
    r.move1 = single_char(l.tokens[7], l);
    r.move2 = single_char(l.tokens[8], l);
    def.rules.push_back(std::move(r));
  }
  return def;
}

MachineSpec parse_machine(std::string_view text) { return MachineSpec(parse_machine_def(text)); }

TwoTapeSpec parse_two_tape(std::string_view text) { return TwoTapeSpec(parse_two_tape_def(text)); }

bool is_two_tape_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b;
    if (ls >> a >> b && a == "tapes:" && b == "2") return true;
  }
  return false;
}

namespace {

template <typename Def>
void serialize_header(std::ostringstream& out, const Def& def) {
  out << "states:";
  for (const auto& s : def.states) out << ' ' << s;
  out << '\n';
  out << "start: " << def.start << '\n';
  out << "accept: " << def.accept << '\n';
  out << "reject: " << def.reject << '\n';
  out << "blank: " << def.blank << '\n';
  out << "tape_alphabet:";
  for (char c : def.tape_alphabet) out << ' ' << c;
  out << '\n';
}

template <typename Def>
std::size_t state_pos(const Def& def, const std::string& name) {
  return static_cast<std::size_t>(
      std::find(def.states.begin(), def.states.end(), name) - def.states.begin());
}

template <typename Def>
std::size_t sym_pos(const Def& def, char c) {
  return def.tape_alphabet.find(c);
}

}  // namespace

std::string serialize_machine(const MachineDef& def) {
  std::ostringstream out;
  serialize_header(out, def);
  auto rules = def.rules;
  std::stable_sort(rules.begin(), rules.end(), [&](const DeltaRule& x, const DeltaRule& y) {
    auto kx = std::pair(state_pos(def, x.from), sym_pos(def, x.read));
    auto ky = std::pair(state_pos(def, y.from), sym_pos(def, y.read));
    return kx < ky;
  });
  for (const auto& r : rules) {
    out << "delta: " << r.from << ' ' << r.read << " -> " << r.to << ' ' << r.write << ' '
        << r.move << '\n';
  }
  return out.str();
}

std::string serialize_two_tape(const TwoTapeDef& def) {
  std::ostringstream out;
  serialize_header(out, def);
  out << "tapes: 2\n";
  auto rules = def.rules;
  std::stable_sort(rules.begin(), rules.end(), [&](const TwoTapeRule& x, const TwoTapeRule& y) {
    auto kx = std::tuple(state_pos(def, x.from), sym_pos(def, x.read1), sym_pos(def, x.read2));
    auto ky = std::tuple(state_pos(def, y.from), sym_pos(def, y.read1), sym_pos(def, y.read2));
    return kx < ky;
  });
  for (const auto& r : rules) {
    out << "delta: " << r.from << ' ' << r.read1 << ' ' << r.read2 << " -> " << r.to << ' '
        << r.write1 << ' ' << r.write2 << ' ' << r.move1 << ' ' << r.move2 << '\n';
  }
  return out.str();
}

namespace {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string machine_digest(const MachineDef& def) { return fnv1a_hex(serialize_machine(def)); }

std::string machine_digest(const TwoTapeDef& def) { return fnv1a_hex(serialize_two_tape(def)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace f2wp
