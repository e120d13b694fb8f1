#include "f2wp/simulator.hpp"

#include <algorithm>

#include "f2wp/free_group.hpp"

namespace f2wp {

namespace {

constexpr std::string_view kInputAlphabet = "abAB";

void check_symbols(const std::string& alphabet, char blank) {
  for (char c : alphabet) {
    if (c <= ' ' || c > '~') throw FormatError("tape symbols must be printable ASCII");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet.find(alphabet[i], i + 1) != std::string::npos) {
      throw FormatError(std::string("duplicate tape symbol '") + alphabet[i] + "'");
    }
  }
  if (alphabet.find(blank) == std::string::npos) {
    throw FormatError("blank symbol not in tape alphabet");
  }
  for (char c : kInputAlphabet) {
    if (alphabet.find(c) == std::string::npos) {
      throw FormatError(std::string("tape alphabet must contain input letter '") + c + "'");
    }
  }
}

int find_state(const std::vector<std::string>& states, const std::string& name,
               const char* what) {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) {
    throw ReferenceError(std::string(what) + " names undeclared state '" + name + "'");
  }
  return static_cast<int>(it - states.begin());
}

void check_states(const std::vector<std::string>& states) {
  if (states.size() < 2) throw FormatError("a machine needs at least 2 states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].empty()) throw FormatError("empty state name");
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (states[i] == states[j]) throw FormatError("duplicate state '" + states[i] + "'");
    }
  }
}

// Bi-infinite tape holding symbol ids. Cell c >= 1 lives at pos[c-1],
// cell c <= 0 at neg[-c].
struct Tape {
  std::vector<std::uint8_t> pos, neg;
  std::uint8_t blank;

  explicit Tape(std::uint8_t blank_id) : blank(blank_id) {}

  std::uint8_t& at(std::int64_t c) {
    if (c >= 1) {
      auto i = static_cast<std::size_t>(c - 1);
      if (i >= pos.size()) pos.resize(i + 1, blank);
      return pos[i];
    }
    auto i = static_cast<std::size_t>(-c);
    if (i >= neg.size()) neg.resize(i + 1, blank);
    return neg[i];
  }
};

void check_run_args(const MachineSpec& m, std::string_view input, std::int64_t budget) {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  require_valid_word(input);
  (void)m;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "ACCEPT";
    case Verdict::Rejected: return "REJECT";
    case Verdict::BudgetExceeded: return "TIMEOUT";
  }
  return "?";
}

namespace {

// Canonical rule order: state declaration order, then declared symbol order.
template <typename Def, typename Key>
void sort_rules(Def& def, Key key) {
  std::stable_sort(def.rules.begin(), def.rules.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

}  // namespace

MachineSpec::MachineSpec(MachineDef def) : def_(std::move(def)) {
  check_states(def_.states);
  check_symbols(def_.tape_alphabet, def_.blank);
  sort_rules(def_, [this](const DeltaRule& r) {
    const auto s = std::find(def_.states.begin(), def_.states.end(), r.from) - def_.states.begin();
    return std::pair(s, def_.tape_alphabet.find(r.read));
  });
  start_ = find_state(def_.states, def_.start, "start directive");
  accept_ = find_state(def_.states, def_.accept, "accept directive");
  reject_ = find_state(def_.states, def_.reject, "reject directive");
  if (accept_ == reject_) throw FormatError("accept and reject must differ");

  sym_id_.fill(-1);
  for (std::size_t i = 0; i < def_.tape_alphabet.size(); ++i) {
    sym_id_[static_cast<unsigned char>(def_.tape_alphabet[i])] = static_cast<std::int16_t>(i);
  }

  table_.assign(def_.states.size() * def_.tape_alphabet.size(), {});
  for (const auto& r : def_.rules) {
    const int from = find_state(def_.states, r.from, "delta");
    const int to = find_state(def_.states, r.to, "delta");
    if (from == accept_ || from == reject_) {
      throw FormatError("delta from halting state '" + r.from + "'");
    }
    const int read = symbol_id(r.read);
    const int write = symbol_id(r.write);
    if (read < 0) throw ReferenceError(std::string("delta reads undeclared symbol '") + r.read + "'");
    if (write < 0) throw ReferenceError(std::string("delta writes undeclared symbol '") + r.write + "'");
    if (r.move != 'L' && r.move != 'R') throw FormatError("one-tape moves are L or R");
    Packed& slot = table_[static_cast<std::size_t>(from) * symbol_count() + read];
    if (slot.defined) {
      throw ConflictError("duplicate transition for (" + r.from + ", " + std::string(1, r.read) + ")");
    }
    slot = {to, static_cast<std::uint8_t>(write), static_cast<std::int8_t>(r.move == 'R' ? 1 : -1), true};
  }
}

int MachineSpec::state_id(std::string_view name) const {
  for (std::size_t i = 0; i < def_.states.size(); ++i) {
    if (def_.states[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool MachineSpec::strict_alphabet() const {
  for (char c : def_.tape_alphabet) {
    if (!is_generator(c) && c != def_.blank) return false;
  }
  return true;
}

TwoTapeSpec::TwoTapeSpec(TwoTapeDef def) : def_(std::move(def)) {
  check_states(def_.states);
  check_symbols(def_.tape_alphabet, def_.blank);
  sort_rules(def_, [this](const TwoTapeRule& r) {
    const auto s = std::find(def_.states.begin(), def_.states.end(), r.from) - def_.states.begin();
    return std::tuple(s, def_.tape_alphabet.find(r.read1), def_.tape_alphabet.find(r.read2));
  });
  start_ = find_state(def_.states, def_.start, "start directive");
  accept_ = find_state(def_.states, def_.accept, "accept directive");
  reject_ = find_state(def_.states, def_.reject, "reject directive");
  if (accept_ == reject_) throw FormatError("accept and reject must differ");

  sym_id_.fill(-1);
  for (std::size_t i = 0; i < def_.tape_alphabet.size(); ++i) {
    sym_id_[static_cast<unsigned char>(def_.tape_alphabet[i])] = static_cast<std::int16_t>(i);
  }

  const int n = symbol_count();
  table_.assign(def_.states.size() * n * n, {});
  auto move_of = [](char m) -> std::int8_t {
    if (m == 'L') return -1;
    if (m == 'R') return 1;
    if (m == 'S') return 0;
    throw FormatError("two-tape moves are L, R or S");
  };
  for (const auto& r : def_.rules) {
    const int from = find_state(def_.states, r.from, "delta");
    const int to = find_state(def_.states, r.to, "delta");
    if (from == accept_ || from == reject_) {
      throw FormatError("delta from halting state '" + r.from + "'");
    }
    const int r1 = symbol_id(r.read1), r2 = symbol_id(r.read2);
    const int w1 = symbol_id(r.write1), w2 = symbol_id(r.write2);
    if (r1 < 0 || r2 < 0 || w1 < 0 || w2 < 0) {
      throw ReferenceError("delta uses undeclared symbol");
    }
    Packed& slot = table_[(static_cast<std::size_t>(from) * n + r1) * n + r2];
    if (slot.defined) {
      throw ConflictError("duplicate transition for (" + r.from + ", " + std::string(1, r.read1) +
                          ", " + std::string(1, r.read2) + ")");
    }
    slot = {to, static_cast<std::uint8_t>(w1), static_cast<std::uint8_t>(w2),
            move_of(r.move1), move_of(r.move2), true};
  }
}

RunOutcome run(const MachineSpec& m, std::string_view input, std::int64_t budget) {
  check_run_args(m, input, budget);
  Tape tape(static_cast<std::uint8_t>(m.symbol_id(m.blank())));
  for (std::size_t i = 0; i < input.size(); ++i) {
    tape.at(static_cast<std::int64_t>(i) + 1) = static_cast<std::uint8_t>(m.symbol_id(input[i]));
  }
  int state = m.start_id();
  std::int64_t head = 1, steps = 0;
  const int accept = m.accept_id(), reject = m.reject_id();
  for (;;) {
    if (state == accept) return {Verdict::Accepted, steps, head};
    if (state == reject) return {Verdict::Rejected, steps, head};
    std::uint8_t& cell = tape.at(head);
    const MachineSpec::Packed& t = m.entry(state, cell);
    if (!t.defined) return {Verdict::Rejected, steps, head};
    if (steps == budget) return {Verdict::BudgetExceeded, steps, head};
    cell = t.write;
    head += t.move;
    state = t.next;
    ++steps;
  }
}

std::int64_t RunTrace::visits(std::int64_t cell) const {
  if (cell >= 1) {
    auto i = static_cast<std::size_t>(cell - 1);
    return i < visits_pos_.size() ? visits_pos_[i] : 0;
  }
  auto i = static_cast<std::size_t>(-cell);
  return i < visits_neg_.size() ? visits_neg_[i] : 0;
}

const CrossingSequence& RunTrace::crossing_at(std::int64_t boundary) const {
  static const CrossingSequence empty;
  if (boundary >= 1) {
    auto i = static_cast<std::size_t>(boundary - 1);
    return i < cross_pos_.size() ? cross_pos_[i] : empty;
  }
  auto i = static_cast<std::size_t>(-boundary);
  return i < cross_neg_.size() ? cross_neg_[i] : empty;
}

std::int64_t RunTrace::left_steps(std::int64_t boundary) const {
  if (boundary < min_cell_) return 0;
  if (boundary > max_cell_) return outcome.steps;
  return departures_cum_[static_cast<std::size_t>(boundary - min_cell_)];
}

bool RunTrace::operator==(const RunTrace& o) const {
  if (!(outcome == o.outcome) || min_cell_ != o.min_cell_ || max_cell_ != o.max_cell_) {
    return false;
  }
  for (std::int64_t c = min_cell_; c <= max_cell_; ++c) {
    if (visits(c) != o.visits(c)) return false;
  }
  for (std::int64_t c = min_cell_ - 1; c <= max_cell_; ++c) {
    if (crossing_at(c) != o.crossing_at(c)) return false;
  }
  return true;
}

RunTrace run_traced(const MachineSpec& m, std::string_view input, std::int64_t budget) {
  check_run_args(m, input, budget);
  Tape tape(static_cast<std::uint8_t>(m.symbol_id(m.blank())));
  for (std::size_t i = 0; i < input.size(); ++i) {
    tape.at(static_cast<std::int64_t>(i) + 1) = static_cast<std::uint8_t>(m.symbol_id(input[i]));
  }

  RunTrace tr;
  auto bump_visit = [&tr](std::int64_t cell) {
    if (cell >= 1) {
      auto i = static_cast<std::size_t>(cell - 1);
      if (i >= tr.visits_pos_.size()) tr.visits_pos_.resize(i + 1, 0);
      ++tr.visits_pos_[i];
    } else {
      auto i = static_cast<std::size_t>(-cell);
      if (i >= tr.visits_neg_.size()) tr.visits_neg_.resize(i + 1, 0);
      ++tr.visits_neg_[i];
    }
  };
  auto record_crossing = [&tr](std::int64_t boundary, bool lr, int state) {
    CrossingSequence* seq;
    if (boundary >= 1) {
      auto i = static_cast<std::size_t>(boundary - 1);
      if (i >= tr.cross_pos_.size()) tr.cross_pos_.resize(i + 1);
      seq = &tr.cross_pos_[i];
    } else {
      auto i = static_cast<std::size_t>(-boundary);
      if (i >= tr.cross_neg_.size()) tr.cross_neg_.resize(i + 1);
      seq = &tr.cross_neg_[i];
    }
    seq->push_back({lr, state});
  };

  int state = m.start_id();
  std::int64_t head = 1, steps = 0;
  const int accept = m.accept_id(), reject = m.reject_id();
  bump_visit(head);
  for (;;) {
    if (state == accept) {
      tr.outcome = {Verdict::Accepted, steps, head};
      break;
    }
    if (state == reject) {
      tr.outcome = {Verdict::Rejected, steps, head};
      break;
    }
    std::uint8_t& cell = tape.at(head);
    const MachineSpec::Packed& t = m.entry(state, cell);
    if (!t.defined) {
      tr.outcome = {Verdict::Rejected, steps, head};
      break;
    }
    if (steps == budget) {
      tr.outcome = {Verdict::BudgetExceeded, steps, head};
      break;
    }
    cell = t.write;
    if (t.move > 0) {
      record_crossing(head, true, t.next);
      ++head;
    } else {
      record_crossing(head - 1, false, t.next);
      --head;
    }
    state = t.next;
    ++steps;
    bump_visit(head);
    tr.min_cell_ = std::min(tr.min_cell_, head);
    tr.max_cell_ = std::max(tr.max_cell_, head);
  }

  // Transitions leave from every visited configuration except the final one.
  tr.departures_cum_.resize(static_cast<std::size_t>(tr.max_cell_ - tr.min_cell_ + 1));
  std::int64_t acc = 0;
  for (std::int64_t c = tr.min_cell_; c <= tr.max_cell_; ++c) {
    acc += tr.visits(c) - (c == tr.outcome.final_head ? 1 : 0);
    tr.departures_cum_[static_cast<std::size_t>(c - tr.min_cell_)] = acc;
  }
  return tr;
}

const CrossingSequence& crossing_sequence_at(const RunTrace& t, std::int64_t c) {
  return t.crossing_at(c);
}

std::int64_t splice_steps(const RunTrace& tu, const RunTrace& tv, std::int64_t c) {
  if (tu.outcome.verdict == Verdict::BudgetExceeded ||
      tv.outcome.verdict == Verdict::BudgetExceeded) {
    throw std::invalid_argument("splice_steps requires two halting runs");
  }
  if (tu.crossing_at(c) != tv.crossing_at(c)) {
    throw std::invalid_argument("splice_steps requires equal crossing sequences at the boundary");
  }
  return tu.left_steps(c) + tv.right_steps(c);
}

RunOutcome run_two_tape(const TwoTapeSpec& m, std::string_view input, std::int64_t budget) {
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  require_valid_word(input);
  Tape tape1(static_cast<std::uint8_t>(m.symbol_id(m.def().blank)));
  Tape tape2(tape1.blank);
  for (std::size_t i = 0; i < input.size(); ++i) {
    tape1.at(static_cast<std::int64_t>(i) + 1) = static_cast<std::uint8_t>(m.symbol_id(input[i]));
  }
  int state = m.start_id();
  std::int64_t h1 = 1, h2 = 1, steps = 0;
  const int accept = m.accept_id(), reject = m.reject_id();
  for (;;) {
    if (state == accept) return {Verdict::Accepted, steps, h1};
    if (state == reject) return {Verdict::Rejected, steps, h1};
    std::uint8_t& c1 = tape1.at(h1);
    std::uint8_t& c2 = tape2.at(h2);
    const TwoTapeSpec::Packed& t = m.entry(state, c1, c2);
    if (!t.defined) return {Verdict::Rejected, steps, h1};
    if (steps == budget) return {Verdict::BudgetExceeded, steps, h1};
    c1 = t.write1;
    c2 = t.write2;
    h1 += t.move1;
    h2 += t.move2;
    state = t.next;
    ++steps;
  }
}

}  // namespace f2wp
