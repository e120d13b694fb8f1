// Deterministic one-tape (and two-tape) Turing machine execution with full
// instrumentation: step counts, per-cell visit counts, and per-boundary
// crossing sequences.
//
// Conventions: cells are indexed by all integers, the input occupies cells
// 1..n, every other cell is blank, and the head starts at cell 1. Boundary c
// separates cells c and c+1. A missing transition halts with Rejected.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2wp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// Malformed or missing directives, bad token shapes, structural violations.
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};
// Two rules for the same (state, symbol) pair.
class ConflictError : public ParseError {
 public:
  using ParseError::ParseError;
};
// A rule or directive names an undeclared state or symbol.
class ReferenceError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct DeltaRule {
  std::string from;
  char read;
  std::string to;
  char write;
  char move;  // 'L' or 'R'

  bool operator==(const DeltaRule&) const = default;
};

struct MachineDef {
  std::vector<std::string> states;
  std::string start, accept, reject;
  char blank = '_';
  std::string tape_alphabet;  // declared symbol order, single ASCII chars
  std::vector<DeltaRule> rules;

  bool operator==(const MachineDef&) const = default;
};

// Validated, immutable machine with a dense transition table.
class MachineSpec {
 public:
  // Throws FormatError / ConflictError / ReferenceError on invalid input.
  explicit MachineSpec(MachineDef def);

  const MachineDef& def() const { return def_; }
  int state_count() const { return static_cast<int>(def_.states.size()); }  // K
  int start_id() const { return start_; }
  int accept_id() const { return accept_; }
  int reject_id() const { return reject_; }
  char blank() const { return def_.blank; }
  const std::string& state_name(int id) const { return def_.states[id]; }
  int state_id(std::string_view name) const;  // -1 when unknown

  // True when the tape alphabet stays within {a,b,A,B} plus the blank.
  bool strict_alphabet() const;

  bool operator==(const MachineSpec& o) const { return def_ == o.def_; }

  struct Packed {
    std::int32_t next = 0;
    std::uint8_t write = 0;  // symbol id
    std::int8_t move = 0;    // -1 or +1
    bool defined = false;
  };

  int symbol_count() const { return static_cast<int>(def_.tape_alphabet.size()); }
  int symbol_id(char c) const { return sym_id_[static_cast<unsigned char>(c)]; }
  char symbol_char(int id) const { return def_.tape_alphabet[id]; }
  const Packed& entry(int state, int sym) const {
    return table_[static_cast<std::size_t>(state) * symbol_count() + sym];
  }

 private:
  MachineDef def_;
  int start_ = 0, accept_ = 0, reject_ = 0;
  std::array<std::int16_t, 256> sym_id_{};
  std::vector<Packed> table_;
};

struct TwoTapeRule {
  std::string from;
  char read1, read2;
  std::string to;
  char write1, write2;
  char move1, move2;  // 'L', 'R' or 'S'

  bool operator==(const TwoTapeRule&) const = default;
};

struct TwoTapeDef {
  std::vector<std::string> states;
  std::string start, accept, reject;
  char blank = '_';
  std::string tape_alphabet;
  std::vector<TwoTapeRule> rules;

  bool operator==(const TwoTapeDef&) const = default;
};

class TwoTapeSpec {
 public:
  explicit TwoTapeSpec(TwoTapeDef def);

  const TwoTapeDef& def() const { return def_; }
  int state_count() const { return static_cast<int>(def_.states.size()); }

  struct Packed {
    std::int32_t next = 0;
    std::uint8_t write1 = 0, write2 = 0;
    std::int8_t move1 = 0, move2 = 0;  // -1, 0, +1
    bool defined = false;
  };

  int start_id() const { return start_; }
  int accept_id() const { return accept_; }
  int reject_id() const { return reject_; }
  int symbol_count() const { return static_cast<int>(def_.tape_alphabet.size()); }
  int symbol_id(char c) const { return sym_id_[static_cast<unsigned char>(c)]; }
  const Packed& entry(int state, int s1, int s2) const {
    const int n = symbol_count();
    return table_[(static_cast<std::size_t>(state) * n + s1) * n + s2];
  }

  bool operator==(const TwoTapeSpec& o) const { return def_ == o.def_; }

 private:
  TwoTapeDef def_;
  int start_ = 0, accept_ = 0, reject_ = 0;
  std::array<std::int16_t, 256> sym_id_{};
  std::vector<Packed> table_;
};

enum class Verdict { Accepted, Rejected, BudgetExceeded };

std::string_view to_string(Verdict v);

struct RunOutcome {
  Verdict verdict = Verdict::Rejected;
  std::int64_t steps = 0;
  std::int64_t final_head = 1;

  bool operator==(const RunOutcome&) const = default;
};

// One boundary crossing: direction plus the machine state immediately after
// the crossing transition completes.
struct CrossingEntry {
  bool left_to_right = true;
  std::int32_t state = 0;

  bool operator==(const CrossingEntry&) const = default;
};

using CrossingSequence = std::vector<CrossingEntry>;

// Instrumented execution record. visits(c) counts configurations with the
// head at cell c, initial configuration included, so visits sum to steps+1.
// left_steps(c) counts transitions whose pre-transition head cell is <= c;
// right_steps(c) the rest.
class RunTrace {
 public:
  RunOutcome outcome;

  std::int64_t min_cell() const { return min_cell_; }
  std::int64_t max_cell() const { return max_cell_; }
  std::int64_t visits(std::int64_t cell) const;
  const CrossingSequence& crossing_at(std::int64_t boundary) const;  // empty outside
  std::int64_t left_steps(std::int64_t boundary) const;
  std::int64_t right_steps(std::int64_t boundary) const { return outcome.steps - left_steps(boundary); }

  bool operator==(const RunTrace& o) const;

 private:
  friend RunTrace run_traced(const MachineSpec&, std::string_view, std::int64_t);
  std::int64_t min_cell_ = 1, max_cell_ = 1;
  std::vector<std::int64_t> visits_pos_;           // cell >= 1 at index cell-1
  std::vector<std::int64_t> visits_neg_;           // cell <= 0 at index -cell
  std::vector<CrossingSequence> cross_pos_;        // boundary >= 1 at index c-1
  std::vector<CrossingSequence> cross_neg_;        // boundary <= 0 at index -c
  std::vector<std::int64_t> departures_cum_;       // prefix sums over [min_cell_, max_cell_]
};

// Runs the machine on the input word within `budget` transitions.
// Throws std::invalid_argument on letters outside {a,b,A,B} or negative budget.
RunOutcome run(const MachineSpec& m, std::string_view input, std::int64_t budget);

// As run(), with full instrumentation; verdict, steps and final head are
// identical to run() on the same arguments.
RunTrace run_traced(const MachineSpec& m, std::string_view input, std::int64_t budget);

// Chronological crossings of boundary c; empty for untouched boundaries.
const CrossingSequence& crossing_sequence_at(const RunTrace& t, std::int64_t c);

// Exact step count of the run on the hybrid input assembled at boundary c,
// valid when both runs halted with equal crossing sequences at c. Throws
// std::invalid_argument when the precondition fails.
std::int64_t splice_steps(const RunTrace& tu, const RunTrace& tv, std::int64_t c);

// Input on tape 1 starting at cell 1, tape 2 blank, both heads at cell 1.
RunOutcome run_two_tape(const TwoTapeSpec& m, std::string_view input, std::int64_t budget);

}  // namespace f2wp
