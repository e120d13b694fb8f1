#include <random>
#include <stdexcept>

#include "doctest.h"
#include "f2wp/machines.hpp"
#include "f2wp/simulator.hpp"
#include "test_support.hpp"

using namespace f2wp;
using f2wp::testing::bounded;
using f2wp::testing::random_machine;
using f2wp::testing::random_word;

namespace {

// One pass left to right, accept at the first blank.
MachineSpec build_sweeper() {
  MachineDef def;
  def.states = {"sweep", "acc", "rej"};
  def.start = "sweep";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_";
  for (char c : std::string("abAB")) def.rules.push_back({"sweep", c, "sweep", c, 'R'});
  def.rules.push_back({"sweep", '_', "acc", '_', 'R'});
  return MachineSpec(def);
}

}  // namespace

TEST_CASE("always_accept runs") {
  const MachineSpec m = build_always_accept();
  const RunOutcome r = run(m, "abAB", 100);
  CHECK(r.verdict == Verdict::Accepted);
  CHECK(r.steps == 1);
  CHECK(run(m, "", 100).verdict == Verdict::Accepted);
  CHECK(run(m, "aa", 100).verdict == Verdict::Accepted);
}

TEST_CASE("budget handling") {
  const MachineSpec q = build_quad_cancel();
  CHECK(run(q, "aA", 0).verdict == Verdict::BudgetExceeded);
  const RunOutcome full = run(q, "aA", 1 << 20);
  CHECK(full.verdict == Verdict::Accepted);
  // Identical results for any budget at or above the halting step count.
  for (std::int64_t b : {full.steps, full.steps + 1, full.steps + 1000}) {
    CHECK(run(q, "aA", b) == full);
  }
  CHECK(run(q, "aA", full.steps - 1).verdict == Verdict::BudgetExceeded);
}

TEST_CASE("quad_cancel agrees with the oracle on the fixed pair") {
  const MachineSpec q = build_quad_cancel();
  CHECK(run(q, "aA", 1000).verdict == Verdict::Accepted);
  CHECK(run(q, "ab", 1000).verdict == Verdict::Rejected);
}

TEST_CASE("input validation") {
  const MachineSpec m = build_always_accept();
  CHECK_THROWS_AS(run(m, "ax", 10), std::invalid_argument);
  CHECK_THROWS_AS(run(m, "aA", -1), std::invalid_argument);
}

TEST_CASE("sweeper trace: one LR crossing per boundary") {
  const MachineSpec m = build_sweeper();
  const RunTrace t = run_traced(m, "abABabAB", 100);
  CHECK(t.outcome.verdict == Verdict::Accepted);
  CHECK(t.outcome.steps == 9);
  CHECK(t.outcome.final_head == 10);
  for (std::int64_t c = 1; c <= 8; ++c) {
    REQUIRE(t.crossing_at(c).size() == 1);
    CHECK(t.crossing_at(c)[0].left_to_right);
    CHECK(m.state_name(t.crossing_at(c)[0].state) == "sweep");
  }
  CHECK(crossing_sequence_at(t, 100).empty());
  CHECK(crossing_sequence_at(t, -5).empty());
  for (std::int64_t cell = 1; cell <= 9; ++cell) CHECK(t.visits(cell) == 1);
}

TEST_CASE("always_accept trace on a two-letter word") {
  const RunTrace t = run_traced(build_always_accept(), "aA", 100);
  CHECK(t.outcome.verdict == Verdict::Accepted);
  CHECK(t.visits(1) >= 1);
  for (std::int64_t c = t.min_cell() - 1; c <= t.max_cell(); ++c) {
    CHECK(t.crossing_at(c).size() <= 1);
  }
}

TEST_CASE("parity_cheat crossing at c=2 carries the parity state") {
  const MachineSpec m = build_parity_cheat();
  const RunTrace t = run_traced(m, "aaaaAAAA", 100);
  REQUIRE(t.crossing_at(2).size() == 1);
  CHECK(t.crossing_at(2)[0].left_to_right);
  CHECK(m.state_name(t.crossing_at(2)[0].state) == "ee");

  const RunTrace t2 = run_traced(m, "bbaaAABB", 100);
  REQUIRE(t2.crossing_at(2).size() == 1);
  CHECK(m.state_name(t2.crossing_at(2)[0].state) == "ee");
}

TEST_CASE("splice_steps") {
  const MachineSpec m = build_sweeper();
  const RunTrace tu = run_traced(m, "abABabAB", 100);
  const RunTrace tv = run_traced(m, "BBBBBBBB", 100);
  CHECK(splice_steps(tu, tu, 4) == tu.outcome.steps);
  CHECK(splice_steps(tu, tv, 4) == 9);
  CHECK(splice_steps(tv, tu, 4) == 9);

  const MachineSpec q = build_quad_cancel();
  const RunTrace far = run_traced(q, "aA", 1000);
  CHECK_THROWS_AS(splice_steps(tu, far, 1), std::invalid_argument);  // unequal sequences
  const RunTrace cut = run_traced(m, "abABabAB", 3);
  CHECK_THROWS_AS(splice_steps(cut, cut, 4), std::invalid_argument);  // not halted
}

TEST_CASE("trace invariants on random machines and words") {
  std::mt19937_64 rng(2024);
  int halted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const MachineSpec m = random_machine(rng);
    const std::string w = random_word(rng, bounded(rng, 20));
    const RunTrace t = run_traced(m, w, 3000);
    CAPTURE(trial);

    // Visit/step conservation, all verdicts included.
    std::int64_t total = 0;
    for (std::int64_t c = t.min_cell(); c <= t.max_cell(); ++c) total += t.visits(c);
    CHECK(total == t.outcome.steps + 1);

    // Crossing bound and strict alternation; first crossing right of the
    // start cell goes left-to-right.
    for (std::int64_t c = t.min_cell() - 1; c <= t.max_cell(); ++c) {
      const CrossingSequence& seq = t.crossing_at(c);
      CHECK(static_cast<std::int64_t>(seq.size()) <= 2 * t.visits(c));
      for (std::size_t i = 1; i < seq.size(); ++i) {
        CHECK(seq[i].left_to_right != seq[i - 1].left_to_right);
      }
      if (!seq.empty()) CHECK(seq[0].left_to_right == (c >= 1));  // start cell is 1
      // Final side matches crossing-count parity.
      if (c >= 1 && t.outcome.verdict != Verdict::BudgetExceeded) {
        CHECK((t.outcome.final_head > c) == (seq.size() % 2 == 1));
      }
    }

    // left/right attribution is a partition of the steps.
    for (std::int64_t c = t.min_cell() - 1; c <= t.max_cell() + 1; ++c) {
      CHECK(t.left_steps(c) + t.right_steps(c) == t.outcome.steps);
    }
    CHECK(t.left_steps(t.max_cell()) == t.outcome.steps);
    CHECK(t.left_steps(t.min_cell() - 1) == 0);

    if (t.outcome.verdict != Verdict::BudgetExceeded) ++halted;
  }
  CHECK(halted > 100);  // the generator must produce mostly-halting machines
}

TEST_CASE("run and run_traced agree") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const MachineSpec m = random_machine(rng);
    const std::string w = random_word(rng, bounded(rng, 24));
    const std::int64_t budget = 1 + static_cast<std::int64_t>(bounded(rng, 2000));
    const RunOutcome fast = run(m, w, budget);
    const RunTrace traced = run_traced(m, w, budget);
    CAPTURE(trial);
    CHECK(fast == traced.outcome);
  }
}

TEST_CASE("budget monotonicity on random machines") {
  std::mt19937_64 rng(777);
  int halted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MachineSpec m = random_machine(rng);
    const std::string w = random_word(rng, bounded(rng, 20));
    const RunOutcome full = run(m, w, 5000);
    if (full.verdict == Verdict::BudgetExceeded) continue;
    ++halted;
    CHECK(run(m, w, full.steps) == full);
    CHECK(run(m, w, full.steps + 7) == full);
    if (full.steps > 0) {
      CHECK(run(m, w, full.steps - 1).verdict == Verdict::BudgetExceeded);
    }
  }
  CHECK(halted > 50);
}

TEST_CASE("run_traced is deterministic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const MachineSpec m = random_machine(rng);
    const std::string w = random_word(rng, 16);
    CHECK(run_traced(m, w, 2000) == run_traced(m, w, 2000));
  }
}

TEST_CASE("two-tape runs") {
  const TwoTapeSpec m = build_twotape_linear();
  const RunOutcome r = run_two_tape(m, "abBA", 100);
  CHECK(r.verdict == Verdict::Accepted);
  CHECK(r.steps <= 2 * 4 + 2);
  CHECK(run_two_tape(m, "abAB", 100).verdict == Verdict::Rejected);
  CHECK(run_two_tape(m, "", 100).verdict == Verdict::Accepted);
  CHECK(run_two_tape(m, "ba", 100).verdict == Verdict::Rejected);
  CHECK(run_two_tape(m, "aA", 1).verdict == Verdict::BudgetExceeded);
}

TEST_CASE("machine validation") {
  MachineDef def;
  def.states = {"q0", "acc", "rej"};
  def.start = "q0";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_";

  SUBCASE("accept equals reject") {
    def.reject = "acc";
    CHECK_THROWS_AS(MachineSpec{def}, FormatError);
  }
  SUBCASE("undeclared start") {
    def.start = "nope";
    CHECK_THROWS_AS(MachineSpec{def}, ReferenceError);
  }
  SUBCASE("duplicate transition") {
    def.rules.push_back({"q0", 'a', "acc", 'a', 'R'});
    def.rules.push_back({"q0", 'a', "rej", 'a', 'L'});
    CHECK_THROWS_AS(MachineSpec{def}, ConflictError);
  }
  SUBCASE("transition from a halting state") {
    def.rules.push_back({"acc", 'a', "acc", 'a', 'R'});
    CHECK_THROWS_AS(MachineSpec{def}, FormatError);
  }
  SUBCASE("undeclared symbol in a rule") {
    def.rules.push_back({"q0", 'x', "acc", 'a', 'R'});
    CHECK_THROWS_AS(MachineSpec{def}, ReferenceError);
  }
  SUBCASE("missing blank in the alphabet") {
    def.tape_alphabet = "abAB";
    CHECK_THROWS_AS(MachineSpec{def}, FormatError);
  }
  SUBCASE("one state is too few") {
    def.states = {"q0"};
    def.start = def.accept = "q0";
    CHECK_THROWS_AS(MachineSpec{def}, FormatError);
  }
  SUBCASE("strictness flag") {
    CHECK(MachineSpec(def).strict_alphabet());
    def.tape_alphabet = "abAB_X";
    CHECK_FALSE(MachineSpec(def).strict_alphabet());
  }
}
