// Bundled reference machines: a correct quadratic one-tape solver, a correct
// linear two-tape solver, and deliberately incorrect fast machines used as
// refutation demonstration targets.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2wp/simulator.hpp"

namespace f2wp {

enum class MachineKind { OneTape, TwoTape };
enum class Correctness { Correct, IncorrectByDesign };

struct CatalogEntry {
  std::string name;
  MachineKind kind;
  Correctness correctness;
  double expected_exponent;  // intended step-count growth on the worst-case family
  int state_count;
};

const std::vector<CatalogEntry>& machine_catalog();
const CatalogEntry* catalog_entry(std::string_view name);

// Accepts every input in at most one step.
MachineSpec build_always_accept();

// One left-to-right pass tracking the parities of #{a,A} and #{b,B}; accepts
// iff both are even. Accepts every trivial word and some non-trivial ones;
// n+1 steps.
MachineSpec build_parity_cheat();

// Accepts exactly the trivial words. Sweeps right holding the last unmatched
// letter in state; on its inverse, strikes out both cells with the work
// symbol X and walks back for the new pending letter. Theta(n^2) worst case.
MachineSpec build_quad_cancel();

// Accepts exactly the trivial words in O(n) steps, using tape 2 as a stack:
// push each letter, pop on a matching inverse, accept iff the stack is empty
// at the end of the input.
TwoTapeSpec build_twotape_linear();

std::optional<MachineSpec> builtin_machine(std::string_view name);
std::optional<TwoTapeSpec> builtin_two_tape(std::string_view name);

}  // namespace f2wp
