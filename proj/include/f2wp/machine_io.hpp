// Machine description text format.
//
// Line-oriented UTF-8; '#' starts a comment; tokens are whitespace-separated.
// Six directives are required exactly once (states, start, accept, reject,
// blank, tape_alphabet) plus one delta line per transition:
//
//   states: q0 q1 qacc qrej
//   start: q0
//   accept: qacc
//   reject: qrej
//   blank: _
//   tape_alphabet: a b A B _
//   delta: q0 a -> q1 a R
//
// Two-tape machines additionally carry `tapes: 2` and use
//   delta: q s1 s2 -> q' w1 w2 M1 M2     with moves L, R or S.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "f2wp/simulator.hpp"

namespace f2wp {

MachineDef parse_machine_def(std::string_view text);
TwoTapeDef parse_two_tape_def(std::string_view text);

// Parse + validate in one go.
MachineSpec parse_machine(std::string_view text);
TwoTapeSpec parse_two_tape(std::string_view text);

// Canonical form: directives in the order above, delta lines sorted by state
// declaration order then declared symbol order. parse(serialize(d)) == d and
// serialize(parse(t)) == t for canonical t.
std::string serialize_machine(const MachineDef& def);
std::string serialize_two_tape(const TwoTapeDef& def);

// True when the text declares `tapes: 2`.
bool is_two_tape_text(std::string_view text);

// FNV-1a over the canonical serialization, as 16 hex digits.
std::string machine_digest(const MachineDef& def);
std::string machine_digest(const TwoTapeDef& def);

std::string read_text_file(const std::string& path);  // throws std::runtime_error

}  // namespace f2wp
