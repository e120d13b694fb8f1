#include "f2wp/machines.hpp"

#include "f2wp/free_group.hpp"

namespace f2wp {

namespace {

constexpr std::string_view kLetters = "abAB";

std::string scan_state(char pending) { return std::string("scan_") + pending; }
std::string erase_state(char pending) { return std::string("erase_") + pending; }
std::string push_state(char letter) { return std::string("push_") + letter; }

}  // namespace

MachineSpec build_always_accept() {
  MachineDef def;
  def.states = {"q0", "acc", "rej"};
  def.start = "q0";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_";
  for (char c : std::string("abAB_")) def.rules.push_back({"q0", c, "acc", c, 'R'});
  return MachineSpec(std::move(def));
}

MachineSpec build_parity_cheat() {
  MachineDef def;
  def.states = {"ee", "oe", "eo", "oo", "acc", "rej"};
  def.start = "ee";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_";
  auto flip_a = [](const std::string& s) { return std::string(1, s[0] == 'e' ? 'o' : 'e') + s[1]; };
  auto flip_b = [](const std::string& s) { return s.substr(0, 1) + (s[1] == 'e' ? 'o' : 'e'); };
  for (const std::string st : {"ee", "oe", "eo", "oo"}) {
    def.rules.push_back({st, 'a', flip_a(st), 'a', 'R'});
    def.rules.push_back({st, 'A', flip_a(st), 'A', 'R'});
    def.rules.push_back({st, 'b', flip_b(st), 'b', 'R'});
    def.rules.push_back({st, 'B', flip_b(st), 'B', 'R'});
    def.rules.push_back({st, '_', st == "ee" ? "acc" : "rej", '_', 'R'});
  }
  return MachineSpec(std::move(def));
}

MachineSpec build_quad_cancel() {
  MachineDef def;
  def.states = {"scan"};
  for (char x : kLetters) def.states.push_back(scan_state(x));
  for (char x : kLetters) def.states.push_back(erase_state(x));
  def.states.push_back("resume");
  def.states.push_back("acc");
  def.states.push_back("rej");
  def.start = "scan";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_X";

  // No pending letter: everything to the left is struck out.
  def.rules.push_back({"scan", 'X', "scan", 'X', 'R'});
  for (char y : kLetters) def.rules.push_back({"scan", y, scan_state(y), y, 'R'});
  def.rules.push_back({"scan", '_', "acc", '_', 'R'});

  // Pending x = nearest unstruck letter left of the head.
  for (char x : kLetters) {
    const std::string st = scan_state(x);
    def.rules.push_back({st, 'X', st, 'X', 'R'});
    for (char y : kLetters) {
      if (y == inverse_letter(x)) {
        def.rules.push_back({st, y, erase_state(x), 'X', 'L'});
      } else {
        def.rules.push_back({st, y, scan_state(y), y, 'R'});
      }
    }
    def.rules.push_back({st, '_', "rej", '_', 'R'});
  }

  // Walk left to strike out the pending letter, then resume further left.
  for (char x : kLetters) {
    const std::string st = erase_state(x);
    def.rules.push_back({st, 'X', st, 'X', 'L'});
    def.rules.push_back({st, x, "resume", 'X', 'L'});
  }

  // Find the new pending letter, or the left blank when none remains.
  def.rules.push_back({"resume", 'X', "resume", 'X', 'L'});
  for (char y : kLetters) def.rules.push_back({"resume", y, scan_state(y), y, 'R'});
  def.rules.push_back({"resume", '_', "scan", '_', 'R'});

  return MachineSpec(std::move(def));
}

TwoTapeSpec build_twotape_linear() {
  TwoTapeDef def;
  def.states = {"init", "read"};
  for (char x : kLetters) def.states.push_back(push_state(x));
  def.states.push_back("acc");
  def.states.push_back("rej");
  def.start = "init";
  def.accept = "acc";
  def.reject = "rej";
  def.blank = '_';
  def.tape_alphabet = "abAB_";

  // Head 2 rests on the stack top; cell 0 blank means empty stack.
  for (char s : std::string("abAB_")) def.rules.push_back({"init", s, '_', "read", s, '_', 'S', 'L'});

  for (char x : kLetters) {
    for (char t : std::string("abAB_")) {
      if (t == inverse_letter(x)) {
        def.rules.push_back({"read", x, t, "read", x, '_', 'R', 'L'});  // pop
      } else {
        def.rules.push_back({"read", x, t, push_state(x), x, t, 'S', 'R'});
      }
    }
  }
  for (char x : kLetters) def.rules.push_back({push_state(x), x, '_', "read", x, x, 'R', 'S'});

  def.rules.push_back({"read", '_', '_', "acc", '_', '_', 'S', 'S'});
  for (char t : kLetters) def.rules.push_back({"read", '_', t, "rej", '_', t, 'S', 'S'});

  return TwoTapeSpec(std::move(def));
}

const std::vector<CatalogEntry>& machine_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"always_accept", MachineKind::OneTape, Correctness::IncorrectByDesign, 0.0,
       build_always_accept().state_count()},
      {"parity_cheat", MachineKind::OneTape, Correctness::IncorrectByDesign, 1.0,
       build_parity_cheat().state_count()},
      {"quad_cancel", MachineKind::OneTape, Correctness::Correct, 2.0,
       build_quad_cancel().state_count()},
      {"twotape_linear", MachineKind::TwoTape, Correctness::Correct, 1.0,
       build_twotape_linear().state_count()},
  };
  return catalog;
}

const CatalogEntry* catalog_entry(std::string_view name) {
  for (const auto& e : machine_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::optional<MachineSpec> builtin_machine(std::string_view name) {
  if (name == "always_accept") return build_always_accept();
  if (name == "parity_cheat") return build_parity_cheat();
  if (name == "quad_cancel") return build_quad_cancel();
  return std::nullopt;
}

std::optional<TwoTapeSpec> builtin_two_tape(std::string_view name) {
  if (name == "twotape_linear") return build_twotape_linear();
  return std::nullopt;
}

}  // namespace f2wp
