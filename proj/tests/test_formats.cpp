#include <random>

#include "doctest.h"
#include "f2wp/certificate.hpp"
#include "f2wp/machine_io.hpp"
#include "f2wp/machines.hpp"
#include "test_support.hpp"

using namespace f2wp;

namespace {

const std::string kMachinesDir = F2WP_MACHINES_DIR;

}  // namespace

TEST_CASE("parse_machine on a canonical description") {
  const std::string text = serialize_machine(build_always_accept().def());
  const MachineSpec m = parse_machine(text);
  CHECK(m.state_count() == 3);
  CHECK(m == build_always_accept());
}

TEST_CASE("machine text parse errors") {
  const char* good =
      "states: q0 q1 acc rej\n"
      "start: q0\naccept: acc\nreject: rej\nblank: _\n"
      "tape_alphabet: a b A B _\n"
      "delta: q0 a -> q1 a R\n";
  CHECK(parse_machine(good).state_count() == 4);

  CHECK_THROWS_AS(parse_machine(std::string(good) + "delta: q0 a -> q0 a L\n"), ConflictError);
  CHECK_THROWS_AS(parse_machine(std::string(good) + "delta: q0 a -> nowhere a L\n"),
                  ReferenceError);
  CHECK_THROWS_AS(parse_machine(std::string(good) + "start: q1\n"), FormatError);  // repeated
  CHECK_THROWS_AS(parse_machine("states: a b\nstart: a\n"), FormatError);          // missing
  CHECK_THROWS_AS(
      parse_machine("states: q0 acc\nstart: q0\naccept: acc\nreject: acc\nblank: _\n"
                    "tape_alphabet: a b A B _\n"),
      FormatError);  // accept == reject
  CHECK_THROWS_AS(parse_machine(std::string(good) + "bogus: 1\n"), FormatError);
  CHECK_THROWS_AS(parse_machine(std::string(good) + "delta: q0 b -> q1 a\n"), FormatError);
  CHECK_THROWS_AS(parse_machine(std::string(good) + "tapes: 2\n"), FormatError);
}

TEST_CASE("comments and blank lines are ignored") {
  const char* text =
      "# a comment\n"
      "states: q0 acc rej   # trailing comment\n"
      "\n"
      "start: q0\naccept: acc\nreject: rej\nblank: _\n"
      "tape_alphabet: a b A B _\n";
  CHECK(parse_machine(text).state_count() == 3);
}

TEST_CASE("golden machine files parse to the builders and serialize byte-identically") {
  struct Case {
    const char* file;
    std::string text;
  };
  const Case cases[] = {
      {"always_accept.tm", serialize_machine(build_always_accept().def())},
      {"parity_cheat.tm", serialize_machine(build_parity_cheat().def())},
      {"quad_cancel.tm", serialize_machine(build_quad_cancel().def())},
      {"twotape_linear.tm", serialize_two_tape(build_twotape_linear().def())},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const std::string bytes = read_text_file(kMachinesDir + "/" + c.file);
    CHECK(bytes == c.text);
    if (is_two_tape_text(bytes)) {
      CHECK(parse_two_tape(bytes) == build_twotape_linear());
      CHECK(serialize_two_tape(parse_two_tape_def(bytes)) == bytes);
    } else {
      CHECK(serialize_machine(parse_machine_def(bytes)) == bytes);
    }
  }
}

TEST_CASE("random machine defs round-trip through text") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const MachineDef def = f2wp::testing::random_machine(rng).def();
    const std::string text = serialize_machine(def);
    const MachineDef back = parse_machine_def(text);
    CHECK(serialize_machine(back) == text);
    CHECK(MachineSpec(back) == MachineSpec(def));
  }
}

TEST_CASE("machine digests separate different machines") {
  CHECK(machine_digest(build_always_accept().def()) ==
        machine_digest(build_always_accept().def()));
  CHECK(machine_digest(build_always_accept().def()) !=
        machine_digest(build_parity_cheat().def()));
  CHECK(machine_digest(build_always_accept().def()).size() == 16);
}

TEST_CASE("certificates round-trip byte-identically") {
  CounterexampleCertificate cert;
  cert.machine_name = "parity_cheat";
  cert.machine_digest = machine_digest(build_parity_cheat().def());
  cert.n = 8;
  cert.checkpoint = 2;
  cert.word1 = "aaaaAAAA";
  cert.word2 = "bbaaAABB";
  cert.crossing = {{true, "ee"}};
  cert.side = Side::Right;
  cert.hybrid = "aaaaAABB";
  cert.hybrid_reduced = "aaBB";
  cert.accept_word2 = true;
  cert.accept_hybrid = true;
  cert.steps_word2 = 9;
  cert.steps_hybrid = 9;

  const std::string text = serialize_certificate(cert);
  const CounterexampleCertificate back = parse_certificate(text);
  CHECK(back == cert);
  CHECK(serialize_certificate(back) == text);

  SUBCASE("empty crossing sequences round-trip too") {
    cert.crossing.clear();
    cert.side = Side::Left;
    const std::string t2 = serialize_certificate(cert);
    CHECK(parse_certificate(t2) == cert);
    CHECK(serialize_certificate(parse_certificate(t2)) == t2);
  }
  SUBCASE("longer crossing sequences") {
    cert.crossing = {{true, "q1"}, {false, "q2"}, {true, "q1"}};
    const std::string t2 = serialize_certificate(cert);
    CHECK(parse_certificate(t2) == cert);
  }
}

TEST_CASE("certificate parse errors") {
  CHECK_THROWS_AS(parse_certificate("machine: x y\n"), FormatError);  // too few lines
  CounterexampleCertificate cert;
  cert.machine_name = "m";
  cert.machine_digest = "0";
  std::string text = serialize_certificate(cert);
  SUBCASE("wrong key order") {
    auto pos = text.find("word1");
    text.replace(pos, 5, "wordX");
    CHECK_THROWS_AS(parse_certificate(text), FormatError);
  }
  SUBCASE("bad boolean") {
    auto pos = text.find("accept_word2: false");
    text.replace(pos, 19, "accept_word2: maybe");
    CHECK_THROWS_AS(parse_certificate(text), FormatError);
  }
  SUBCASE("bad crossing token") {
    auto pos = text.find("crossing:");
    text.replace(pos, 9, "crossing: XX:q");
    CHECK_THROWS_AS(parse_certificate(text), FormatError);
  }
}
