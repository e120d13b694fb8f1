#include <random>

#include "doctest.h"
#include "f2wp/batch.hpp"
#include "f2wp/free_group.hpp"
#include "f2wp/machines.hpp"
#include "test_support.hpp"

using namespace f2wp;
using f2wp::testing::bounded;
using f2wp::testing::random_word;

// The OpenMP kernels must match the serial reference element for element.
TEST_CASE("parallel run_words equals the serial reference") {
  const MachineSpec q = build_quad_cancel();
  std::mt19937_64 rng(8);
  std::vector<std::string> words;
  for (int i = 0; i < 500; ++i) words.push_back(random_word(rng, bounded(rng, 64)));
  for (const auto& w : gen_lemma_family(16).words) words.push_back(w);

  const auto serial = run_words_serial(q, words, 64 * 64 * 64);
  const auto parallel = run_words(q, words, 64 * 64 * 64);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("parallel trace_words equals the serial reference") {
  const MachineSpec p = build_parity_cheat();
  const auto words = gen_lemma_family(20).words;
  const auto serial = trace_words_serial(p, words, 10000);
  const auto parallel = trace_words(p, words, 10000);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("repeated parallel runs are deterministic") {
  const MachineSpec q = build_quad_cancel();
  const auto words = gen_lemma_family(16).words;
  const auto a = trace_words(q, words, 1 << 16);
  const auto b = trace_words(q, words, 1 << 16);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
