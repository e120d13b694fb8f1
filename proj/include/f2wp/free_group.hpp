// Words over the generators of the free group F2, free reduction, and the
// witness-family generator used by the adversary.
//
// External encoding: one ASCII char per letter, 'a' and 'b' are the
// generators, 'A' and 'B' their inverses. The empty string is the empty word.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f2wp {

inline constexpr std::string_view kGenerators = "abAB";

// log2 of the witness-family growth base. The n=4k construction below yields
// exactly 2^(n/4) words, so the base is 2^(1/4) and its base-2 log is exact.
inline constexpr double kLemmaLog2Alpha = 0.25;
inline constexpr int kLemmaMinN = 4;

double lemma_alpha();  // 2^(1/4)

inline bool is_generator(char c) noexcept {
  return c == 'a' || c == 'b' || c == 'A' || c == 'B';
}

inline char inverse_letter(char c) noexcept {
  // a<->A, b<->B; ASCII case flip.
  return static_cast<char>(c ^ 0x20);
}

bool is_valid_word(std::string_view w) noexcept;

// Throws std::invalid_argument naming the first offending character.
void require_valid_word(std::string_view w);

// Unique reduced form of w: adjacent mutually-inverse pairs deleted until
// none remain. Total; empty result iff w is trivial in F2.
std::string free_reduce(std::string_view w);

bool is_trivial(std::string_view w);

// Group inverse: reversed sequence with every letter inverted.
std::string invert_word(std::string_view w);

// Reduced form of the first t letters. Throws std::out_of_range if t exceeds
// the word length.
std::string prefix_element(std::string_view w, std::size_t t);

// Witness family W_n: for each binary string s of length n/4 (0->a, 1->b),
// pad with 'a' to length n/2 giving v, emit v . invert(v). All words are
// trivial, have length n, and their reduced prefixes of any length
// t in [n/4, n/2) are pairwise distinct.
struct LemmaFamily {
  int n = 0;
  double alpha = 0.0;  // growth base, 2^(1/4) for this construction
  int n0 = kLemmaMinN;
  std::vector<std::string> words;
  std::optional<std::uint64_t> seed;  // set only for capped generation

  bool capped() const { return seed.has_value(); }
};

// Uncapped: all 2^(n/4) words in lexicographic order of s. Capped: `cap`
// distinct prefixes drawn from a seed-keyed pseudorandom permutation, output
// still in lexicographic order. Throws std::invalid_argument unless n >= 4
// and n is divisible by 4; std::out_of_range if cap exceeds 2^(n/4).
LemmaFamily gen_lemma_family(int n, std::optional<std::uint64_t> cap = {},
                             std::uint64_t seed = 0);

// Structural membership test for W_n, no enumeration.
bool family_contains(int n, std::string_view word) noexcept;

struct FamilyReport {
  bool lengths_ok = true;    // every word has length n
  bool trivial_ok = true;    // every word trivial
  bool prefixes_ok = true;   // reduced prefixes distinct for t in [n/4, n/2)
  bool size_ok = true;       // |words| >= alpha^n
  std::string first_violation;  // empty when everything passed

  bool pass() const { return lengths_ok && trivial_ok && prefixes_ok && size_ok; }
};

FamilyReport verify_family(const LemmaFamily& f);

}  // namespace f2wp
