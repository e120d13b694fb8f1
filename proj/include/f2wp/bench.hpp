// Step-count measurement over input families and growth-exponent estimation.
// Step counts only: machine-independent and deterministic.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "f2wp/simulator.hpp"

namespace f2wp {

enum class FamilyKind { WorstCase, LemmaRandom, Random };

std::optional<FamilyKind> family_kind_from(std::string_view name);  // worstcase/lemma-random/random

// worstcase: a^(n/2) A^(n/2) (n even). lemma-random: a seeded uniform member
// of W_n (n divisible by 4). random: n seeded uniform letters.
std::string family_word(FamilyKind kind, int n, std::uint64_t seed = 0);

struct BenchSample {
  int n = 0;
  std::int64_t steps = 0;
  Verdict verdict = Verdict::Rejected;
};

using AnyMachine = std::variant<MachineSpec, TwoTapeSpec>;

// One sample per size, deterministic given the seed. Budget defaults to
// 64*n^2 per sample; exceeding it is recorded in the verdict, not fatal.
std::vector<BenchSample> run_family(const AnyMachine& m, FamilyKind kind,
                                    const std::vector<int>& sizes, std::uint64_t seed = 0,
                                    std::optional<std::int64_t> budget = {});

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;  // natural-log scale
  double r_squared = 1.0;
  int samples = 0;
};

// Least-squares line through (log n, log steps). Throws std::invalid_argument
// on fewer than 3 samples, duplicate sizes, or nonpositive step counts.
ExponentFit fit_exponent(const std::vector<BenchSample>& samples);

// Header `n,steps,verdict`, one row per sample, fit appended as '#' comments.
std::string to_csv(const std::vector<BenchSample>& samples, const std::optional<ExponentFit>& fit);

}  // namespace f2wp
