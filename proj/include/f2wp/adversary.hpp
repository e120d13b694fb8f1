// Refutation engine: runs the crossing-sequence argument against a concrete
// machine. For each size n it traces the witness family, finds low-traffic
// checkpoint boundaries, buckets words by (checkpoint, crossing sequence,
// final side), and splices colliding pairs into hybrid words. A hybrid that
// is non-trivial yet accepted refutes the machine; the certificate is
// re-verified from scratch before it is reported.
//
// Counting thresholds: a family with growth base alpha defeats a machine
// with K states running within eps*n^2 steps once eps < log(alpha)/(C log K).
// With exact crossing accounting |crossings| <= 2*visits the constant is
// C = 8; C = 4 mirrors the bound usually quoted with visits and crossings
// identified.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2wp/certificate.hpp"
#include "f2wp/free_group.hpp"
#include "f2wp/simulator.hpp"

namespace f2wp {

enum class AdversaryMode { Guaranteed, Empirical };
enum class AdversaryOutcome { Refuted, BudgetExceeded, NoCollisionFound, GuaranteeInfeasible };

std::string_view to_string(AdversaryMode m);
std::string_view to_string(AdversaryOutcome o);

struct AdversaryConfig {
  double epsilon = 1.0 / 32;
  AdversaryMode mode = AdversaryMode::Empirical;
  int n_min = 8;
  int n_max = 32;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 0;
  double crossing_constant = 8.0;  // C in eps < log(alpha)/(C log K)
  std::optional<std::int64_t> budget_override;
  std::uint64_t family_budget = std::uint64_t{1} << 20;  // max materialized family
};

// Exclusive upper bound log(alpha)/(C log K) for admissible eps, with the
// growth base passed as log2(alpha) so exactly-known bases lose nothing.
// Throws std::domain_error unless K >= 2, log2_alpha > 0, C > 0.
double epsilon_bound_log2(int states, double log2_alpha, double crossing_constant);
double epsilon_bound(int states, double alpha, double crossing_constant);

// Smallest n divisible by 4 with m*K^(C*eps*m) < alpha^m for every m in
// [n, horizon]; nullopt when no such n exists below the horizon. Throws
// std::domain_error unless eps < epsilon_bound.
std::optional<int> min_guarantee_n_log2(int states, double epsilon, double log2_alpha,
                                        double crossing_constant, int horizon = 1 << 16);
std::optional<int> min_guarantee_n(int states, double epsilon, double alpha,
                                   double crossing_constant, int horizon = 1 << 16);

struct Checkpoint {
  std::int64_t index = 0;
  std::int64_t visits = 0;
};

// Smallest index in [n/4, n/2) minimizing visits; returned only when the
// minimum is <= threshold. Requires a halted run and n >= 8 divisible by 4
// (std::out_of_range otherwise).
std::optional<Checkpoint> find_checkpoint(const RunTrace& t, int n, double threshold);

struct CheckpointReport {
  std::string word;
  std::int64_t checkpoint = 0;
  std::int64_t visits_at_c = 0;
  CrossingSequence sequence;
  Side side = Side::Right;
  std::int64_t steps = 0;
};

std::optional<CheckpointReport> make_checkpoint_report(const RunTrace& t, std::string word,
                                                       int n, double threshold);

// Bucketing key for the collision search: boundary, crossing sequence
// (encoded), final side.
struct CheckpointKey {
  std::int64_t checkpoint = 0;
  std::string sequence;
  Side side = Side::Right;

  auto operator<=>(const CheckpointKey&) const = default;
};

CheckpointKey checkpoint_key(const CheckpointReport& r);

// First c letters of w1 followed by letters c+1..n of w2. Throws
// std::out_of_range on length mismatch or c beyond the length.
std::string build_hybrid(std::string_view w1, std::string_view w2, std::size_t c);

struct CollisionPair {
  std::string word1, word2;
  std::int64_t checkpoint = 0;
};

struct NSummary {
  int n = 0;
  std::size_t family_size = 0;
  std::size_t halted = 0;  // words that halted within the step budget
  std::int64_t budget = 0;
  Side majority_side = Side::Right;
  std::size_t majority_size = 0;
  std::size_t buckets = 0;
  std::size_t max_bucket = 0;
  std::vector<CollisionPair> collisions;
  bool budget_exceeded = false;      // this n could not be analyzed within budget
  bool guarantee_infeasible = false;  // family larger than the configured limit
};

// Collision search at one size. Guaranteed mode enforces the eps*n^2 budget
// and buckets the majority side at each word's canonical checkpoint;
// empirical mode buckets every halting word at every boundary in [n/4, n/2).
// Pairs come out in deterministic order: smallest checkpoint, then
// lexicographic words.
NSummary scan_collisions(const MachineSpec& m, int n, const AdversaryConfig& cfg);

// Spec-facing wrapper: just the pairs.
std::vector<CollisionPair> find_collisions(const MachineSpec& m, int n,
                                           const AdversaryConfig& cfg);

struct AdversaryReport {
  AdversaryOutcome outcome = AdversaryOutcome::NoCollisionFound;
  std::vector<NSummary> per_n;
  std::optional<CounterexampleCertificate> certificate;
  std::optional<int> theoretical_n;  // min_guarantee_n for this machine, when defined
  double epsilon_cap = 0.0;          // epsilon_bound for this machine
  std::string note;
};

// Full pipeline over n in [n_min, n_max] step 4; stops at the first
// certificate that re-verifies. Never runs unbounded: every simulation is
// budgeted.
AdversaryReport run_adversary(const MachineSpec& m, const AdversaryConfig& cfg,
                              const std::string& machine_label = "machine");

}  // namespace f2wp
