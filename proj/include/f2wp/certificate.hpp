// Self-contained, re-verifiable evidence that a machine accepts a specific
// non-trivial word built by hybrid splicing.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f2wp/simulator.hpp"

namespace f2wp {

enum class Side { Left, Right };

std::string_view to_string(Side s);

// Crossing entry with the state spelled out, so certificates stand alone.
struct NamedCrossing {
  bool left_to_right = true;
  std::string state;

  bool operator==(const NamedCrossing&) const = default;
};

using NamedCrossingSequence = std::vector<NamedCrossing>;

NamedCrossingSequence name_sequence(const CrossingSequence& seq, const MachineSpec& m);

struct CounterexampleCertificate {
  std::string machine_name;
  std::string machine_digest;
  int n = 0;
  std::int64_t checkpoint = 0;
  std::string word1, word2;  // both from the witness family W_n
  NamedCrossingSequence crossing;
  Side side = Side::Right;
  std::string hybrid;          // first c letters of word1 + letters c+1..n of word2
  std::string hybrid_reduced;  // nonempty: the hybrid is not trivial
  bool accept_word2 = false;
  bool accept_hybrid = false;
  std::int64_t steps_word2 = 0;
  std::int64_t steps_hybrid = 0;

  bool operator==(const CounterexampleCertificate&) const = default;
};

// Text form: `key: value` lines in the fixed key order (machine, n,
// checkpoint, word1, word2, crossing, side, hybrid, hybrid_reduced,
// accept_word2, accept_hybrid, steps_word2, steps_hybrid). The machine value
// is `<name> <digest>`; the crossing value is comma-separated LR:state /
// RL:state tokens. Files round-trip byte-identically.
std::string serialize_certificate(const CounterexampleCertificate& cert);
CounterexampleCertificate parse_certificate(std::string_view text);  // throws FormatError

enum class VerifyStatus {
  Verified,
  DigestMismatch,
  FamilyMembership,
  SequenceMismatch,
  HybridMismatch,
  ReductionTrivial,
  AcceptanceMismatch,
  BudgetExceeded,
  NotRefuting,  // all checks pass but accept_hybrid is false
};

std::string_view to_string(VerifyStatus s);

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Verified;
  std::string detail;

  bool verified() const { return status == VerifyStatus::Verified; }
};

// Recomputes everything from scratch: family membership of both source
// words, equality of the crossing sequences at the checkpoint, hybrid
// reconstruction, non-triviality of the hybrid, and the recorded verdicts.
VerifyResult verify_certificate(const MachineSpec& m, const CounterexampleCertificate& cert,
                                std::int64_t budget);

}  // namespace f2wp
