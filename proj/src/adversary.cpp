#include "f2wp/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <stdexcept>

#include "f2wp/batch.hpp"
#include "f2wp/machine_io.hpp"

namespace f2wp {

std::string_view to_string(AdversaryMode m) {
  return m == AdversaryMode::Guaranteed ? "guaranteed" : "empirical";
}

std::string_view to_string(AdversaryOutcome o) {
  switch (o) {
    case AdversaryOutcome::Refuted: return "Refuted";
    case AdversaryOutcome::BudgetExceeded: return "BudgetExceeded";
    case AdversaryOutcome::NoCollisionFound: return "NoCollisionFound";
    case AdversaryOutcome::GuaranteeInfeasible: return "GuaranteeInfeasible";
  }
  return "?";
}

double epsilon_bound_log2(int states, double log2_alpha, double crossing_constant) {
  if (states < 2) throw std::domain_error("epsilon bound needs K >= 2");
  if (!(log2_alpha > 0)) throw std::domain_error("epsilon bound needs alpha > 1");
  if (!(crossing_constant > 0)) throw std::domain_error("epsilon bound needs C > 0");
  return log2_alpha / (crossing_constant * std::log2(static_cast<double>(states)));
}

double epsilon_bound(int states, double alpha, double crossing_constant) {
  if (!(alpha > 1)) throw std::domain_error("epsilon bound needs alpha > 1");
  return epsilon_bound_log2(states, std::log2(alpha), crossing_constant);
}

std::optional<int> min_guarantee_n_log2(int states, double epsilon, double log2_alpha,
                                        double crossing_constant, int horizon) {
  if (!(epsilon > 0) || epsilon >= epsilon_bound_log2(states, log2_alpha, crossing_constant)) {
    throw std::domain_error("epsilon must lie in (0, log(alpha)/(C log K))");
  }
  const double log2_k = std::log2(static_cast<double>(states));
  // m K^(C eps m) < alpha^m  <=>  log2(m) + C eps m log2(K) < m log2(alpha)
  int last_fail = 0;
  for (int m = 1; m <= horizon; ++m) {
    const double lhs = std::log2(static_cast<double>(m)) +
                       crossing_constant * epsilon * m * log2_k;
    if (!(lhs < m * log2_alpha)) last_fail = m;
  }
  if (last_fail >= horizon) return std::nullopt;
  int n = ((last_fail / 4) + 1) * 4;
  if (n < 4) n = 4;
  return n;
}

std::optional<int> min_guarantee_n(int states, double epsilon, double alpha,
                                   double crossing_constant, int horizon) {
  if (!(alpha > 1)) throw std::domain_error("alpha must exceed 1");
  return min_guarantee_n_log2(states, epsilon, std::log2(alpha), crossing_constant, horizon);
}

std::optional<Checkpoint> find_checkpoint(const RunTrace& t, int n, double threshold) {
  if (n < 8 || n % 4 != 0) {
    throw std::out_of_range("checkpoint range needs n >= 8 divisible by 4");
  }
  Checkpoint best{0, std::numeric_limits<std::int64_t>::max()};
  for (std::int64_t c = n / 4; c < n / 2; ++c) {
    const std::int64_t v = t.visits(c);
    if (v < best.visits) best = {c, v};
  }
  if (static_cast<double>(best.visits) <= threshold) return best;
  return std::nullopt;
}

std::optional<CheckpointReport> make_checkpoint_report(const RunTrace& t, std::string word,
                                                       int n, double threshold) {
  auto cp = find_checkpoint(t, n, threshold);
  if (!cp) return std::nullopt;
  CheckpointReport r;
  r.word = std::move(word);
  r.checkpoint = cp->index;
  r.visits_at_c = cp->visits;
  r.sequence = t.crossing_at(cp->index);
  r.side = t.outcome.final_head > cp->index ? Side::Right : Side::Left;
  r.steps = t.outcome.steps;
  return r;
}

namespace {

std::string encode_sequence(const CrossingSequence& seq) {
  std::string out;
  for (const auto& e : seq) {
    out.push_back(e.left_to_right ? 'L' : 'R');
    out += std::to_string(e.state);
    out.push_back(',');
  }
  return out;
}

}  // namespace

CheckpointKey checkpoint_key(const CheckpointReport& r) {
  return {r.checkpoint, encode_sequence(r.sequence), r.side};
}

std::string build_hybrid(std::string_view w1, std::string_view w2, std::size_t c) {
  if (w1.size() != w2.size()) throw std::out_of_range("hybrid needs equal-length words");
  if (c > w1.size()) throw std::out_of_range("hybrid boundary beyond word length");
  return std::string(w1.substr(0, c)) + std::string(w2.substr(c));
}

namespace {

std::int64_t empirical_budget(const AdversaryConfig& cfg, int n) {
  if (cfg.budget_override) return *cfg.budget_override;
  return 64 * static_cast<std::int64_t>(n) * n + 64;
}

// All in-bucket pairs with distinct reduced prefixes, deterministic order.
// For Left-side buckets the hybrid inherits the prefix donor's run, so the
// suffix elements must be distinct as well; for trivial words that follows
// from prefix distinctness, but it is checked rather than assumed.
void emit_collisions(const std::map<CheckpointKey, std::vector<std::size_t>>& buckets,
                     const std::vector<std::string>& words, NSummary& out) {
  auto suffix_element = [](const std::string& w, std::int64_t c) {
    return free_reduce(std::string_view(w).substr(static_cast<std::size_t>(c)));
  };
  for (const auto& [key, members] : buckets) {
    out.max_bucket = std::max(out.max_bucket, members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::string& w1 = words[members[i]];
        const std::string& w2 = words[members[j]];
        if (prefix_element(w1, key.checkpoint) == prefix_element(w2, key.checkpoint)) continue;
        if (key.side == Side::Left &&
            suffix_element(w1, key.checkpoint) == suffix_element(w2, key.checkpoint)) {
          continue;
        }
        out.collisions.push_back({w1, w2, key.checkpoint});
      }
    }
  }
  out.buckets = buckets.size();
  std::sort(out.collisions.begin(), out.collisions.end(),
            [](const CollisionPair& a, const CollisionPair& b) {
              return std::tie(a.checkpoint, a.word1, a.word2) <
                     std::tie(b.checkpoint, b.word1, b.word2);
            });
}

}  // namespace

NSummary scan_collisions(const MachineSpec& m, int n, const AdversaryConfig& cfg) {
  if (n < 8 || n % 4 != 0) {
    throw std::invalid_argument("collision scan needs n >= 8 divisible by 4");
  }
  NSummary out;
  out.n = n;

  const int quarter = n / 4;
  const bool guaranteed = cfg.mode == AdversaryMode::Guaranteed;
  const bool enumerable = quarter < 63;
  const std::uint64_t limit = std::min(cfg.cap.value_or(UINT64_MAX), cfg.family_budget);

  std::optional<std::uint64_t> cap;
  if (guaranteed) {
    // The counting argument needs the full family; refuse rather than sample.
    if (!enumerable || (std::uint64_t{1} << quarter) > limit) {
      out.guarantee_infeasible = true;
      return out;
    }
  } else if (!enumerable || (std::uint64_t{1} << quarter) > limit) {
    cap = limit;
  }

  const LemmaFamily family = gen_lemma_family(n, cap, cfg.seed);
  out.family_size = family.words.size();
  out.budget = guaranteed
                   ? static_cast<std::int64_t>(std::ceil(cfg.epsilon * n * n))
                   : empirical_budget(cfg, n);

  const std::vector<RunTrace> traces = trace_words(m, family.words, out.budget);

  std::vector<std::size_t> halted;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (traces[i].outcome.verdict != Verdict::BudgetExceeded) halted.push_back(i);
  }
  out.halted = halted.size();
  if (guaranteed && out.halted < out.family_size) {
    out.budget_exceeded = true;  // one slow word voids the whole size
    return out;
  }
  if (halted.empty()) {
    out.budget_exceeded = true;
    return out;
  }

  // Canonical checkpoints drive the majority-side statistics.
  const double threshold =
      guaranteed ? std::ceil(4 * cfg.epsilon * n) : std::numeric_limits<double>::infinity();
  std::vector<std::optional<CheckpointReport>> reports(traces.size());
  std::size_t left = 0, right = 0;
  for (std::size_t i : halted) {
    reports[i] = make_checkpoint_report(traces[i], family.words[i], n, threshold);
    if (reports[i]) (reports[i]->side == Side::Left ? left : right) += 1;
  }
  out.majority_side = right >= left ? Side::Right : Side::Left;
  out.majority_size = std::max(left, right);

  std::map<CheckpointKey, std::vector<std::size_t>> buckets;
  if (guaranteed) {
    for (std::size_t i : halted) {
      if (reports[i] && reports[i]->side == out.majority_side) {
        buckets[checkpoint_key(*reports[i])].push_back(i);
      }
    }
  } else {
    for (std::int64_t c = n / 4; c < n / 2; ++c) {
      for (std::size_t i : halted) {
        CheckpointKey key{c, encode_sequence(traces[i].crossing_at(c)),
                          traces[i].outcome.final_head > c ? Side::Right : Side::Left};
        buckets[std::move(key)].push_back(i);
      }
    }
  }
  emit_collisions(buckets, family.words, out);
  return out;
}

std::vector<CollisionPair> find_collisions(const MachineSpec& m, int n,
                                           const AdversaryConfig& cfg) {
  NSummary s = scan_collisions(m, n, cfg);
  if (s.guarantee_infeasible) {
    throw std::runtime_error("guaranteed mode needs the full family of 2^" +
                             std::to_string(n / 4) + " words, above the configured limit");
  }
  return std::move(s.collisions);
}

namespace {

std::optional<CounterexampleCertificate> try_certify(const MachineSpec& m,
                                                     const std::string& label, int n,
                                                     const CollisionPair& pair,
                                                     std::int64_t budget) {
  const RunTrace t1 = run_traced(m, pair.word1, budget);
  const RunTrace t2 = run_traced(m, pair.word2, budget);
  if (t1.outcome.verdict == Verdict::BudgetExceeded ||
      t2.outcome.verdict == Verdict::BudgetExceeded) {
    return std::nullopt;
  }
  const CrossingSequence& seq = t1.crossing_at(pair.checkpoint);
  if (seq != t2.crossing_at(pair.checkpoint)) return std::nullopt;

  const std::string hybrid =
      build_hybrid(pair.word1, pair.word2, static_cast<std::size_t>(pair.checkpoint));
  const std::string reduced = free_reduce(hybrid);
  if (reduced.empty()) return std::nullopt;

  const RunOutcome hy = run(m, hybrid, t1.outcome.steps + t2.outcome.steps + 1);
  const bool accept_hybrid = hy.verdict == Verdict::Accepted;
  const bool accept_word2 = t2.outcome.verdict == Verdict::Accepted;
  if (!accept_hybrid || !accept_word2) return std::nullopt;

  CounterexampleCertificate cert;
  cert.machine_name = label;
  cert.machine_digest = machine_digest(m.def());
  cert.n = n;
  cert.checkpoint = pair.checkpoint;
  cert.word1 = pair.word1;
  cert.word2 = pair.word2;
  cert.crossing = name_sequence(seq, m);
  cert.side = seq.size() % 2 == 1 ? Side::Right : Side::Left;
  cert.hybrid = hybrid;
  cert.hybrid_reduced = reduced;
  cert.accept_word2 = accept_word2;
  cert.accept_hybrid = accept_hybrid;
  cert.steps_word2 = t2.outcome.steps;
  cert.steps_hybrid = hy.steps;
  return cert;
}

}  // namespace

AdversaryReport run_adversary(const MachineSpec& m, const AdversaryConfig& cfg,
                              const std::string& machine_label) {
  if (cfg.n_min < 8 || cfg.n_min % 4 != 0 || cfg.n_max < cfg.n_min || cfg.n_max % 4 != 0) {
    throw std::invalid_argument("adversary needs 8 <= n_min <= n_max, both divisible by 4");
  }
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");

  AdversaryReport report;
  report.epsilon_cap =
      epsilon_bound_log2(m.state_count(), kLemmaLog2Alpha, cfg.crossing_constant);

  if (cfg.mode == AdversaryMode::Guaranteed && cfg.epsilon >= report.epsilon_cap) {
    report.outcome = AdversaryOutcome::GuaranteeInfeasible;
    report.note = "epsilon " + std::to_string(cfg.epsilon) + " is not below the bound " +
                  std::to_string(report.epsilon_cap) + " for K=" +
                  std::to_string(m.state_count());
    return report;
  }
  if (cfg.epsilon < report.epsilon_cap) {
    report.theoretical_n = min_guarantee_n_log2(m.state_count(), cfg.epsilon, kLemmaLog2Alpha,
                                                cfg.crossing_constant);
  }

  for (int n = cfg.n_min; n <= cfg.n_max; n += 4) {
    NSummary summary = scan_collisions(m, n, cfg);
    const bool infeasible = summary.guarantee_infeasible;
    const std::int64_t budget = summary.budget;
    report.per_n.push_back(std::move(summary));
    if (infeasible) {
      report.outcome = AdversaryOutcome::GuaranteeInfeasible;
      report.note = "family of 2^" + std::to_string(n / 4) +
                    " words exceeds the configured family limit";
      return report;
    }
    for (const CollisionPair& pair : report.per_n.back().collisions) {
      auto cert = try_certify(m, machine_label, n, pair, budget);
      if (!cert) continue;
      if (verify_certificate(m, *cert, 2 * budget + 16).verified()) {
        report.certificate = std::move(cert);
        report.outcome = AdversaryOutcome::Refuted;
        return report;
      }
    }
  }

  std::size_t exceeded = 0;
  for (const auto& s : report.per_n) exceeded += s.budget_exceeded ? 1 : 0;
  report.outcome = 2 * exceeded > report.per_n.size() ? AdversaryOutcome::BudgetExceeded
                                                      : AdversaryOutcome::NoCollisionFound;
  return report;
}

}  // namespace f2wp
