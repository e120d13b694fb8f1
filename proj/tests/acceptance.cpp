// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "f2wp/adversary.hpp"
#include "f2wp/batch.hpp"
#include "f2wp/bench.hpp"
#include "f2wp/certificate.hpp"
#include "f2wp/free_group.hpp"
#include "f2wp/machine_io.hpp"
#include "f2wp/machines.hpp"
#include "f2wp/simulator.hpp"
#include "test_support.hpp"

using namespace f2wp;
using f2wp::testing::all_words_of_length;
using f2wp::testing::bounded;
using f2wp::testing::random_machine;
using f2wp::testing::random_word;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)), start_(clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && violations_++ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }

  void note(const std::string& extra) { notes_ += (notes_.empty() ? "" : ", ") + extra; }

  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

  ~Criterion() {
    const double sec = seconds();
    if (violations_ == 0) {
      std::printf("[PASS] %-28s (%.2fs%s%s)\n", name_.c_str(), sec, notes_.empty() ? "" : "; ",
                  notes_.c_str());
    } else {
      ++g_failures;
      std::printf("[FAIL] %-28s %d violation(s): %s\n", name_.c_str(), violations_,
                  detail_.c_str());
    }
    std::fflush(stdout);
  }

 private:
  using clock = std::chrono::steady_clock;
  std::string name_;
  clock::time_point start_;
  int violations_ = 0;
  std::string detail_, notes_;
};

const std::string kMachinesDir = F2WP_MACHINES_DIR;

// ---------------------------------------------------------------------------

void oracle_equivalence() {
  Criterion crit("oracle-equivalence");
  const MachineSpec quad = build_quad_cancel();
  const TwoTapeSpec two = build_twotape_linear();

  std::size_t total = 0;
  for (int len = 0; len <= 8; ++len) {
    const auto words = all_words_of_length(len);
    total += words.size();
    const std::int64_t budget = 64 * 8 * 8 + 64;
    const auto q = run_words(quad, words, budget);
    const auto t = run_words_two_tape(two, words, budget);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const bool expect = is_trivial(words[i]);
      crit.require((q[i].verdict == Verdict::Accepted) == expect,
                   "quad_cancel disagrees on " + words[i]);
      crit.require((t[i].verdict == Verdict::Accepted) == expect,
                   "twotape_linear disagrees on " + words[i]);
    }
  }
  crit.require(total == 87381, "expected 87381 words of length <= 8, got " +
                                   std::to_string(total));

  std::mt19937_64 rng(20260808);
  std::vector<std::string> randoms;
  randoms.reserve(10000);
  for (int i = 0; i < 10000; ++i) randoms.push_back(random_word(rng, bounded(rng, 201)));
  const std::int64_t budget = 64 * 200 * 200;
  const auto q = run_words(quad, randoms, budget);
  const auto t = run_words_two_tape(two, randoms, budget);
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    const bool expect = is_trivial(randoms[i]);
    crit.require((q[i].verdict == Verdict::Accepted) == expect,
                 "quad_cancel disagrees on random word " + std::to_string(i));
    crit.require((t[i].verdict == Verdict::Accepted) == expect,
                 "twotape_linear disagrees on random word " + std::to_string(i));
  }
  crit.require(crit.seconds() < 60.0, "sweep exceeded 60 s");
  crit.note("87381 exhaustive + 10000 random words, both machines");
}

void quadratic_linear_contrast() {
  Criterion crit("quadratic-linear-contrast");
  const std::vector<int> sizes = {64, 128, 256, 512, 1024};
  const auto quad = run_family(AnyMachine{build_quad_cancel()}, FamilyKind::WorstCase, sizes);
  const auto lin = run_family(AnyMachine{build_twotape_linear()}, FamilyKind::WorstCase, sizes);
  const ExponentFit qfit = fit_exponent(quad);
  const ExponentFit lfit = fit_exponent(lin);
  crit.require(qfit.slope >= 1.8 && qfit.slope <= 2.2,
               "quad slope " + std::to_string(qfit.slope) + " outside [1.8, 2.2]");
  crit.require(qfit.r_squared >= 0.99, "quad r^2 " + std::to_string(qfit.r_squared));
  crit.require(lfit.slope >= 0.9 && lfit.slope <= 1.2,
               "linear slope " + std::to_string(lfit.slope) + " outside [0.9, 1.2]");
  crit.require(lfit.r_squared >= 0.99, "linear r^2 " + std::to_string(lfit.r_squared));
  crit.note("slopes " + std::to_string(qfit.slope) + " / " + std::to_string(lfit.slope));
}

void lemma_family_suite() {
  Criterion crit("lemma-family-suite");
  for (int n = 8; n <= 24; n += 4) {
    const LemmaFamily fam = gen_lemma_family(n);
    crit.require(fam.words.size() == (std::size_t{1} << (n / 4)),
                 "family size wrong at n=" + std::to_string(n));
    for (const auto& w : fam.words) {
      crit.require(static_cast<int>(w.size()) == n, "length wrong in n=" + std::to_string(n));
      crit.require(is_trivial(w), "non-trivial word in n=" + std::to_string(n));
    }
    for (int t = n / 4; t < n / 2; ++t) {
      std::set<std::string> prefixes;
      for (const auto& w : fam.words) prefixes.insert(prefix_element(w, t));
      crit.require(prefixes.size() == fam.words.size(),
                   "prefix collision at n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
  }
}

// Splice lemma and pigeonhole share one corpus of traced runs.
void splice_and_pigeonhole() {
  std::size_t triples = 0, qualifying = 0, pigeon_runs = 0;
  {
    Criterion pigeon("pigeonhole");
    Criterion splice("splice-lemma");
    std::mt19937_64 rng(424242);

    auto check_run = [&pigeon, &pigeon_runs](const RunTrace& t, int n) {
      if (t.outcome.verdict == Verdict::BudgetExceeded) return;
      ++pigeon_runs;
      std::int64_t min_visits = t.visits(n / 4);
      for (std::int64_t c = n / 4; c < n / 2; ++c) min_visits = std::min(min_visits, t.visits(c));
      pigeon.require(min_visits * (n / 4) <= t.outcome.steps + 1,
                     "min visits " + std::to_string(min_visits) + " too large for steps " +
                         std::to_string(t.outcome.steps) + " at n=" + std::to_string(n));
      for (std::int64_t c = t.min_cell() - 1; c <= t.max_cell(); ++c) {
        pigeon.require(static_cast<std::int64_t>(t.crossing_at(c).size()) <= 2 * t.visits(c),
                       "crossing bound broken at boundary " + std::to_string(c));
      }
    };

    auto splice_pair = [&](const MachineSpec& m, const std::string& u, const std::string& v) {
      const int n = static_cast<int>(u.size());
      const RunTrace tu = run_traced(m, u, 100000);
      const RunTrace tv = run_traced(m, v, 100000);
      check_run(tu, n);
      check_run(tv, n);
      const bool both_halt = tu.outcome.verdict != Verdict::BudgetExceeded &&
                             tv.outcome.verdict != Verdict::BudgetExceeded;
      for (std::int64_t c = 1; c < n; ++c) {
        ++triples;
        if (!both_halt || tu.crossing_at(c) != tv.crossing_at(c)) continue;
        ++qualifying;
        const std::int64_t predicted = splice_steps(tu, tv, c);
        const std::string hybrid = build_hybrid(u, v, static_cast<std::size_t>(c));
        const RunTrace th = run_traced(m, hybrid, predicted);
        const RunOutcome& donor =
            tu.crossing_at(c).size() % 2 == 1 ? tv.outcome : tu.outcome;
        splice.require(th.outcome.verdict != Verdict::BudgetExceeded,
                       "hybrid exceeded the predicted step count");
        splice.require(th.outcome.steps == predicted, "hybrid step count differs");
        splice.require(th.outcome.verdict == donor.verdict, "hybrid verdict differs");
        splice.require(th.crossing_at(c) == tu.crossing_at(c), "hybrid crossing differs");
      }
    };

    for (int mtrial = 0; mtrial < 80; ++mtrial) {
      const MachineSpec m = random_machine(rng);
      for (int pair = 0; pair < 2; ++pair) {
        const std::size_t len = 4 * (2 + bounded(rng, 5));  // 8..24, multiples of 4
        splice_pair(m, random_word(rng, len), random_word(rng, len));
      }
    }
    for (const char* name : {"always_accept", "parity_cheat", "quad_cancel"}) {
      const MachineSpec m = *builtin_machine(name);
      const auto fam = gen_lemma_family(12).words;
      for (std::size_t i = 0; i < fam.size(); i += 3) {
        for (std::size_t j = i + 1; j < fam.size(); j += 2) splice_pair(m, fam[i], fam[j]);
      }
    }

    splice.require(triples >= 1000, "only " + std::to_string(triples) + " triples generated");
    splice.note(std::to_string(triples) + " triples, " + std::to_string(qualifying) +
                " with matching crossings");
    pigeon.note(std::to_string(pigeon_runs) + " halting runs checked");
  }
}

void refutation_end_to_end() {
  Criterion crit("refutation-end-to-end");
  AdversaryConfig cfg;
  cfg.mode = AdversaryMode::Empirical;
  cfg.n_max = 32;

  {
    const auto t0 = std::chrono::steady_clock::now();
    const MachineSpec m = build_always_accept();
    const AdversaryReport rep = run_adversary(m, cfg, "always_accept");
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    crit.require(rep.outcome == AdversaryOutcome::Refuted, "always_accept not refuted");
    crit.require(rep.certificate.has_value(), "always_accept certificate missing");
    if (rep.certificate) {
      crit.require(verify_certificate(build_always_accept(), *rep.certificate, 1 << 24).verified(),
                   "always_accept certificate failed re-verification");
    }
    crit.require(sec < 10.0, "always_accept refutation took " + std::to_string(sec) + " s");
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const MachineSpec m = build_parity_cheat();
    const AdversaryReport rep = run_adversary(m, cfg, "parity_cheat");
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    crit.require(rep.outcome == AdversaryOutcome::Refuted, "parity_cheat not refuted");
    crit.require(sec < 10.0, "parity_cheat refutation took " + std::to_string(sec) + " s");
    if (rep.certificate) {
      const CounterexampleCertificate& c = *rep.certificate;
      crit.require(c.n == 8, "parity cert n != 8");
      crit.require(c.checkpoint == 2, "parity cert checkpoint != 2");
      crit.require(c.word1 == "aaaaAAAA" && c.word2 == "bbaaAABB", "parity cert pair differs");
      crit.require(c.hybrid == "aaaaAABB", "parity cert hybrid differs");
      crit.require(c.hybrid_reduced == "aaBB", "parity cert reduction differs");
      crit.require(verify_certificate(build_parity_cheat(), c, 1 << 24).verified(),
                   "parity certificate failed re-verification");
    } else {
      crit.require(false, "parity certificate missing");
    }
  }
}

void soundness() {
  Criterion crit("soundness-correct-machine");
  const MachineSpec quad = build_quad_cancel();

  AdversaryConfig cfg;
  cfg.mode = AdversaryMode::Empirical;
  cfg.n_max = 24;
  const AdversaryReport emp = run_adversary(quad, cfg, "quad_cancel");
  crit.require(emp.outcome != AdversaryOutcome::Refuted, "empirical mode refuted quad_cancel");
  crit.require(!emp.certificate.has_value(), "empirical mode emitted a certificate");

  cfg.mode = AdversaryMode::Guaranteed;
  cfg.epsilon = 0.005;  // below log(alpha)/(8 log 12)
  const AdversaryReport grt = run_adversary(quad, cfg, "quad_cancel");
  crit.require(grt.outcome != AdversaryOutcome::Refuted, "guaranteed mode refuted quad_cancel");
  crit.require(!grt.certificate.has_value(), "guaranteed mode emitted a certificate");
  crit.note("empirical outcome " + std::string(to_string(emp.outcome)) + ", guaranteed " +
            std::string(to_string(grt.outcome)));
}

void threshold_arithmetic() {
  Criterion crit("threshold-arithmetic");
  const double bound = epsilon_bound_log2(2, kLemmaLog2Alpha, 4.0);
  crit.require(bound == 0.0625, "epsilon bound is " + std::to_string(bound) + ", want 0.0625");
  const double via_alpha = epsilon_bound(2, lemma_alpha(), 4.0);
  crit.require(std::abs(via_alpha - 0.0625) < 1e-12,
               "alpha-valued bound drifted: " + std::to_string(via_alpha));

  const auto n = min_guarantee_n_log2(2, 1.0 / 32, kLemmaLog2Alpha, 4.0);
  crit.require(n.has_value() && *n == 44,
               "min_guarantee_n is " + std::to_string(n.value_or(-1)) + ", want 44");
  const auto n_alpha = min_guarantee_n(2, 1.0 / 32, lemma_alpha(), 4.0);
  crit.require(n_alpha.has_value() && *n_alpha == 44, "alpha-valued min_guarantee_n differs");
}

void round_trips() {
  Criterion crit("format-round-trips");
  const char* files[] = {"always_accept.tm", "parity_cheat.tm", "quad_cancel.tm",
                         "twotape_linear.tm"};
  for (const char* f : files) {
    const std::string bytes = read_text_file(kMachinesDir + "/" + std::string(f));
    if (is_two_tape_text(bytes)) {
      crit.require(serialize_two_tape(parse_two_tape_def(bytes)) == bytes,
                   std::string(f) + " does not round-trip");
      crit.require(parse_two_tape(bytes) == build_twotape_linear(),
                   std::string(f) + " differs from its builder");
    } else {
      crit.require(serialize_machine(parse_machine_def(bytes)) == bytes,
                   std::string(f) + " does not round-trip");
    }
  }
  crit.require(parse_machine(read_text_file(kMachinesDir + "/always_accept.tm")) ==
                   build_always_accept(),
               "always_accept.tm differs from its builder");
  crit.require(parse_machine(read_text_file(kMachinesDir + "/parity_cheat.tm")) ==
                   build_parity_cheat(),
               "parity_cheat.tm differs from its builder");
  crit.require(parse_machine(read_text_file(kMachinesDir + "/quad_cancel.tm")) ==
                   build_quad_cancel(),
               "quad_cancel.tm differs from its builder");

  AdversaryConfig cfg;
  cfg.mode = AdversaryMode::Empirical;
  const AdversaryReport rep = run_adversary(build_parity_cheat(), cfg, "parity_cheat");
  crit.require(rep.certificate.has_value(), "no demo certificate to round-trip");
  if (rep.certificate) {
    const std::string text = serialize_certificate(*rep.certificate);
    crit.require(parse_certificate(text) == *rep.certificate, "certificate fields drift");
    crit.require(serialize_certificate(parse_certificate(text)) == text,
                 "certificate text drifts");
  }
}

}  // namespace

int main() {
  oracle_equivalence();
  quadratic_linear_contrast();
  lemma_family_suite();
  splice_and_pigeonhole();
  refutation_end_to_end();
  soundness();
  threshold_arithmetic();
  round_trips();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
