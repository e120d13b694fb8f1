// Command-line laboratory for the one-tape word problem of F2.
//
// Exit codes: 0 success/accepted/verified, 1 rejected or no refutation,
// 2 budget exceeded, 3 usage or input error, 4 refutation certificate
// produced.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "f2wp/adversary.hpp"
#include "f2wp/batch.hpp"
#include "f2wp/bench.hpp"
#include "f2wp/certificate.hpp"
#include "f2wp/free_group.hpp"
#include "f2wp/machine_io.hpp"
#include "f2wp/machines.hpp"

namespace {

using namespace f2wp;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;
constexpr int kExitRefuted = 4;

struct LoadedMachine {
  std::optional<MachineSpec> one_tape;
  std::optional<TwoTapeSpec> two_tape;
  std::string label;
};

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  if (auto dot = name.rfind(".tm"); dot != std::string::npos && dot == name.size() - 3) {
    name.resize(dot);
  }
  return name;
}

LoadedMachine load_machine(const std::string& file, const std::string& builtin) {
  LoadedMachine out;
  if (!builtin.empty()) {
    out.label = builtin;
    if (auto m = builtin_machine(builtin)) {
      out.one_tape = std::move(m);
    } else if (auto t = builtin_two_tape(builtin)) {
      out.two_tape = std::move(t);
    } else {
      throw CLI::ValidationError("--builtin", "unknown builtin '" + builtin + "'");
    }
    if (const CatalogEntry* e = catalog_entry(builtin);
        e && e->correctness == Correctness::IncorrectByDesign) {
      std::cerr << "note: " << builtin << " is incorrect by design\n";
    }
    return out;
  }
  const std::string text = read_text_file(file);
  out.label = basename_of(file);
  if (is_two_tape_text(text)) {
    out.two_tape = parse_two_tape(text);
  } else {
    out.one_tape = parse_machine(text);
  }
  return out;
}

std::int64_t default_budget(std::size_t n) {
  return 64 * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n) + 64;
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return kExitAccepted;
    case Verdict::Rejected: return kExitRejected;
    case Verdict::BudgetExceeded: return kExitBudget;
  }
  return kExitUsage;
}

std::string crossing_tokens(const NamedCrossingSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += seq[i].left_to_right ? "LR:" : "RL:";
    out += seq[i].state;
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_reduce(const std::string& word) {
  const std::string reduced = free_reduce(word);
  std::cout << reduced << '\n' << (reduced.empty() ? "trivial" : "non-trivial") << '\n';
  return kExitAccepted;
}

int cmd_genwords(int n, std::optional<std::uint64_t> cap, std::uint64_t seed) {
  const LemmaFamily fam = gen_lemma_family(n, cap, seed);
  for (const auto& w : fam.words) std::cout << w << '\n';
  return kExitAccepted;
}

int cmd_run(const LoadedMachine& m, const std::string& input, std::optional<std::int64_t> budget,
            bool trace, std::optional<std::int64_t> boundary) {
  const std::int64_t b = budget.value_or(default_budget(input.size()));
  if (m.two_tape) {
    if (trace || boundary) {
      std::cerr << "error: --trace applies to one-tape machines only\n";
      return kExitUsage;
    }
    const RunOutcome r = run_two_tape(*m.two_tape, input, b);
    std::cout << to_string(r.verdict) << '\n'
              << "steps: " << r.steps << '\n'
              << "final_head: " << r.final_head << '\n';
    return exit_code_for(r.verdict);
  }
  if (!trace && !boundary) {
    const RunOutcome r = run(*m.one_tape, input, b);
    std::cout << to_string(r.verdict) << '\n'
              << "steps: " << r.steps << '\n'
              << "final_head: " << r.final_head << '\n';
    return exit_code_for(r.verdict);
  }
  const RunTrace t = run_traced(*m.one_tape, input, b);
  std::cout << to_string(t.outcome.verdict) << '\n'
            << "steps: " << t.outcome.steps << '\n'
            << "final_head: " << t.outcome.final_head << '\n'
            << "cells: [" << t.min_cell() << ", " << t.max_cell() << "]\n";
  if (boundary) {
    std::cout << "visits[" << *boundary << "]: " << t.visits(*boundary) << '\n';
    std::cout << "crossing[" << *boundary
              << "]: " << crossing_tokens(name_sequence(t.crossing_at(*boundary), *m.one_tape))
              << '\n';
  } else {
    for (std::int64_t c = t.min_cell(); c < t.max_cell(); ++c) {
      const auto& seq = t.crossing_at(c);
      if (!seq.empty()) {
        std::cout << "crossing[" << c << "]: " << crossing_tokens(name_sequence(seq, *m.one_tape))
                  << '\n';
      }
    }
  }
  return exit_code_for(t.outcome.verdict);
}

int cmd_adversary(const LoadedMachine& m, const AdversaryConfig& cfg,
                  const std::string& cert_out) {
  if (!m.one_tape) {
    std::cerr << "error: the adversary applies to one-tape machines only\n";
    return kExitUsage;
  }
  const MachineSpec& machine = *m.one_tape;
  std::cout << "machine: " << m.label << " (K=" << machine.state_count() << ", strict alphabet: "
            << (machine.strict_alphabet() ? "yes" : "no") << ")\n";
  std::cout << "mode: " << to_string(cfg.mode) << ", epsilon: " << cfg.epsilon
            << ", C: " << cfg.crossing_constant << '\n';

  const AdversaryReport rep = run_adversary(machine, cfg, m.label);
  std::cout << "epsilon bound for this machine: " << rep.epsilon_cap << '\n';
  if (rep.theoretical_n) {
    std::cout << "counting guarantee kicks in at n = " << *rep.theoretical_n << '\n';
  }
  for (const auto& s : rep.per_n) {
    std::cout << "n=" << s.n << ": family " << s.family_size << ", budget " << s.budget
              << ", halted " << s.halted << ", majority " << to_string(s.majority_side) << ' '
              << s.majority_size << '/' << s.family_size << ", buckets " << s.buckets
              << ", max bucket " << s.max_bucket << ", collisions " << s.collisions.size();
    if (s.budget_exceeded) std::cout << " [budget exceeded]";
    if (s.guarantee_infeasible) std::cout << " [family too large]";
    std::cout << '\n';
  }
  if (!rep.note.empty()) std::cout << "note: " << rep.note << '\n';
  std::cout << "outcome: " << to_string(rep.outcome) << '\n';

  if (rep.certificate) {
    const CounterexampleCertificate& cert = *rep.certificate;
    std::cout << "refuted at n=" << cert.n << ": accepts " << cert.hybrid << " which reduces to "
              << cert.hybrid_reduced << " (spliced from " << cert.word1 << " and " << cert.word2
              << " at c=" << cert.checkpoint << ")\n";
    if (!cert_out.empty()) {
      std::ofstream out(cert_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << cert_out << '\n';
        return kExitUsage;
      }
      out << serialize_certificate(cert);
      std::cout << "certificate written to " << cert_out << '\n';
    }
  }

  switch (rep.outcome) {
    case AdversaryOutcome::Refuted: return kExitRefuted;
    case AdversaryOutcome::BudgetExceeded: return kExitBudget;
    case AdversaryOutcome::NoCollisionFound: return kExitRejected;
    case AdversaryOutcome::GuaranteeInfeasible: return kExitRejected;
  }
  return kExitUsage;
}

int cmd_bench(const LoadedMachine& m, FamilyKind kind, const std::vector<int>& sizes,
              std::uint64_t seed, std::optional<std::int64_t> budget) {
  const AnyMachine machine = m.one_tape ? AnyMachine{*m.one_tape} : AnyMachine{*m.two_tape};
  const auto samples = run_family(machine, kind, sizes, seed, budget);
  std::vector<BenchSample> halting;
  for (const auto& s : samples) {
    if (s.verdict != Verdict::BudgetExceeded && s.steps >= 1) halting.push_back(s);
  }
  std::optional<ExponentFit> fit;
  if (halting.size() >= 3) fit = fit_exponent(halting);
  std::cout << to_csv(samples, fit);
  return kExitAccepted;
}

int cmd_threshold(int states, double epsilon, std::optional<double> alpha, double constant,
                  int horizon) {
  const double bound = alpha ? epsilon_bound(states, *alpha, constant)
                             : epsilon_bound_log2(states, kLemmaLog2Alpha, constant);
  std::cerr << "epsilon bound: " << bound << '\n';
  const auto n = alpha ? min_guarantee_n(states, epsilon, *alpha, constant, horizon)
                       : min_guarantee_n_log2(states, epsilon, kLemmaLog2Alpha, constant, horizon);
  if (!n) {
    std::cerr << "no guarantee below the horizon " << horizon << '\n';
    return kExitRejected;
  }
  std::cout << *n << '\n';
  return kExitAccepted;
}

int cmd_verify(const std::string& cert_file, const std::string& machine_file,
               const std::string& builtin, std::int64_t budget) {
  const CounterexampleCertificate cert = parse_certificate(read_text_file(cert_file));
  LoadedMachine m;
  if (!machine_file.empty() || !builtin.empty()) {
    m = load_machine(machine_file, builtin);
  } else {
    m = load_machine("", cert.machine_name);  // fall back to the catalog by name
  }
  if (!m.one_tape) {
    std::cerr << "error: certificates apply to one-tape machines\n";
    return kExitUsage;
  }
  const VerifyResult r = verify_certificate(*m.one_tape, cert, budget);
  std::cout << to_string(r.status);
  if (!r.detail.empty()) std::cout << ": " << r.detail;
  std::cout << '\n';
  return r.verified() ? kExitAccepted : kExitRejected;
}

int cmd_dump(const std::string& builtin) {
  if (auto m = builtin_machine(builtin)) {
    std::cout << serialize_machine(m->def());
    return kExitAccepted;
  }
  if (auto t = builtin_two_tape(builtin)) {
    std::cout << serialize_two_tape(t->def());
    return kExitAccepted;
  }
  throw CLI::ValidationError("--builtin", "unknown builtin '" + builtin + "'");
}

void add_machine_flags(CLI::App* cmd, std::string& file, std::string& builtin) {
  auto* f = cmd->add_option("--machine", file, "machine description file");
  auto* b = cmd->add_option("--builtin", builtin,
                            "bundled machine (always_accept, parity_cheat, quad_cancel, "
                            "twotape_linear)");
  f->excludes(b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-problem laboratory for the free group on two generators"};
  app.require_subcommand(1);

  // reduce
  std::string word;
  auto* reduce = app.add_subcommand("reduce", "freely reduce a word and report triviality");
  reduce->add_option("word", word, "word over {a,b,A,B}")->required();

  // genwords
  int gen_n = 8;
  std::optional<std::uint64_t> gen_cap;
  std::uint64_t gen_seed = 0;
  auto* genwords = app.add_subcommand("genwords", "emit the witness family W_n");
  genwords->add_option("--n", gen_n, "word length, divisible by 4")->required();
  genwords->add_option("--cap", gen_cap, "emit only this many words");
  genwords->add_option("--seed", gen_seed, "seed for capped selection");

  // run
  std::string run_file, run_builtin, run_input;
  std::optional<std::int64_t> run_budget;
  bool run_trace = false;
  std::optional<std::int64_t> run_boundary;
  auto* runc = app.add_subcommand("run", "run a machine on a word");
  add_machine_flags(runc, run_file, run_builtin);
  runc->add_option("--input", run_input, "input word (may be empty)");
  runc->add_option("--budget", run_budget, "step budget (default 64*n^2+64)");
  runc->add_flag("--trace", run_trace, "print crossing instrumentation");
  runc->add_option("--boundary", run_boundary, "report the crossing sequence at this boundary");

  // adversary
  std::string adv_file, adv_builtin, adv_mode = "empirical", adv_cert;
  AdversaryConfig adv_cfg;
  auto* adv = app.add_subcommand("adversary", "hunt for an accepted non-trivial word");
  add_machine_flags(adv, adv_file, adv_builtin);
  adv->add_option("--mode", adv_mode, "empirical or guaranteed")
      ->check(CLI::IsMember({"empirical", "guaranteed"}));
  adv->add_option("--epsilon", adv_cfg.epsilon, "time-bound coefficient in eps*n^2");
  adv->add_option("--nmin", adv_cfg.n_min, "smallest n (divisible by 4)");
  adv->add_option("--nmax", adv_cfg.n_max, "largest n (divisible by 4)");
  adv->add_option("--seed", adv_cfg.seed, "seed for capped families");
  adv->add_option("--cap", adv_cfg.cap, "cap per-n family size");
  adv->add_option("--constant", adv_cfg.crossing_constant,
                  "crossing-length constant C (8 counts crossings exactly, 4 "
                  "identifies crossings with visits)");
  adv->add_option("--budget", adv_cfg.budget_override, "override the empirical step budget");
  adv->add_option("--cert-out", adv_cert, "write the certificate to this file");

  // bench
  std::string bench_file, bench_builtin, bench_family = "worstcase";
  std::vector<int> bench_sizes = {64, 128, 256, 512, 1024};
  std::uint64_t bench_seed = 0;
  std::optional<std::int64_t> bench_budget;
  auto* bench = app.add_subcommand("bench", "step counts over an input family, with a fit");
  add_machine_flags(bench, bench_file, bench_builtin);
  bench->add_option("--family", bench_family, "worstcase, lemma-random, or random")
      ->check(CLI::IsMember({"worstcase", "lemma-random", "random"}));
  bench->add_option("--sizes", bench_sizes, "input sizes, strictly increasing")->delimiter(',');
  bench->add_option("--seed", bench_seed, "seed for randomized families");
  bench->add_option("--budget", bench_budget, "step budget per sample (default 64*n^2)");

  // threshold
  int th_states = 2;
  double th_eps = 1.0 / 32;
  std::optional<double> th_alpha;
  double th_constant = 8.0;
  int th_horizon = 1 << 16;
  auto* th = app.add_subcommand("threshold", "minimal n where the counting argument bites");
  th->add_option("--states", th_states, "state count K")->required();
  th->add_option("--epsilon", th_eps, "time-bound coefficient")->required();
  th->add_option("--alpha", th_alpha, "family growth base (default 2^(1/4))");
  th->add_option("--constant", th_constant, "crossing-length constant C");
  th->add_option("--horizon", th_horizon, "verification horizon");

  // verify
  std::string ver_cert, ver_file, ver_builtin;
  std::int64_t ver_budget = std::int64_t{1} << 24;
  auto* ver = app.add_subcommand("verify", "re-check a certificate from scratch");
  ver->add_option("--cert", ver_cert, "certificate file")->required();
  add_machine_flags(ver, ver_file, ver_builtin);
  ver->add_option("--budget", ver_budget, "verification step budget");

  // dump
  std::string dump_builtin;
  auto* dump = app.add_subcommand("dump", "print a bundled machine in the file format");
  dump->add_option("--builtin", dump_builtin, "machine name")->required();

  try {
    app.parse(argc, argv);

    if (*reduce) return cmd_reduce(word);
    if (*genwords) return cmd_genwords(gen_n, gen_cap, gen_seed);
    if (*runc) {
      if (run_file.empty() && run_builtin.empty()) {
        throw CLI::RequiredError("--machine or --builtin");
      }
      return cmd_run(load_machine(run_file, run_builtin), run_input, run_budget, run_trace,
                     run_boundary);
    }
    if (*adv) {
      if (adv_file.empty() && adv_builtin.empty()) {
        throw CLI::RequiredError("--machine or --builtin");
      }
      adv_cfg.mode =
          adv_mode == "guaranteed" ? AdversaryMode::Guaranteed : AdversaryMode::Empirical;
      return cmd_adversary(load_machine(adv_file, adv_builtin), adv_cfg, adv_cert);
    }
    if (*bench) {
      if (bench_file.empty() && bench_builtin.empty()) {
        throw CLI::RequiredError("--machine or --builtin");
      }
      return cmd_bench(load_machine(bench_file, bench_builtin), *family_kind_from(bench_family),
                       bench_sizes, bench_seed, bench_budget);
    }
    if (*th) return cmd_threshold(th_states, th_eps, th_alpha, th_constant, th_horizon);
    if (*ver) return cmd_verify(ver_cert, ver_file, ver_builtin, ver_budget);
    if (*dump) return cmd_dump(dump_builtin);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
