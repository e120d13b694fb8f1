#include "f2wp/certificate.hpp"

#include <sstream>

#include "f2wp/free_group.hpp"
#include "f2wp/machine_io.hpp"

namespace f2wp {

std::string_view to_string(Side s) { return s == Side::Left ? "Left" : "Right"; }

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "Verified";
    case VerifyStatus::DigestMismatch: return "digest mismatch";
    case VerifyStatus::FamilyMembership: return "family membership violated";
    case VerifyStatus::SequenceMismatch: return "crossing sequence mismatch";
    case VerifyStatus::HybridMismatch: return "hybrid reconstruction mismatch";
    case VerifyStatus::ReductionTrivial: return "hybrid reduces to the empty word";
    case VerifyStatus::AcceptanceMismatch: return "acceptance mismatch";
    case VerifyStatus::BudgetExceeded: return "budget exceeded";
    case VerifyStatus::NotRefuting: return "consistent but not refuting";
  }
  return "?";
}

NamedCrossingSequence name_sequence(const CrossingSequence& seq, const MachineSpec& m) {
  NamedCrossingSequence out;
  out.reserve(seq.size());
  for (const auto& e : seq) out.push_back({e.left_to_right, m.state_name(e.state)});
  return out;
}

namespace {

std::string crossing_value(const NamedCrossingSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += seq[i].left_to_right ? "LR:" : "RL:";
    out += seq[i].state;
  }
  return out;
}

NamedCrossingSequence parse_crossing_value(std::string_view value) {
  NamedCrossingSequence seq;
  if (value.empty()) return seq;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    std::size_t comma = value.find(',', pos);
    std::string_view tok = value.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok.size() < 4 || tok[2] != ':' || (!tok.starts_with("LR") && !tok.starts_with("RL"))) {
      throw FormatError("bad crossing token '" + std::string(tok) + "'");
    }
    seq.push_back({tok[0] == 'L', std::string(tok.substr(3))});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return seq;
}

constexpr const char* kCertKeys[] = {
    "machine", "n",      "checkpoint",     "word1",        "word2",
    "crossing", "side",  "hybrid",         "hybrid_reduced", "accept_word2",
    "accept_hybrid", "steps_word2", "steps_hybrid",
};

std::string bool_value(bool b) { return b ? "true" : "false"; }

bool parse_bool(std::string_view v, const char* key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw FormatError(std::string("bad boolean for ") + key);
}

std::int64_t parse_int(std::string_view v, const char* key) {
  try {
    std::size_t used = 0;
    std::int64_t out = std::stoll(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    throw FormatError(std::string("bad integer for ") + key);
  }
}

}  // namespace

std::string serialize_certificate(const CounterexampleCertificate& cert) {
  std::ostringstream out;
  auto line = [&out](const char* key, const std::string& value) {
    out << key << ':';
    if (!value.empty()) out << ' ' << value;
    out << '\n';
  };
  line("machine", cert.machine_name + " " + cert.machine_digest);
  line("n", std::to_string(cert.n));
  line("checkpoint", std::to_string(cert.checkpoint));
  line("word1", cert.word1);
  line("word2", cert.word2);
  line("crossing", crossing_value(cert.crossing));
  line("side", std::string(to_string(cert.side)));
  line("hybrid", cert.hybrid);
  line("hybrid_reduced", cert.hybrid_reduced);
  line("accept_word2", bool_value(cert.accept_word2));
  line("accept_hybrid", bool_value(cert.accept_hybrid));
  line("steps_word2", std::to_string(cert.steps_word2));
  line("steps_hybrid", std::to_string(cert.steps_hybrid));
  return out.str();
}

CounterexampleCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, std::string>> fields;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("certificate line lacks a key: " + line);
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    fields.emplace_back(std::move(key), std::move(value));
  }
  constexpr std::size_t kKeyCount = std::size(kCertKeys);
  if (fields.size() != kKeyCount) {
    throw FormatError("certificate must have exactly " + std::to_string(kKeyCount) + " lines");
  }
  for (std::size_t i = 0; i < kKeyCount; ++i) {
    if (fields[i].first != kCertKeys[i]) {
      throw FormatError("expected key '" + std::string(kCertKeys[i]) + "', got '" +
                        fields[i].first + "'");
    }
  }

  CounterexampleCertificate cert;
  {
    std::istringstream ms(fields[0].second);
    if (!(ms >> cert.machine_name >> cert.machine_digest)) {
      throw FormatError("machine line needs '<name> <digest>'");
    }
    std::string extra;
    if (ms >> extra) throw FormatError("machine line has trailing tokens");
  }
  cert.n = static_cast<int>(parse_int(fields[1].second, "n"));
  cert.checkpoint = parse_int(fields[2].second, "checkpoint");
  cert.word1 = fields[3].second;
  cert.word2 = fields[4].second;
  cert.crossing = parse_crossing_value(fields[5].second);
  if (fields[6].second == "Left") {
    cert.side = Side::Left;
  } else if (fields[6].second == "Right") {
    cert.side = Side::Right;
  } else {
    throw FormatError("side must be Left or Right");
  }
  cert.hybrid = fields[7].second;
  cert.hybrid_reduced = fields[8].second;
  cert.accept_word2 = parse_bool(fields[9].second, "accept_word2");
  cert.accept_hybrid = parse_bool(fields[10].second, "accept_hybrid");
  cert.steps_word2 = parse_int(fields[11].second, "steps_word2");
  cert.steps_hybrid = parse_int(fields[12].second, "steps_hybrid");
  return cert;
}

VerifyResult verify_certificate(const MachineSpec& m, const CounterexampleCertificate& cert,
                                std::int64_t budget) {
  const std::string digest = machine_digest(m.def());
  if (digest != cert.machine_digest) {
    return {VerifyStatus::DigestMismatch,
            "certificate digest " + cert.machine_digest + " vs machine " + digest};
  }

  if (!family_contains(cert.n, cert.word1)) {
    return {VerifyStatus::FamilyMembership, "word1 not in W_" + std::to_string(cert.n)};
  }
  if (!family_contains(cert.n, cert.word2)) {
    return {VerifyStatus::FamilyMembership, "word2 not in W_" + std::to_string(cert.n)};
  }
  if (cert.checkpoint < cert.n / 4 || cert.checkpoint >= cert.n / 2) {
    return {VerifyStatus::FamilyMembership,
            "checkpoint " + std::to_string(cert.checkpoint) + " outside [n/4, n/2)"};
  }

  RunTrace t1 = run_traced(m, cert.word1, budget);
  RunTrace t2 = run_traced(m, cert.word2, budget);
  if (t1.outcome.verdict == Verdict::BudgetExceeded ||
      t2.outcome.verdict == Verdict::BudgetExceeded) {
    return {VerifyStatus::BudgetExceeded, "a source run exceeded the verification budget"};
  }
  const NamedCrossingSequence s1 = name_sequence(t1.crossing_at(cert.checkpoint), m);
  const NamedCrossingSequence s2 = name_sequence(t2.crossing_at(cert.checkpoint), m);
  if (s1 != s2) return {VerifyStatus::SequenceMismatch, "source runs disagree at the checkpoint"};
  if (s1 != cert.crossing) {
    return {VerifyStatus::SequenceMismatch, "recorded sequence differs from the recomputed one"};
  }
  const Side side = (s1.size() % 2 == 1) ? Side::Right : Side::Left;
  if (side != cert.side) return {VerifyStatus::SequenceMismatch, "side inconsistent with sequence parity"};

  if (cert.word1.size() != cert.word2.size() ||
      cert.checkpoint > static_cast<std::int64_t>(cert.word1.size())) {
    return {VerifyStatus::HybridMismatch, "word lengths inconsistent with the checkpoint"};
  }
  const std::string hybrid = std::string(cert.word1.substr(0, cert.checkpoint)) +
                             std::string(cert.word2.substr(cert.checkpoint));
  if (hybrid != cert.hybrid) return {VerifyStatus::HybridMismatch, "hybrid is not the recorded splice"};

  const std::string reduced = free_reduce(cert.hybrid);
  if (reduced.empty()) return {VerifyStatus::ReductionTrivial, "hybrid is trivial"};
  if (reduced != cert.hybrid_reduced) {
    return {VerifyStatus::HybridMismatch, "recorded reduction differs from free_reduce(hybrid)"};
  }

  const RunOutcome hybrid_run = run(m, cert.hybrid, budget);
  if (hybrid_run.verdict == Verdict::BudgetExceeded) {
    return {VerifyStatus::BudgetExceeded, "hybrid run exceeded the verification budget"};
  }
  if ((hybrid_run.verdict == Verdict::Accepted) != cert.accept_hybrid ||
      hybrid_run.steps != cert.steps_hybrid) {
    return {VerifyStatus::AcceptanceMismatch, "hybrid verdict or steps differ from the record"};
  }
  if ((t2.outcome.verdict == Verdict::Accepted) != cert.accept_word2 ||
      t2.outcome.steps != cert.steps_word2) {
    return {VerifyStatus::AcceptanceMismatch, "word2 verdict or steps differ from the record"};
  }

  if (!cert.accept_hybrid) return {VerifyStatus::NotRefuting, "machine rejects the hybrid"};
  return {VerifyStatus::Verified, ""};
}

}  // namespace f2wp
