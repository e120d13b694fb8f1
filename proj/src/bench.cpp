#include "f2wp/bench.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "f2wp/free_group.hpp"

namespace f2wp {

std::optional<FamilyKind> family_kind_from(std::string_view name) {
  if (name == "worstcase") return FamilyKind::WorstCase;
  if (name == "lemma-random") return FamilyKind::LemmaRandom;
  if (name == "random") return FamilyKind::Random;
  return std::nullopt;
}

std::string family_word(FamilyKind kind, int n, std::uint64_t seed) {
  if (n < 0) throw std::out_of_range("word length must be nonnegative");
  switch (kind) {
    case FamilyKind::WorstCase: {
      if (n % 2 != 0) throw std::out_of_range("worstcase family needs even n");
      return std::string(n / 2, 'a') + std::string(n / 2, 'A');
    }
    case FamilyKind::LemmaRandom: {
      LemmaFamily f = gen_lemma_family(n, std::uint64_t{1}, seed);
      return f.words.front();
    }
    case FamilyKind::Random: {
      std::mt19937_64 rng(seed);
      std::string w(static_cast<std::size_t>(n), 'a');
      const std::uint64_t cut = UINT64_MAX - UINT64_MAX % 4;
      for (char& c : w) {
        std::uint64_t r;
        do { r = rng(); } while (r >= cut);
        c = kGenerators[r % 4];
      }
      return w;
    }
  }
  throw std::out_of_range("unknown family kind");
}

std::vector<BenchSample> run_family(const AnyMachine& m, FamilyKind kind,
                                    const std::vector<int>& sizes, std::uint64_t seed,
                                    std::optional<std::int64_t> budget) {
  if (sizes.empty()) throw std::invalid_argument("need at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be strictly increasing");
  }
  std::vector<BenchSample> out;
  out.reserve(sizes.size());
  for (int n : sizes) {
    const std::string word = family_word(kind, n, seed);
    const std::int64_t b = budget ? *budget : 64 * static_cast<std::int64_t>(n) * n;
    const RunOutcome r = std::holds_alternative<MachineSpec>(m)
                             ? run(std::get<MachineSpec>(m), word, b)
                             : run_two_tape(std::get<TwoTapeSpec>(m), word, b);
    out.push_back({n, r.steps, r.verdict});
  }
  return out;
}

ExponentFit fit_exponent(const std::vector<BenchSample>& samples) {
  if (samples.size() < 3) throw std::invalid_argument("exponent fit needs at least 3 samples");
  for (const auto& s : samples) {
    if (s.steps < 1) throw std::invalid_argument("exponent fit needs positive step counts");
    if (s.n < 1) throw std::invalid_argument("exponent fit needs positive sizes");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].n == samples[j].n) throw std::invalid_argument("sample sizes must be distinct");
    }
  }

  const double count = static_cast<double>(samples.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::log(static_cast<double>(s.steps));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  ExponentFit fit;
  fit.samples = static_cast<int>(samples.size());
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / count;
  for (const auto& s : samples) {
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::log(static_cast<double>(s.steps));
    const double e = y - (fit.intercept + fit.slope * x);
    ss_res += e * e;
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::string to_csv(const std::vector<BenchSample>& samples,
                   const std::optional<ExponentFit>& fit) {
  std::ostringstream out;
  out << "n,steps,verdict\n";
  for (const auto& s : samples) {
    out << s.n << ',' << s.steps << ',' << to_string(s.verdict) << '\n';
  }
  if (fit) {
    out << "# slope " << fit->slope << '\n';
    out << "# intercept " << fit->intercept << '\n';
    out << "# r_squared " << fit->r_squared << '\n';
    out << "# samples " << fit->samples << '\n';
  }
  return out.str();
}

}  // namespace f2wp
