#include "f2wp/free_group.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace f2wp {

double lemma_alpha() { return std::exp2(kLemmaLog2Alpha); }

bool is_valid_word(std::string_view w) noexcept {
  return std::all_of(w.begin(), w.end(), is_generator);
}

void require_valid_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_generator(w[i])) {
      throw std::invalid_argument("invalid letter '" + std::string(1, w[i]) +
                                  "' at position " + std::to_string(i) +
                                  "; words use {a,b,A,B}");
    }
  }
}

std::string free_reduce(std::string_view w) {
  require_valid_word(w);
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool is_trivial(std::string_view w) { return free_reduce(w).empty(); }

std::string invert_word(std::string_view w) {
  require_valid_word(w);
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inverse_letter(c);
  return out;
}

std::string prefix_element(std::string_view w, std::size_t t) {
  if (t > w.size()) {
    throw std::out_of_range("prefix length " + std::to_string(t) +
                            " exceeds word length " + std::to_string(w.size()));
  }
  return free_reduce(w.substr(0, t));
}

namespace {

// Uniform draw from [0, n) that does not depend on the standard library's
// distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

std::string word_from_prefix_bits(int n, const std::vector<bool>& bits) {
  const int quarter = n / 4;
  std::string v;
  v.reserve(n / 2);
  for (int i = 0; i < quarter; ++i) v.push_back(bits[i] ? 'b' : 'a');
  v.append(n / 2 - quarter, 'a');
  return v + invert_word(v);
}

std::vector<bool> bits_of_index(int quarter, std::uint64_t idx) {
  std::vector<bool> bits(quarter);
  for (int i = 0; i < quarter; ++i)
    bits[i] = (idx >> (quarter - 1 - i)) & 1u;  // msb first = lexicographic
  return bits;
}

}  // namespace

LemmaFamily gen_lemma_family(int n, std::optional<std::uint64_t> cap,
                             std::uint64_t seed) {
  if (n < kLemmaMinN || n % 4 != 0) {
    throw std::invalid_argument("family size n must be >= 4 and divisible by 4, got " +
                                std::to_string(n));
  }
  const int quarter = n / 4;
  LemmaFamily fam;
  fam.n = n;
  fam.alpha = lemma_alpha();
  fam.n0 = kLemmaMinN;

  const bool enumerable = quarter < 63;
  const std::uint64_t total = enumerable ? (std::uint64_t{1} << quarter) : 0;
  if (cap && enumerable && *cap > total) {
    throw std::out_of_range("cap " + std::to_string(*cap) + " exceeds family size 2^" +
                            std::to_string(quarter));
  }
  if (!cap && !enumerable) {
    throw std::invalid_argument("uncapped family of 2^" + std::to_string(quarter) +
                                " words is not materializable; pass a cap");
  }

  if (!cap) {
    fam.words.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      fam.words.push_back(word_from_prefix_bits(n, bits_of_index(quarter, idx)));
    return fam;
  }

  fam.seed = seed;
  std::mt19937_64 rng(seed);
  if (enumerable && quarter <= 26) {
    // Small index space: Fisher-Yates over all indices, take the first cap.
    std::vector<std::uint64_t> idx(total);
    for (std::uint64_t i = 0; i < total; ++i) idx[i] = i;
    for (std::uint64_t i = total - 1; i > 0; --i)
      std::swap(idx[i], idx[bounded(rng, i + 1)]);
    idx.resize(*cap);
    std::sort(idx.begin(), idx.end());
    fam.words.reserve(*cap);
    for (std::uint64_t v : idx)
      fam.words.push_back(word_from_prefix_bits(n, bits_of_index(quarter, v)));
  } else {
    // Large index space: rejection-sample distinct bit strings.
    std::set<std::vector<bool>> chosen;
    while (chosen.size() < *cap) {
      std::vector<bool> bits(quarter);
      for (int i = 0; i < quarter; ++i) bits[i] = bounded(rng, 2) != 0;
      chosen.insert(std::move(bits));
    }
    for (const auto& bits : chosen) fam.words.push_back(word_from_prefix_bits(n, bits));
  }
  return fam;
}

bool family_contains(int n, std::string_view word) noexcept {
  if (n < kLemmaMinN || n % 4 != 0) return false;
  if (static_cast<int>(word.size()) != n) return false;
  const int quarter = n / 4, half = n / 2;
  for (int i = 0; i < quarter; ++i)
    if (word[i] != 'a' && word[i] != 'b') return false;
  for (int i = quarter; i < half; ++i)
    if (word[i] != 'a') return false;
  for (int i = 0; i < half; ++i)
    if (word[n - 1 - i] != inverse_letter(word[i])) return false;
  return true;
}

FamilyReport verify_family(const LemmaFamily& f) {
  FamilyReport rep;
  auto note = [&rep](std::string msg) {
    if (rep.first_violation.empty()) rep.first_violation = std::move(msg);
  };

  for (std::size_t i = 0; i < f.words.size(); ++i) {
    if (static_cast<int>(f.words[i].size()) != f.n) {
      rep.lengths_ok = false;
      note("word " + std::to_string(i) + " has length " +
           std::to_string(f.words[i].size()) + ", expected " + std::to_string(f.n));
      break;
    }
  }
  for (std::size_t i = 0; rep.lengths_ok && i < f.words.size(); ++i) {
    if (!is_trivial(f.words[i])) {
      rep.trivial_ok = false;
      note("word " + std::to_string(i) + " (" + f.words[i] + ") is not trivial");
      break;
    }
  }
  if (rep.lengths_ok) {
    for (int t = f.n / 4; rep.prefixes_ok && t < f.n / 2; ++t) {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < f.words.size(); ++i) {
        if (!seen.insert(prefix_element(f.words[i], t)).second) {
          rep.prefixes_ok = false;
          note("prefix collision at t=" + std::to_string(t) + " on word " +
               std::to_string(i) + " (" + f.words[i] + ")");
          break;
        }
      }
    }
  }
  if (static_cast<double>(f.words.size()) < std::exp2(kLemmaLog2Alpha * f.n)) {
    rep.size_ok = false;
    note("family size " + std::to_string(f.words.size()) + " below alpha^n = 2^(" +
         std::to_string(f.n) + "/4)");
  }
  return rep;
}

}  // namespace f2wp
