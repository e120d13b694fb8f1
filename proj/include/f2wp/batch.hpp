// Batch execution over word lists. Simulations are independent, so the
// kernels parallelize over words with OpenMP and aggregate results in input
// order. The serial forms are the reference implementation: tests assert the
// parallel kernels match them element for element, and tools/batch_bench
// compares their throughput.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f2wp/simulator.hpp"

namespace f2wp {

std::vector<RunOutcome> run_words_serial(const MachineSpec& m,
                                         const std::vector<std::string>& inputs,
                                         std::int64_t budget);

std::vector<RunOutcome> run_words(const MachineSpec& m, const std::vector<std::string>& inputs,
                                  std::int64_t budget);

std::vector<RunTrace> trace_words_serial(const MachineSpec& m,
                                         const std::vector<std::string>& inputs,
                                         std::int64_t budget);

std::vector<RunTrace> trace_words(const MachineSpec& m, const std::vector<std::string>& inputs,
                                  std::int64_t budget);

std::vector<RunOutcome> run_words_two_tape(const TwoTapeSpec& m,
                                           const std::vector<std::string>& inputs,
                                           std::int64_t budget);

}  // namespace f2wp
