#include "f2wp/batch.hpp"

namespace f2wp {

std::vector<RunOutcome> run_words_serial(const MachineSpec& m,
                                         const std::vector<std::string>& inputs,
                                         std::int64_t budget) {
  std::vector<RunOutcome> out(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = run(m, inputs[i], budget);
  return out;
}

std::vector<RunOutcome> run_words(const MachineSpec& m, const std::vector<std::string>& inputs,
                                  std::int64_t budget) {
  std::vector<RunOutcome> out(inputs.size());
  const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = run(m, inputs[i], budget);
  return out;
}

std::vector<RunTrace> trace_words_serial(const MachineSpec& m,
                                         const std::vector<std::string>& inputs,
                                         std::int64_t budget) {
  std::vector<RunTrace> out(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = run_traced(m, inputs[i], budget);
  return out;
}

std::vector<RunTrace> trace_words(const MachineSpec& m, const std::vector<std::string>& inputs,
                                  std::int64_t budget) {
  std::vector<RunTrace> out(inputs.size());
  const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = run_traced(m, inputs[i], budget);
  return out;
}

std::vector<RunOutcome> run_words_two_tape(const TwoTapeSpec& m,
                                           const std::vector<std::string>& inputs,
                                           std::int64_t budget) {
  std::vector<RunOutcome> out(inputs.size());
  const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = run_two_tape(m, inputs[i], budget);
  return out;
}

}  // namespace f2wp
