#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "refocus/context.hpp"
#include "refocus/syntax.hpp"

namespace refocus {

// Eval/continue abstract machine: the reduction-free loop fused with the two
// modes of first-order decomposition, with contraction inlined.

struct EvalMode {
  Term term;
  Context context;
  friend bool operator==(const EvalMode&, const EvalMode&) = default;
};

struct ContinueMode {
  Context context;
  Value value;
  friend bool operator==(const ContinueMode&, const ContinueMode&) = default;
};

struct FinalVal {
  Value value;
  friend bool operator==(const FinalVal&, const FinalVal&) = default;
};

struct FinalWrong {
  std::string message;
  friend bool operator==(const FinalWrong&, const FinalWrong&) = default;
};

using MachineState = std::variant<EvalMode, ContinueMode, FinalVal, FinalWrong>;

bool is_final(const MachineState& s) noexcept;

/// Thrown by machine_step on a final state and by machine_run when the step
/// budget runs out.
class MachineFault : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

MachineState machine_step(MachineState s);

inline std::size_t machine_step_budget(const Term& t) noexcept { return 4 * op_count(t) + 3; }

struct MachineRun {
  NormalResult result;
  std::size_t steps = 0;
};

MachineRun machine_run(const Term& t);

/// Every state from EvalMode(t, []) up to and including the final one.
std::vector<MachineState> machine_trace(const Term& t);

/// Potential redexes contracted along a run, in order; includes the one that
/// underflows, if any.
std::vector<PotentialRedex> machine_redexes(const Term& t);

std::string print(const MachineState& s);

/// Compositional evaluator with short-circuiting errors.
NormalResult big_step_eval(const Term& t);

}  // namespace refocus
