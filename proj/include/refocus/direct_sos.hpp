#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "refocus/syntax.hpp"

namespace refocus {

/// One-step reduction produced a reduct.
struct Next {
  Term term;
  friend bool operator==(const Next&, const Next&) = default;
};

/// One-step reduction hit a potential redex that is not an actual one.
struct Stuck {
  std::string message;
  friend bool operator==(const Stuck&, const Stuck&) = default;
};

using ValueOrTermOrStuck = std::variant<Value, Next, Stuck>;

/// Remaining iteration budget of a normalizer. One unit is spent per
/// examination of the current term, so a term with k operators needs k + 1.
struct Fuel {
  std::size_t remaining = 0;
};

inline Fuel initial_fuel(const Term& t) noexcept { return Fuel{op_count(t) + 1}; }

/// Thrown when a normalizer runs out of fuel with work pending. This is a
/// broken step-count invariant, never a result.
class FuelExhausted : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

NormalResult to_normal_result(const ValueOrTermOrStuck& r);

/// Leftmost-innermost structural one-step reduction.
ValueOrTermOrStuck reduce_d(const Term& t);

NormalResult normalize_d(const Term& t, Fuel fuel);
NormalResult normalize_d(const Term& t);

struct Trace {
  std::vector<Term> reducts;
  NormalResult result;
};

/// The reduction sequence of `t` (reducts only, `t` excluded) and its outcome.
Trace trace_d(const Term& t);

}  // namespace refocus
