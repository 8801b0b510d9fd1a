#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "refocus/context.hpp"
#include "refocus/direct_sos.hpp"

namespace refocus {

struct DecompositionKC {
  PotentialRedex pr;
  Context context;  // inside-out
  friend bool operator==(const DecompositionKC&, const DecompositionKC&) = default;
};

using ValueOrDecompositionKC = std::variant<Value, DecompositionKC>;

/// Per-run instrumentation. Never shared between runs.
struct VisitCounter {
  std::size_t decompose_visits = 0;  // term nodes entered by decomposition
  std::size_t recompose_steps = 0;   // frames plugged by recomposition
  friend bool operator==(const VisitCounter&, const VisitCounter&) = default;
};

Term recompose_io(const Context& inside_out, Term t);
Term recompose_io(const Context& inside_out, Term t, VisitCounter& counter);

Term recompose_oi(const Context& outside_in, Term t);

/// Two-mode loop: term mode descends into the left operand pushing
/// LeftOf frames; context mode consumes the head frame with a value, either
/// switching to the right operand or yielding a potential redex.
ValueOrDecompositionKC decompose_term_kc(const Term& t, const Context& inside_out);
ValueOrDecompositionKC decompose_term_kc(const Term& t, Context&& inside_out);
ValueOrDecompositionKC decompose_term_kc(const Term& t, const Context& inside_out, VisitCounter& counter);
ValueOrDecompositionKC decompose_term_kc(const Term& t, Context&& inside_out, VisitCounter& counter);

ValueOrDecompositionKC decompose_kc(const Term& t);

ValueOrTermOrStuck reduce_kc(const Term& t);

/// Reduction-based: contract, recompose the whole reduct, decompose from the root.
NormalResult iterate_kc_rb(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter);
/// Reduction-free: contract, then decompose the contractum in its context.
NormalResult iterate_kc_rf(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter);

NormalResult normalize_kc_rb(const Term& t);
NormalResult normalize_kc_rf(const Term& t);

struct CountedResult {
  NormalResult result;
  VisitCounter counter;
};

CountedResult normalize_kc_rb_counted(const Term& t);
CountedResult normalize_kc_rf_counted(const Term& t);

/// Reducts materialized by the reduction-based loop.
Trace trace_kc_rb(const Term& t);

struct RefocusTrace {
  std::vector<DecompositionKC> decompositions;
  NormalResult result;
};

/// Every decomposition visited by the reduction-free loop, in order.
RefocusTrace trace_kc_rf(const Term& t);

/// decompose_kc(recompose_io(C, t)) == decompose_term_kc(t, C)
bool refocus_property(const Context& inside_out, const Term& t);

/// Fixed probe set for extensional comparisons: all terms with at most one
/// operator and literals in 0..2, in enumeration order.
const std::vector<Term>& corr_probe_terms();

/// Checks that decompose_kk and decompose_kc find the same potential redex and
/// that the recomposing continuation agrees with recompose_io on the probe
/// set. Returns false if either side yields a value.
bool probe_corr(const Term& t);

}  // namespace refocus
