#pragma once

#include <functional>
#include <variant>

#include "refocus/direct_sos.hpp"

namespace refocus {

// Decomposition with two delimited continuations: a decomposing continuation
// that receives the value of a subterm and keeps searching for the next
// potential redex, and a recomposing continuation that plugs a term back into
// the surrounding reduction context.

struct ValueOrDecompositionKK;

using DecomposingK = std::function<ValueOrDecompositionKK(Value)>;
using RecomposingK = std::function<Term(Term)>;

struct DecompositionKK {
  PotentialRedex pr;
  DecomposingK kd;
  RecomposingK kr;
};

struct ValueOrDecompositionKK {
  std::variant<Value, DecompositionKK> alt;

  bool is_value() const noexcept { return std::holds_alternative<Value>(alt); }
  const Value& value() const { return std::get<Value>(alt); }
  const DecompositionKK& decomposition() const { return std::get<DecompositionKK>(alt); }
};

ValueOrDecompositionKK decompose_term_kk(const Term& t, const DecomposingK& kd, const RecomposingK& kr);

/// Decomposes with kd = inject into Val and kr = identity.
ValueOrDecompositionKK decompose_kk(const Term& t);

ValueOrTermOrStuck reduce_kk(const Term& t);

/// Reduction-based: recompose the contractum into a whole reduct with kr, then
/// decompose that reduct from the root.
NormalResult iterate_kk_rb(ValueOrDecompositionKK d, Fuel fuel);

/// Reduction-free: continue decomposing the contractum in place with the
/// continuations of its redex.
NormalResult iterate_kk_rf(ValueOrDecompositionKK d, Fuel fuel);

NormalResult normalize_kk_rb(const Term& t);
NormalResult normalize_kk_rf(const Term& t);

}  // namespace refocus
