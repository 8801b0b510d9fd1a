#pragma once

#include <functional>
#include <type_traits>
#include <utility>
#include <variant>

#include "refocus/direct_sos.hpp"

namespace refocus {

// One-step reduction in continuation-passing style, two ways.
//
// reduce3_c threads an undelimited continuation: the answer type is chosen by
// the caller and errors travel outward through every continuation.
// reduce2_c threads a delimited continuation (answers are always
// ValueOrTermOrStuck) and returns the error directly without applying it.

template <typename Answer>
using Observer = std::function<Answer(ValueOrTermOrStuck)>;

namespace detail {

template <typename Answer>
Answer reduce3_c(const Term& t, const Observer<Answer>& k) {
  if (t.is_literal()) {
    return k(Value{t.literal()});
  }
  const Operation& o = t.operation();
  return reduce3_c<Answer>(o.left, Observer<Answer>([&o, k](ValueOrTermOrStuck r1) -> Answer {
    if (std::holds_alternative<Stuck>(r1)) {
      return k(std::move(r1));
    }
    if (auto* n1 = std::get_if<Next>(&r1)) {
      return k(Next{Term::opr(std::move(n1->term), o.op, o.right)});
    }
    const Value v1 = std::get<Value>(r1);
    return reduce3_c<Answer>(o.right, Observer<Answer>([&o, k, v1](ValueOrTermOrStuck r2) -> Answer {
      if (std::holds_alternative<Stuck>(r2)) {
        return k(std::move(r2));
      }
      if (auto* n2 = std::get_if<Next>(&r2)) {
        return k(Next{Term::opr(term_of_value(v1), o.op, std::move(n2->term))});
      }
      ContractumOrError c = contract(PotentialRedex{o.op, v1, std::get<Value>(r2)});
      if (auto* ok = std::get_if<Contractum>(&c)) {
        return k(Next{std::move(ok->term)});
      }
      return k(Stuck{std::get<ContractError>(c).message});
    }));
  }));
}

}  // namespace detail

/// The answer type is whatever `k` returns.
template <typename K>
auto reduce3_c(const Term& t, K&& k) {
  using Answer = std::invoke_result_t<K&, ValueOrTermOrStuck>;
  return detail::reduce3_c<Answer>(t, Observer<Answer>(std::forward<K>(k)));
}

ValueOrTermOrStuck reduce3(const Term& t);

using ValueOrTerm = std::variant<Value, Next>;
using DelimitedK = std::function<ValueOrTermOrStuck(ValueOrTerm)>;

ValueOrTermOrStuck reduce2_c(const Term& t, const DelimitedK& k);
ValueOrTermOrStuck reduce2(const Term& t);

NormalResult normalize_cps3(const Term& t);
NormalResult normalize_cps2(const Term& t);

}  // namespace refocus
