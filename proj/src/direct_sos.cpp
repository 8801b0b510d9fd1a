#include "refocus/direct_sos.hpp"

namespace refocus {

NormalResult to_normal_result(const ValueOrTermOrStuck& r) {
  if (const auto* v = std::get_if<Value>(&r)) {
    return *v;
  }
  if (const auto* s = std::get_if<Stuck>(&r)) {
    return Wrong{s->message};
  }
  throw std::logic_error("to_normal_result: reduct is not a normal form");
}

ValueOrTermOrStuck reduce_d(const Term& t) {
  if (t.is_literal()) {
    return Value{t.literal()};
  }
  const Operation& o = t.operation();
  ValueOrTermOrStuck r1 = reduce_d(o.left);
  if (std::holds_alternative<Stuck>(r1)) {
    return r1;
  }
  if (auto* n1 = std::get_if<Next>(&r1)) {
    return Next{Term::opr(std::move(n1->term), o.op, o.right)};
  }
  const Value v1 = std::get<Value>(r1);
  ValueOrTermOrStuck r2 = reduce_d(o.right);
  if (std::holds_alternative<Stuck>(r2)) {
    return r2;
  }
  if (auto* n2 = std::get_if<Next>(&r2)) {
    return Next{Term::opr(term_of_value(v1), o.op, std::move(n2->term))};
  }
  const Value v2 = std::get<Value>(r2);
  ContractumOrError c = contract(PotentialRedex{o.op, v1, v2});
  if (auto* ok = std::get_if<Contractum>(&c)) {
    return Next{std::move(ok->term)};
  }
  return Stuck{std::get<ContractError>(c).message};
}

namespace {

template <typename OnReduct>
NormalResult iterate_d(Term t, Fuel fuel, OnReduct&& on_reduct) {
  for (;;) {
    if (fuel.remaining == 0) {
      throw FuelExhausted("normalize_d: out of fuel");
    }
    --fuel.remaining;
    ValueOrTermOrStuck r = reduce_d(t);
    if (auto* n = std::get_if<Next>(&r)) {
      on_reduct(n->term);
      t = std::move(n->term);
      continue;
    }
    return to_normal_result(r);
  }
}

}  // namespace

NormalResult normalize_d(const Term& t, Fuel fuel) {
  return iterate_d(t, fuel, [](const Term&) {});
}

NormalResult normalize_d(const Term& t) { return normalize_d(t, initial_fuel(t)); }

Trace trace_d(const Term& t) {
  std::vector<Term> reducts;
  NormalResult result = iterate_d(t, initial_fuel(t), [&](const Term& r) { reducts.push_back(r); });
  return Trace{std::move(reducts), std::move(result)};
}

}  // namespace refocus
